#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "strongca/line_tables.hpp"
#include "strongca/spacetime.hpp"

using namespace strongca;

namespace {

std::string read_data_file(const std::string& name) {
  std::ifstream in(std::string(STRONGCA_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LineConfiguration from_string(const std::string& s, long origin = 0) {
  LineConfiguration c;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] != '.') c.support[origin + static_cast<long>(i)] = s[i];
  return c;
}

}  // namespace

TEST_CASE("bundled tables parse and validate") {
  CHECK(ln7_table().alphabet.size() == 7);
  CHECK(ln9_table().alphabet.size() == 9);
  CHECK(ln9_halting_table().alphabet.size() == 9);
  CHECK(ln11_table().alphabet.size() == 11);
}

TEST_CASE("embedded tables match the data files byte for byte") {
  CHECK(read_data_file("ln7.rules") == data::ln7_rules);
  CHECK(read_data_file("ln9.rules") == data::ln9_rules);
  CHECK(read_data_file("ln9halt.rules") == data::ln9halt_rules);
  CHECK(read_data_file("ln11.rules") == data::ln11_rules);
  CHECK(read_data_file("minsky.tm") == data::minsky_tm);
  CHECK(read_data_file("dodec_adjacency.txt") == data::dodec_adjacency);
}

TEST_CASE("pinned rule entries") {
  CHECK(ln7_table().lookup('T', '.', '0') == 'B');
  CHECK(ln7_table().lookup('0', 'T', 'y') == '0');
  CHECK(ln11_table().lookup('0', 'T', 'y') == '3');
  CHECK(ln11_table().lookup('3', 'y', '.') == 'U');
  CHECK(ln9_halting_table().lookup('0', 'T', 'y') == '4');
  CHECK(ln9_halting_table().lookup('4', '0', '.') == '4');
  CHECK(ln9_halting_table().lookup('4', '1', '.') == '4');
  CHECK(ln9_halting_table().lookup('4', 'y', '.') == '4');
  CHECK(ln9_halting_table().lookup('4', 'A', '.') == '4');
  CHECK(ln9_halting_table().lookup('4', '.', 'U') == 'A');
  CHECK(ln9_table().lookup('4', 'U', 'U') == '.');
  CHECK(ln9_table().lookup('y', 'U', 'U') == '4');
}

TEST_CASE("quiescence for every bundled table") {
  for (auto* t : {&ln7_table(), &ln9_table(), &ln9_halting_table(), &ln11_table()})
    CHECK(t->lookup(t->quiescent, t->quiescent, t->quiescent) == t->quiescent);
}

TEST_CASE("the nine-state variants differ from the seven-state core as stated") {
  // ln9 restricted to the seven-state alphabet is exactly ln7; ln11
  // additionally replaces 0Ty -> 0 by 0Ty -> 3.
  const auto& seven = ln7_table();
  const auto& nine = ln9_table();
  std::string seven_states = ".01yABT";
  for (auto& [ctx, n] : nine.rules) {
    bool in7 = true;
    for (char c : {ctx[0], ctx[1], ctx[2], n})
      if (seven_states.find(c) == std::string::npos) in7 = false;
    if (!in7) continue;
    auto it = seven.rules.find(ctx);
    REQUIRE(it != seven.rules.end());
    CHECK(it->second == n);
  }
}

TEST_CASE("single step and quiescent stability") {
  const auto& t = ln7_table();
  SECTION("context lookup drives the update") {
    LineConfiguration c = from_string("0T.0", 1);
    auto r = ca_step(t, c);
    auto& n = std::get<LineConfiguration>(r);
    // printed evolution: 0 T . 0  ->  . 0 B 0
    CHECK(n.at(1, '.') == '.');
    CHECK(n.at(2, '.') == '0');
    CHECK(n.at(3, '.') == 'B');
    CHECK(n.at(4, '.') == '0');
  }
  SECTION("all-quiescent stays quiescent") {
    LineConfiguration c;
    auto r = ca_step(t, c);
    CHECK(std::get<LineConfiguration>(r).empty());
  }
  SECTION("missing context is a hard error with location") {
    RuleTable1D tiny;
    tiny.alphabet = {'.', 'a'};
    tiny.rules[{'.', '.', '.'}] = '.';
    tiny.validate();
    LineConfiguration c = from_string("a", 5);
    auto r = ca_step(tiny, c);
    auto* err = std::get_if<MissingRule>(&r);
    REQUIRE(err);
    CHECK(err->position == 4);
    CHECK(err->context == std::array<char, 3>{'.', '.', 'a'});
  }
}

TEST_CASE("fixpoint halting") {
  const auto& t = ln11_table();
  SECTION("empty configuration halts immediately") {
    RunResult r = ca_run_until_halt(t, {}, 10);
    CHECK(r.status == RunStatus::halted);
    CHECK(r.trace.size() == 2);
  }
  SECTION("background growth never halts") {
    LineConfiguration c = from_string("UU");
    RunResult r = ca_run_until_halt(ln9_table(), c, 60);
    CHECK(r.status == RunStatus::budget_exhausted);
  }
}

TEST_CASE("speed of light") {
  // support can grow by at most one cell per side per step
  const auto& t = ln11_table();
  LineConfiguration c = from_string("0T.y..UUU");
  for (int i = 0; i < 40; ++i) {
    auto r = ca_step(t, c);
    auto& n = std::get<LineConfiguration>(r);
    if (!n.empty() && !c.empty()) {
      CHECK(n.lo() >= c.lo() - 1);
      CHECK(n.hi() <= c.hi() + 1);
    }
    c = n;
  }
}

TEST_CASE("background frontier speed is one cell per two steps") {
  LineConfiguration c = from_string("UU");
  long start = c.hi();
  LineConfiguration cur = c;
  for (int i = 1; i <= 44; ++i) {
    cur = std::get<LineConfiguration>(ca_step(ln9_table(), cur));
    long adv = cur.hi() - start;
    // frontier after i steps: exactly floor(i/2) cells, give or take the
    // transient marker cell
    CHECK(adv >= i / 2);
    CHECK(adv <= i / 2 + 1);
  }
  // exact measurement over 40 steps
  LineConfiguration a = from_string("UU");
  for (int i = 0; i < 40; ++i) a = std::get<LineConfiguration>(ca_step(ln9_table(), a));
  CHECK(a.hi() - start == 20);
}

TEST_CASE("rule file round trip") {
  const auto& t = ln11_table();
  RuleTable1D t2 = parse_rules_1d(serialize_rules_1d(t));
  CHECK(t2.rules == t.rules);
  CHECK(t2.alphabet == t.alphabet);
}

TEST_CASE("config file round trip") {
  LineConfiguration c = from_string("0.1y", -3);
  std::string s = serialize_config_1d(c);
  LineConfiguration c2 = parse_config_1d(s);
  CHECK(c == c2);
}

TEST_CASE("space-time rendering") {
  SECTION("empty trace renders dots") {
    std::vector<LineConfiguration> tr(2);
    std::string s = render_spacetime(tr);
    CHECK(s == ". . . . .\n. . . . .\n");
  }
  SECTION("window covers the whole trace") {
    std::vector<LineConfiguration> tr{from_string("a", 0), from_string("a", 5)};
    Window w = trace_window(tr);
    CHECK(w.lo == -2);
    CHECK(w.hi == 7);
  }
}
