#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "strongca/encoding.hpp"
#include "strongca/instances.hpp"
#include "strongca/line_tables.hpp"

using namespace strongca;

namespace {

std::string line_str(const LineConfiguration& c) {
  if (c.empty()) return "";
  std::string s;
  for (long p = c.lo(); p <= c.hi(); ++p) s += c.at(p, '.');
  return s;
}

}  // namespace

TEST_CASE("encoding places the impulsion next to the scanned slot") {
  const auto& cat = minsky_catalog();
  SECTION("right impulsion: code T gap symbol") {
    TmConfiguration c;
    c.state = 5;  // right code '0'
    c.scanned = '0';
    LineConfiguration e = encode_tm(c, cat, 'R', {.with_zone = false});
    CHECK(line_str(e) == "0T.0");
  }
  SECTION("left impulsion: symbol gap T code") {
    TmConfiguration c;
    c.state = 1;  // left code 'y'
    c.scanned = '0';
    LineConfiguration e = encode_tm(c, cat, 'L', {.with_zone = false});
    CHECK(line_str(e) == "0.Ty");
  }
  SECTION("spacing of three between symbols, shifted behind the head") {
    TmConfiguration c;
    c.state = 2;
    c.scanned = '1';
    c.left = "y";
    c.right = "A";
    LineConfiguration e = encode_tm(c, cat, 'R', {.with_zone = false});
    // behind-grid: the rewritten y sits one blank before the code; ahead of
    // the head the usual two-blank spacing
    CHECK(line_str(e) == "y.yT.1..A");
  }
  SECTION("zone cells added past the right end") {
    TmConfiguration c;
    c.state = 5;
    c.scanned = '0';
    LineConfiguration e = encode_tm(c, cat, 'R', {.zone_gap = 2, .zone_len = 3});
    CHECK(line_str(e) == "0T.0..UUU");
  }
  SECTION("no code for the state/direction") {
    TmConfiguration c;
    c.state = 5;
    CHECK_THROWS_AS(encode_tm(c, cat, 'L', {}), parse_error);
  }
}

TEST_CASE("decode inverts encode") {
  const auto& cat = minsky_catalog();
  std::mt19937 rng(31337);
  std::string syms = "01yA";
  int trials = 0;
  for (int i = 0; i < 200; ++i) {
    TmConfiguration c;
    c.state = 1 + rng() % 7;
    char inc = rng() % 2 ? 'L' : 'R';
    if (!cat.code_for(c.state, inc)) continue;
    ++trials;
    c.scanned = syms[rng() % 4];
    int nl = rng() % 4, nr = rng() % 4;
    for (int k = 0; k < nl; ++k) c.left += syms[rng() % 4];
    for (int k = 0; k < nr; ++k) c.right += syms[rng() % 4];
    c.normalize('0');
    LineConfiguration e = encode_tm(c, cat, inc);
    auto d = decode_ca(e, cat);
    auto* dd = std::get_if<DecodedTm>(&d);
    REQUIRE(dd);
    REQUIRE(dd->has_head);
    CHECK(dd->config == c);
  }
  CHECK(trials >= 100);
}

TEST_CASE("mid-collision shapes are flagged") {
  const auto& cat = minsky_catalog();
  // interior row of a collision: adjacent T and code with a symbol attached
  LineConfiguration c;
  c.support[2] = 'T';
  c.support[3] = '1';
  c.support[4] = 'y';
  CHECK(std::holds_alternative<MidCollision>(decode_ca(c, cat)));
  // two Ts
  LineConfiguration c2;
  c2.support[0] = 'T';
  c2.support[4] = 'T';
  CHECK(std::holds_alternative<MidCollision>(decode_ca(c2, cat)));
}

TEST_CASE("zone stripping") {
  LineConfiguration c;
  c.support[0] = '0';
  c.support[5] = 'U';
  c.support[6] = 'U';
  c.support[7] = 'B';
  LineConfiguration s = strip_zone(c);
  CHECK(s.support.size() == 1);
  CHECK(s.at(0, '.') == '0');
}

TEST_CASE("cosimulation matches the machine trace") {
  const auto& m = minsky_utm();
  const auto& cat = minsky_catalog();
  SECTION("zero steps is trivially equivalent") {
    TmConfiguration c;
    c.state = 5;
    c.scanned = '0';
    auto res = cosimulate(m, ln11_table(), c, 'R', 0, cat, 50);
    CHECK(res.ok);
  }
  SECTION("state 7 over an A in state 7") {
    TmConfiguration c;
    c.state = 7;
    c.scanned = 'A';
    c.right = "1";
    auto res = cosimulate(m, ln11_table(), c, 'R', 3, cat);
    INFO(res.detail);
    CHECK(res.ok);
  }
  SECTION("searched instances all cosimulate") {
    auto insts = find_halting_instances(3, 4, false, 25);
    REQUIRE(insts.size() >= 10);
    int ok = 0;
    for (auto& inst : insts) {
      auto res = cosimulate(m, ln11_table(), inst.config(), inst.incoming,
                            inst.tm_steps + 4, cat);
      INFO(inst.tape << "@" << inst.head << " s" << inst.state << inst.incoming
                     << ": " << res.detail);
      CHECK(res.ok);
      ok += res.ok;
    }
    CHECK(ok == static_cast<int>(insts.size()));
  }
}
