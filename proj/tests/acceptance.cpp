// Acceptance suite: one check per advertised guarantee, each printing a
// PASS/FAIL line. Run via ctest or directly; the binary exits non-zero on
// any failure.

#include <catch2/catch_amalgamated.hpp>

#include <iostream>
#include <random>
#include <set>

#include "strongca/hyper/halting.hpp"
#include "strongca/instances.hpp"
#include "strongca/line_tables.hpp"
#include "strongca/spacetime.hpp"
#include "strongca/tag.hpp"
#include "strongca/verify.hpp"

using namespace strongca;

namespace {

void line(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS  " : "FAIL  ") << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
}

const std::vector<Instance>& shared_instances() {
  static const std::vector<Instance> insts =
      find_halting_instances(4, 5, /*left_clean=*/true, 4);
  return insts;
}

}  // namespace

TEST_CASE("1. collision fidelity") {
  Report rep = verify_collisions();
  int blocks36 = 0, uzone = 0;
  bool ok = true;
  for (auto& f : rep.findings) {
    if (f.check.rfind("collision ", 0) == 0) ++blocks36;
    if (f.check.rfind("zone collision", 0) == 0) ++uzone;
    if (!f.ok) {
      ok = false;
      INFO(f.check << ": " << f.detail);
    }
    CHECK(f.ok);
  }
  line("1 collision fidelity (36 blocks + 4 zone blocks)", ok && blocks36 == 36,
       std::to_string(blocks36) + " blocks, " + std::to_string(uzone / 2) +
           " zone blocks");
  CHECK(blocks36 == 36);
  CHECK(uzone == 8);
}

TEST_CASE("2. stopping machinery fidelity") {
  Report rep = verify_stopping_fixtures();
  for (auto& f : rep.findings) {
    INFO(f.check << ": " << f.detail);
    CHECK(f.ok);
  }
  line("2 stopping machinery fixtures", rep.all_ok(),
       std::to_string(rep.findings.size()) + " panels");
}

TEST_CASE("3. strong universality on the line") {
  const auto& m = minsky_utm();
  const auto& cat = minsky_catalog();
  const auto& insts = shared_instances();
  REQUIRE(insts.size() >= 3);
  bool all = true;
  std::string detail;
  for (auto& inst : insts) {
    REQUIRE(inst.tm_steps <= 500);
    auto res = cosimulate(m, ln11_table(), inst.config(), inst.incoming,
                          inst.tm_steps + 4, cat, 40L * inst.tm_steps + 4000);
    // fixpoint + full trace equality + exactly 11 declared states available
    bool ok = res.ok && res.ca_halted;
    std::set<char> used;
    // re-run collecting states
    LineConfiguration cur = encode_tm(inst.config(), cat, inst.incoming);
    for (auto& [p, s] : cur.support) used.insert(s);
    for (long i = 0; i < 40L * inst.tm_steps + 4000; ++i) {
      auto nx = ca_step(ln11_table(), cur);
      if (std::holds_alternative<MissingRule>(nx)) break;
      auto& nc = std::get<LineConfiguration>(nx);
      if (nc == cur) break;
      cur = std::move(nc);
      for (auto& [p, s] : cur.support) used.insert(s);
    }
    used.insert('.');
    ok = ok && used.size() <= 11;
    INFO(inst.tape << "@" << inst.head << " s" << inst.state << inst.incoming
                   << " " << res.detail << " states=" << used.size());
    CHECK(ok);
    all = all && ok;
    detail += inst.tape + "(" + std::to_string(inst.tm_steps) + ") ";
  }
  line("3 eleven-state line automaton: fixpoint + trace equality", all, detail);
}

TEST_CASE("4. nine-state halting variant") {
  const auto& cat = minsky_catalog();
  const auto& insts = shared_instances();
  REQUIRE(insts.size() >= 3);
  bool all = true;
  for (auto& inst : insts) {
    LineConfiguration cfg = encode_tm(inst.config(), cat, inst.incoming);
    RunResult res =
        ca_run_until_halt(ln9_halting_table(), cfg, 40L * inst.tm_steps + 4000,
                          /*keep_trace=*/false);
    bool ok = res.status == RunStatus::halted && res.trace.back().empty();
    INFO(inst.tape << ": " << (res.error ? res.error->describe() : ""));
    CHECK(ok);
    all = all && ok;
    // the plain nine-state table must NOT reach a fixpoint on the same run
    RunResult r9 = ca_run_until_halt(ln9_table(), cfg, 40L * inst.tm_steps + 4000,
                                     false);
    CHECK(r9.status == RunStatus::budget_exhausted);
    all = all && r9.status == RunStatus::budget_exhausted;
  }
  auto loop = find_looping_instance();
  REQUIRE(loop);
  LineConfiguration cfg = encode_tm(loop->config(), cat, loop->incoming);
  RunResult res = ca_run_until_halt(ln9_halting_table(), cfg, 40000, false);
  bool loop_ok = res.status == RunStatus::budget_exhausted;
  CHECK(loop_ok);
  line("4 nine-state halting variant: all-blank fixpoint / non-halting stays live",
       all && loop_ok);
}

TEST_CASE("5. lifted tag systems agree with the extended ones") {
  std::mt19937 rng(424242);
  int conclusive = 0, failures = 0, trials = 0;
  while (conclusive < 50 && trials < 4000) {
    ++trials;
    ExtendedTagSystem E;
    auto word = [&](int maxlen, const std::string& letters) {
      Word w;
      int n = rng() % (maxlen + 1);
      for (int i = 0; i < n; ++i) w += letters[rng() % letters.size()];
      return w;
    };
    E.base.alphabet = {'a', 'b', 'c', 'h', 't'};
    E.base.halting = {'h'};
    E.terminal = {'t'};
    E.base.productions['a'] = word(3, "abcth");
    E.base.productions['b'] = word(3, "abcth");
    E.base.productions['c'] = word(3, "abct");
    E.base.productions['h'] = word(2, "t");
    Word w = word(5, "abc") + "ab";
    LemmaReport r = verify_lemma(E, w, 200, 't');
    if (r.conclusive) {
      ++conclusive;
      if (!r.agree) {
        ++failures;
        INFO(r.detail);
      }
      CHECK(r.agree);
    }
  }
  REQUIRE(conclusive >= 50);
  line("5 lifted tag systems (50 conclusive trials)", failures == 0,
       std::to_string(conclusive) + " conclusive / " + std::to_string(trials) +
           " trials");
}

TEST_CASE("6. rotation invariance and the dodecahedral group") {
  using namespace hyp;
  bool all = true;
  for (auto kind : {GridKind::pentagrid, GridKind::heptagrid, GridKind::dodecagrid}) {
    RotationGroup g = rotation_group(kind);
    auto fp = check_rotation_invariance(p_table(kind), g);
    auto fq = check_rotation_invariance(q_table(kind), g);
    for (auto& f : fp) INFO(std::string(kind_name(kind)) + " P: " + f.what);
    for (auto& f : fq) INFO(std::string(kind_name(kind)) + " Q: " + f.what);
    CHECK(fp.empty());
    CHECK(fq.empty());
    all = all && fp.empty() && fq.empty();
  }
  RotationGroup g = rotation_group(GridKind::dodecagrid);
  bool grp = g.order() == 60 && g.closed_under_composition();
  CHECK(grp);
  line("6 rotation invariance of all six tables + group order 60", all && grp);
}

TEST_CASE("7. strong universality on the grids") {
  using namespace hyp;
  const auto& insts = shared_instances();
  REQUIRE(!insts.empty());
  const Instance& inst = insts.front();
  bool all = true;
  std::string detail;
  for (auto kind : {GridKind::pentagrid, GridKind::heptagrid, GridKind::dodecagrid}) {
    QInstance qi{inst.config(), inst.incoming};
    HaltingReport rep = verify_halting(kind, qi, 6000);
    INFO(std::string(kind_name(kind)) + ": " + rep.detail);
    CHECK(rep.ok);
    all = all && rep.ok;
    detail += std::string(kind_name(kind)) + "=" +
              std::to_string(rep.states_used) + "states ";
  }
  line("7 ten-state grid automata: fixpoint + equivalence + state budget", all,
       detail);
}

TEST_CASE("8. growth speeds") {
  // line background: one cell per two steps over 40 steps
  LineConfiguration c;
  c.support[0] = 'U';
  c.support[1] = 'U';
  long start = 1;
  LineConfiguration cur = c;
  for (int i = 0; i < 40; ++i)
    cur = std::get<LineConfiguration>(ca_step(ln9_table(), cur));
  bool line_ok = cur.hi() - start == 20;
  CHECK(line_ok);

  using namespace hyp;
  bool grids_ok = true;
  for (auto kind : {GridKind::pentagrid, GridKind::heptagrid, GridKind::dodecagrid}) {
    TilingPatch patch = build_patch(kind, -3, 20);
    RotationGroup g = rotation_group(kind);
    RotRuleTable t = p_table(kind);
    t.build(g, true);
    GridRunResult res = hyp_run(patch, t, g, p_initial(patch), 24);
    bool ok = res.status == GridRunStatus::budget_exhausted;
    const char* row = kind == GridKind::dodecagrid ? "ya" : "y";
    if (ok) {
      // tip advanced from slot 1 to slot 13 in 24 steps
      const GridState& st = res.trace[24];
      ok = st.at(patch.id(row, 13)) == 'G';
    }
    INFO(kind_name(kind));
    CHECK(ok);
    grids_ok = grids_ok && ok;
  }
  line("8 growth speeds (line and grids, one cell per two steps)",
       line_ok && grids_ok);
}

TEST_CASE("9. structural properties") {
  // quiescence
  bool quiesc = true;
  for (auto* t : {&ln7_table(), &ln9_table(), &ln9_halting_table(), &ln11_table()})
    quiesc = quiesc && t->lookup('.', '.', '.') == '.';
  CHECK(quiesc);
  using namespace hyp;
  for (auto kind : {GridKind::pentagrid, GridKind::heptagrid, GridKind::dodecagrid}) {
    RotationGroup g = rotation_group(kind);
    RotRuleTable t = q_table(kind);
    t.build(g, true);
    std::vector<char> blank(valence(kind), 'W');
    auto r = t.lookup(g, 'W', blank);
    bool ok = r && *r == 'W';
    CHECK(ok);
    quiesc = quiesc && ok;
  }

  // speed of light on a line run
  const auto& cat = minsky_catalog();
  const auto& insts = shared_instances();
  REQUIRE(!insts.empty());
  bool sol = true;
  LineConfiguration cur = encode_tm(insts[0].config(), cat, insts[0].incoming);
  for (int i = 0; i < 300; ++i) {
    auto nx = ca_step(ln11_table(), cur);
    if (std::holds_alternative<MissingRule>(nx)) break;
    auto& nc = std::get<LineConfiguration>(nx);
    if (!nc.empty() && !cur.empty())
      sol = sol && nc.lo() >= cur.lo() - 1 && nc.hi() <= cur.hi() + 1;
    if (nc == cur) break;
    cur = std::move(nc);
  }
  CHECK(sol);

  // encode/decode round trip on 100 random configurations
  std::mt19937 rng(777);
  std::string syms = "01yA";
  int round = 0;
  for (int i = 0; round < 100; ++i) {
    REQUIRE(i < 1000);
    TmConfiguration c;
    c.state = 1 + rng() % 7;
    char inc = rng() % 2 ? 'L' : 'R';
    if (!cat.code_for(c.state, inc)) continue;
    c.scanned = syms[rng() % 4];
    for (int k = rng() % 4; k > 0; --k) c.left += syms[rng() % 4];
    for (int k = rng() % 4; k > 0; --k) c.right += syms[rng() % 4];
    c.normalize('0');
    LineConfiguration e = encode_tm(c, cat, inc);
    auto d = decode_ca(e, cat);
    auto* dd = std::get_if<DecodedTm>(&d);
    bool ok = dd && dd->has_head && dd->config == c;
    CHECK(ok);
    if (!ok) break;
    ++round;
  }

  // collar soundness across a grid acceptance run is asserted inside
  // hyp_run (status would be collar_violation); re-run one to confirm
  using namespace hyp;
  QInstance qi{insts[0].config(), insts[0].incoming};
  HaltingReport rep = verify_halting(GridKind::pentagrid, qi, 6000);
  bool collar = rep.detail.find("boundary") == std::string::npos;
  CHECK(collar);

  line("9 structural properties (quiescence, light speed, round trip, collar)",
       quiesc && sol && round == 100 && collar);
}
