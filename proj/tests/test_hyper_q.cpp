#include <catch2/catch_amalgamated.hpp>

#include "strongca/hyper/halting.hpp"
#include "strongca/instances.hpp"

using namespace strongca;
using namespace strongca::hyp;

TEST_CASE("combined tables compile without conflicts") {
  for (auto kind : {GridKind::pentagrid, GridKind::heptagrid, GridKind::dodecagrid}) {
    CompiledQ q = compile_q(kind, ln9_table());
    for (auto& c : q.conflicts)
      INFO(kind_name(kind) << ": " << state_name(c.a.cell) << " line "
                           << c.a.source_line << " vs " << c.b.source_line);
    CHECK(q.conflicts.empty());
  }
}

TEST_CASE("pinned combined rules") {
  RotationGroup g = rotation_group(GridKind::pentagrid);
  CompiledQ q = compile_q(GridKind::pentagrid, ln9_table());
  // the halt context raises the stopping signal on the grid
  auto r = q.table.lookup(g, 'T', {'T', '0', 'B', 'B', 'y'});
  REQUIRE(r);
  CHECK(*r == 'G');
  // a compiled line rule: (., 0, .) -> 0 persists under the signature
  r = q.table.lookup(g, '0', {'T', 'W', 'B', 'B', 'W'});
  REQUIRE(r);
  CHECK(*r == '0');

  RotationGroup gh = rotation_group(GridKind::heptagrid);
  CompiledQ qh = compile_q(GridKind::heptagrid, ln9_table());
  r = qh.table.lookup(gh, 'T', {'T', '0', 'B', 'W', 'B', 'y', 'T'});
  REQUIRE(r);
  CHECK(*r == 'G');

  RotationGroup gd = rotation_group(GridKind::dodecagrid);
  CompiledQ qd = compile_q(GridKind::dodecagrid, ln9_table());
  std::vector<char> ctx(12, 'W');
  ctx[0] = 'T'; ctx[1] = 'B'; ctx[2] = 'y'; ctx[5] = '0';
  ctx[6] = 'B'; ctx[7] = 'B';
  r = qd.table.lookup(gd, 'T', ctx);
  REQUIRE(r);
  CHECK(*r == 'G');
  // bundled: a blank with a single green neighbor becomes the halo state
  std::vector<char> ctx2(12, 'W');
  ctx2[0] = 'G';
  r = qd.table.lookup(gd, 'W', ctx2);
  REQUIRE(r);
  CHECK(*r == 'P');
}

TEST_CASE("initial configuration projects back to the encoded line") {
  const auto& cat = minsky_catalog();
  TmConfiguration c;
  c.state = 5;
  c.scanned = '0';
  c.right = "1";
  LineConfiguration line = encode_tm(c, cat, 'R', {.with_zone = false});
  LineConfiguration shifted;
  long lo = line.lo();
  for (auto& [p, s] : line.support) shifted.support[p - lo] = s;
  TilingPatch patch = build_patch(GridKind::pentagrid, -2, 40);
  GridState st = q_initial(patch, shifted);
  LineConfiguration proj = project_yellow(patch, st);
  CHECK(proj == shifted);
}

TEST_CASE("grid halting runs") {
  auto insts = find_halting_instances(3, 5, true, 2);
  REQUIRE(!insts.empty());
  for (auto kind : {GridKind::pentagrid, GridKind::heptagrid, GridKind::dodecagrid}) {
    SECTION(kind_name(kind)) {
      QInstance qi{insts[0].config(), insts[0].incoming};
      HaltingReport rep = verify_halting(kind, qi, 4000);
      INFO(rep.detail);
      CHECK(rep.ok);
      CHECK(rep.states_used <= 10);
    }
  }
}
