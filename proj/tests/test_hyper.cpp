#include <catch2/catch_amalgamated.hpp>

#include "strongca/hyper/engine.hpp"
#include "strongca/hyper/rotation.hpp"
#include "strongca/hyper/scenario.hpp"
#include "strongca/hyper/tables.hpp"

using namespace strongca;
using namespace strongca::hyp;

TEST_CASE("patch construction") {
  SECTION("pentagrid: five neighbors each, symmetric adjacency") {
    TilingPatch p = build_patch(GridKind::pentagrid, -2, 10);
    for (auto& nb : p.neighbors) CHECK(nb.size() == 5);
    // four faces around the on-line vertex: y[i], y[i+1], r[i], r[i+1]
    // pairwise adjacencies: y-y, r-r, y[i]-r[i]
    int yi = p.id("y", 3), yj = p.id("y", 4), ri = p.id("r", 3), rj = p.id("r", 4);
    auto adj = [&](int a, int b) {
      for (int n : p.neighbors[a])
        if (n == b) return true;
      return false;
    };
    CHECK(adj(yi, yj));
    CHECK(adj(ri, rj));
    CHECK(adj(yi, ri));
    CHECK_FALSE(adj(yi, rj));
    // flag row: a[i] adjacent to b[i-1] and to y[i]
    CHECK(adj(p.id("a", 4), p.id("b", 3)));
    CHECK(adj(p.id("a", 4), p.id("y", 4)));
    CHECK_FALSE(adj(p.id("a", 4), p.id("b", 4)));
  }
  SECTION("heptagrid: seven neighbors, yellows touch two reds") {
    TilingPatch p = build_patch(GridKind::heptagrid, -2, 10);
    for (auto& nb : p.neighbors) CHECK(nb.size() == 7);
    auto adj = [&](int a, int b) {
      for (int n : p.neighbors[a])
        if (n == b) return true;
      return false;
    };
    CHECK(adj(p.id("y", 3), p.id("r", 3)));
    CHECK(adj(p.id("y", 3), p.id("r", 4)));
    CHECK(adj(p.id("y", 3), p.id("y", 4)));
    CHECK(adj(p.id("r", 3), p.id("r", 4)));
    CHECK(adj(p.id("f", 3), p.id("y", 2)));
    CHECK(adj(p.id("f", 3), p.id("y", 3)));
  }
  SECTION("dodecagrid: twelve neighbors") {
    TilingPatch p = build_patch(GridKind::dodecagrid, -2, 6);
    for (auto& nb : p.neighbors) CHECK(nb.size() == 12);
  }
  SECTION("cell counts match the independent layer-by-layer count") {
    // pentagrid corridor rows: y r a b x d c z = 8 cells per slot
    TilingPatch p = build_patch(GridKind::pentagrid, 0, 3);
    CHECK(p.size() == 8 * 4);
    TilingPatch h = build_patch(GridKind::heptagrid, 0, 3);
    CHECK(h.size() == 6 * 4);
  }
}

TEST_CASE("rotation groups") {
  SECTION("planar groups are the cyclic shifts") {
    RotationGroup g5 = rotation_group(GridKind::pentagrid);
    CHECK(g5.order() == 5);
    RotationGroup g7 = rotation_group(GridKind::heptagrid);
    CHECK(g7.order() == 7);
    CHECK(g5.closed_under_composition());
  }
  SECTION("dodecahedral group has order 60 and is closed") {
    RotationGroup g = rotation_group(GridKind::dodecagrid);
    CHECK(g.order() == 60);
    CHECK(g.closed_under_composition());
    // identity present and first
    for (size_t i = 0; i < 12; ++i) CHECK(g.elements[0][i] == static_cast<int>(i));
  }
  SECTION("every element preserves adjacency") {
    const auto& adj = dodec_face_adjacency();
    RotationGroup g = rotation_group(GridKind::dodecagrid);
    for (auto& p : g.elements)
      for (int f = 0; f < 12; ++f)
        for (int nb : adj[f]) {
          bool found = false;
          for (int x : adj[p[f]])
            if (x == p[nb]) found = true;
          CHECK(found);
        }
  }
}

TEST_CASE("canonical contexts") {
  RotationGroup g5 = rotation_group(GridKind::pentagrid);
  SECTION("cyclic shifts collapse") {
    auto a = canonical_context(g5, {'Y', 'W', 'W', 'W', 'W'});
    auto b = canonical_context(g5, {'W', 'W', 'W', 'Y', 'W'});
    CHECK(a == b);
  }
  SECTION("mirrors stay distinct") {
    auto a = canonical_context(g5, {'Y', 'B', 'W', 'W', 'W'});
    auto b = canonical_context(g5, {'B', 'Y', 'W', 'W', 'W'});
    CHECK(a != b);
  }
  SECTION("all-blank is its own canonical form") {
    std::vector<char> w(5, 'W');
    CHECK(canonical_context(g5, w) == w);
  }
  SECTION("a generic dodecagrid context has 60 distinct images") {
    RotationGroup g = rotation_group(GridKind::dodecagrid);
    std::vector<char> ctx{'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j', 'k', 'l'};
    std::set<std::vector<char>> images;
    std::vector<char> cur(12);
    for (auto& p : g.elements) {
      for (int i = 0; i < 12; ++i) cur[i] = ctx[p[i]];
      images.insert(cur);
    }
    CHECK(images.size() == 60);
  }
}

TEST_CASE("rotation invariance of the bundled tables") {
  for (auto kind : {GridKind::pentagrid, GridKind::heptagrid, GridKind::dodecagrid}) {
    RotationGroup g = rotation_group(kind);
    auto fp = check_rotation_invariance(p_table(kind), g);
    for (auto& f : fp) INFO(kind_name(kind) << " P: " << f.what);
    CHECK(fp.empty());
    auto fq = check_rotation_invariance(q_table(kind), g);
    for (auto& f : fq) INFO(kind_name(kind) << " Q: " << f.what);
    CHECK(fq.empty());
  }
}

TEST_CASE("a corrupted table is reported") {
  RotRuleTable t = p_table(GridKind::pentagrid);
  // flip one new state to clash with a cyclic copy of another rule
  GridRule r = t.rules.front();  // W W W W W W -> W
  r.next = 'R';
  r.source_line = 9999;
  t.rules.push_back(r);
  auto f = check_rotation_invariance(t, rotation_group(GridKind::pentagrid));
  REQUIRE(f.size() == 1);
}

TEST_CASE("line continuation runs") {
  SECTION("pentagrid grows one cell per line every two steps") {
    TilingPatch patch = build_patch(GridKind::pentagrid, -3, 24);
    RotationGroup g = rotation_group(GridKind::pentagrid);
    RotRuleTable t = p_table(GridKind::pentagrid);
    t.build(g, true);
    GridState s0 = p_initial(patch);
    GridRunResult res = hyp_run(patch, t, g, s0, 40);
    std::string diag = res.error ? res.error->describe() : res.collar_detail;
    INFO(diag);
    REQUIRE(res.status == GridRunStatus::budget_exhausted);
    // after 2k steps the yellow tip is at slot 1+k
    for (int k : {4, 10, 19}) {
      const GridState& st = res.trace[2 * k];
      CHECK(st.at(patch.id("y", 1 + k)) == 'G');
      CHECK(st.at(patch.id("r", 1 + k)) == 'G');
      CHECK(st.at(patch.id("y", k)) == 'Y');
      CHECK(st.at(patch.id("r", k)) == 'R');
    }
  }
  SECTION("heptagrid grows one cell per line every two steps") {
    TilingPatch patch = build_patch(GridKind::heptagrid, -3, 24);
    RotationGroup g = rotation_group(GridKind::heptagrid);
    RotRuleTable t = p_table(GridKind::heptagrid);
    t.build(g, true);
    GridState s0 = p_initial(patch);
    GridRunResult res = hyp_run(patch, t, g, s0, 40);
    std::string diag = res.error ? res.error->describe() : res.collar_detail;
    INFO(diag);
    REQUIRE(res.status == GridRunStatus::budget_exhausted);
    for (int k : {4, 10, 19}) {
      const GridState& st = res.trace[2 * k];
      CHECK(st.at(patch.id("y", 1 + k)) == 'G');
      CHECK(st.at(patch.id("y", k)) == 'Y');
    }
  }
  SECTION("all-blank grid state halts at once") {
    TilingPatch patch = build_patch(GridKind::pentagrid, 0, 4);
    RotationGroup g = rotation_group(GridKind::pentagrid);
    RotRuleTable t = p_table(GridKind::pentagrid);
    t.build(g, true);
    GridRunResult res = hyp_run(patch, t, g, GridState{}, 5);
    CHECK(res.status == GridRunStatus::halted);
  }
}

TEST_CASE("dodecagrid line continuation") {
  TilingPatch patch = build_patch(GridKind::dodecagrid, -3, 20);
  RotationGroup g = rotation_group(GridKind::dodecagrid);
  RotRuleTable t = p_table(GridKind::dodecagrid);
  t.build(g, true);
  GridState s0 = p_initial(patch);
  GridRunResult res = hyp_run(patch, t, g, s0, 30);
  std::string diag = res.error ? res.error->describe() : res.collar_detail;
    INFO(diag);
  REQUIRE(res.status == GridRunStatus::budget_exhausted);
  for (int k : {4, 9}) {
    const GridState& st = res.trace[2 * k];
    CHECK(st.at(patch.id("ya", 1 + k)) == 'G');
    CHECK(st.at(patch.id("ya", k)) == 'Y');
    CHECK(st.at(patch.id("ma", k)) == 'B');
    CHECK(st.at(patch.id("rb", k)) == 'R');
  }
}
