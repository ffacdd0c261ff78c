#pragma once

// Combinatorial patches of the {5,4} and {7,3} tessellations of the
// hyperbolic plane and of the dodecahedral tessellation of hyperbolic
// 3-space, restricted to a corridor around a guideline. Geometry is pure
// adjacency: every cell carries a cyclically ordered neighbor list; indices
// pointing outside the patch refer to a permanently blank exterior.

#include <map>
#include <string>
#include <vector>

#include "strongca/util.hpp"

namespace strongca::hyp {

enum class GridKind { pentagrid, heptagrid, dodecagrid };

inline int valence(GridKind k) {
  switch (k) {
    case GridKind::pentagrid: return 5;
    case GridKind::heptagrid: return 7;
    case GridKind::dodecagrid: return 12;
  }
  return 0;
}

inline const char* kind_name(GridKind k) {
  switch (k) {
    case GridKind::pentagrid: return "pentagrid";
    case GridKind::heptagrid: return "heptagrid";
    case GridKind::dodecagrid: return "dodecagrid";
  }
  return "?";
}

// Cell roles along the corridor. Slot indices run along the guideline.
//   line0 = yellow line (carries the simulated tape)
//   line1 = red line (pentagrid/heptagrid) / mauve line (dodecagrid)
//   line2, line3 = the two red lines of the dodecagrid
//   flag0/flag1 = the cells over the yellow line that carry the B flags
//   spacer     = the blank cell between the two flags (heptagrid)
//   halo...    = further cells reachable by the growth halo
struct CellRef {
  std::string role;
  long slot = 0;
  int sub = 0;

  bool operator<(const CellRef& o) const {
    if (role != o.role) return role < o.role;
    if (slot != o.slot) return slot < o.slot;
    return sub < o.sub;
  }
  bool operator==(const CellRef&) const = default;
  std::string str() const {
    std::string s = role + "[" + std::to_string(slot) + "]";
    if (sub) s += "." + std::to_string(sub);
    return s;
  }
};

constexpr int kExterior = -1;

class TilingPatch {
 public:
  GridKind kind;
  // per cell: cyclically ordered neighbors (kExterior = outside the patch)
  std::vector<std::vector<int>> neighbors;
  std::vector<CellRef> ref;
  std::map<CellRef, int> index;

  int id(const CellRef& r) const {
    auto it = index.find(r);
    return it == index.end() ? kExterior : it->second;
  }
  int id(const std::string& role, long slot, int sub = 0) const {
    return id(CellRef{role, slot, sub});
  }
  size_t size() const { return neighbors.size(); }

  void check_symmetry() const {
    for (size_t a = 0; a < neighbors.size(); ++a)
      for (int b : neighbors[a]) {
        if (b == kExterior) continue;
        bool found = false;
        for (int c : neighbors[b])
          if (c == static_cast<int>(a)) found = true;
        if (!found)
          throw parse_error("asymmetric adjacency between " + ref[a].str() +
                            " and " + ref[b].str());
      }
  }
};

namespace detail_patch {

class Builder {
 public:
  explicit Builder(GridKind k) { patch_.kind = k; }

  int cell(const std::string& role, long slot, int sub = 0) {
    CellRef r{role, slot, sub};
    auto it = patch_.index.find(r);
    if (it != patch_.index.end()) return it->second;
    int id = static_cast<int>(patch_.neighbors.size());
    patch_.index[r] = id;
    patch_.ref.push_back(r);
    patch_.neighbors.emplace_back();
    return id;
  }

  void set_neighbors(int id, std::vector<int> nb) {
    patch_.neighbors[id] = std::move(nb);
  }

  TilingPatch take() {
    for (auto& nb : patch_.neighbors)
      if (nb.size() != static_cast<size_t>(valence(patch_.kind)))
        throw parse_error("cell with wrong valence in patch");
    patch_.check_symmetry();
    return std::move(patch_);
  }

 private:
  TilingPatch patch_;
};

}  // namespace detail_patch

// ------------------------------------------------------------- pentagrid
//
// {5,4}: the guideline is a line of edges. Pentagons sit edge-on along it,
// the yellow row above (y) and the red row below (r), in one-to-one
// correspondence. Above the yellow row: two flag cells per slot (a = over
// the left shoulder, b = over the right shoulder); a[i] shares an edge with
// b[i-1]; x[i] tops the apex of y[i]. The lower side mirrors this (d/c/z).
//
// Cyclic orders follow one fixed orientation:
//   y[i]: r[i], y[i-1], a[i], b[i], y[i+1]
//   r[i]: y[i], r[i+1], d[i], c[i], r[i-1]
//   a[i]: y[i], x[i], up, up, b[i-1]
//   b[i]: y[i], a[i+1], up, up, x[i]
//   x[i]: a[i], up, up, up, b[i]
inline TilingPatch build_pentagrid(long slot_lo, long slot_hi, int collar = 2) {
  detail_patch::Builder B(GridKind::pentagrid);
  auto want = [&](long i) { return i >= slot_lo && i <= slot_hi; };
  auto opt = [&](const std::string& role, long i, int sub = 0) {
    return want(i) ? B.cell(role, i, sub) : kExterior;
  };
  for (long i = slot_lo; i <= slot_hi; ++i) {
    B.cell("y", i);
    B.cell("r", i);
    B.cell("a", i);
    B.cell("b", i);
    if (collar >= 2) {
      B.cell("x", i);
      B.cell("d", i);
      B.cell("c", i);
      B.cell("z", i);
    }
  }
  for (long i = slot_lo; i <= slot_hi; ++i) {
    B.set_neighbors(B.cell("y", i),
                    {B.cell("r", i), opt("y", i - 1), B.cell("a", i),
                     B.cell("b", i), opt("y", i + 1)});
    if (collar >= 2) {
      B.set_neighbors(B.cell("r", i),
                      {B.cell("y", i), opt("r", i + 1), B.cell("d", i),
                       B.cell("c", i), opt("r", i - 1)});
      B.set_neighbors(B.cell("a", i),
                      {B.cell("y", i), B.cell("x", i), kExterior, kExterior,
                       opt("b", i - 1)});
      B.set_neighbors(B.cell("b", i),
                      {B.cell("y", i), opt("a", i + 1), kExterior, kExterior,
                       B.cell("x", i)});
      B.set_neighbors(B.cell("x", i),
                      {B.cell("a", i), kExterior, kExterior, kExterior,
                       B.cell("b", i)});
      B.set_neighbors(B.cell("d", i),
                      {B.cell("r", i), B.cell("z", i), kExterior, kExterior,
                       opt("c", i + 1)});
      B.set_neighbors(B.cell("c", i),
                      {B.cell("r", i), opt("d", i - 1), kExterior, kExterior,
                       B.cell("z", i)});
      B.set_neighbors(B.cell("z", i),
                      {B.cell("c", i), kExterior, kExterior, kExterior,
                       B.cell("d", i)});
    } else {
      B.set_neighbors(B.cell("r", i),
                      {B.cell("y", i), opt("r", i + 1), kExterior, kExterior,
                       opt("r", i - 1)});
      B.set_neighbors(B.cell("a", i),
                      {B.cell("y", i), kExterior, kExterior, kExterior,
                       opt("b", i - 1)});
      B.set_neighbors(B.cell("b", i),
                      {B.cell("y", i), opt("a", i + 1), kExterior, kExterior,
                       kExterior});
    }
  }
  return B.take();
}

// ------------------------------------------------------------- heptagrid
//
// {7,3}: the guideline crosses the tiles; the yellow and red rows
// interleave, each yellow touching two consecutive reds. Above each yellow:
// flag f[i] (shared between y[i-1] and y[i]: it is the upper cell over their
// common edge), a spacer w[i] over the middle of y[i].
//
//   y[i]: r[i], y[i-1], f[i], w[i], f[i+1], y[i+1], r[i+1]
//   r[i]: y[i-1], r[i-1], g[i], v[i], g[i+1], r[i+1], y[i]
//   f[i]: y[i-1], w[i-1], up, up, up, w[i], y[i]
//   w[i]: y[i], f[i], up, up, up, up, f[i+1]
inline TilingPatch build_heptagrid(long slot_lo, long slot_hi, int collar = 2) {
  detail_patch::Builder B(GridKind::heptagrid);
  auto want = [&](long i) { return i >= slot_lo && i <= slot_hi; };
  auto opt = [&](const std::string& role, long i) {
    return want(i) ? B.cell(role, i) : kExterior;
  };
  for (long i = slot_lo; i <= slot_hi; ++i) {
    B.cell("y", i);
    B.cell("r", i);
    B.cell("f", i);
    B.cell("w", i);
    B.cell("g", i);
    B.cell("v", i);
  }
  for (long i = slot_lo; i <= slot_hi; ++i) {
    B.set_neighbors(B.cell("y", i),
                    {B.cell("r", i), opt("y", i - 1), B.cell("f", i),
                     B.cell("w", i), opt("f", i + 1), opt("y", i + 1),
                     opt("r", i + 1)});
    B.set_neighbors(B.cell("r", i),
                    {opt("y", i - 1), opt("r", i - 1), B.cell("g", i),
                     B.cell("v", i), opt("g", i + 1), opt("r", i + 1),
                     B.cell("y", i)});
    B.set_neighbors(B.cell("f", i),
                    {opt("y", i - 1), opt("w", i - 1), kExterior, kExterior,
                     kExterior, B.cell("w", i), B.cell("y", i)});
    B.set_neighbors(B.cell("w", i),
                    {B.cell("y", i), B.cell("f", i), kExterior, kExterior,
                     kExterior, kExterior, opt("f", i + 1)});
    B.set_neighbors(B.cell("g", i),
                    {opt("r", i - 1), opt("v", i - 1), kExterior, kExterior,
                     kExterior, B.cell("v", i), B.cell("r", i)});
    B.set_neighbors(B.cell("v", i),
                    {B.cell("r", i), B.cell("g", i), kExterior, kExterior,
                     kExterior, kExterior, opt("g", i + 1)});
  }
  (void)collar;
  return B.take();
}

// ------------------------------------------------------------- dodecagrid
//
// Corridor of dodecahedra along the line H ∩ V: four rows of cells in
// contact with H (yellow and mauve above it, two red rows below), indexed by
// slot. Face numbering of a cell: face 0 on H, face 1 on V, faces 2/5 the
// line neighbors, faces 6/7 over face 1's far edges, face 11 opposite 0.
//
// Rows: ya (yellow, above H, side A of V), ma (mauve, above H, side B),
//       rb (red, below H under ya), rc (red, below H under ma).
// Vertical pairing: ya[i] face 0 <-> rb[i] face 0; ma[i] <-> rc[i].
// Across V: ya[i] face 1 <-> ma[i] face 1; rb[i] face 1 <-> rc[i] face 1.
// Along the line: face 2 towards slot+1, face 5 towards slot-1.
// Flags: faces 6/7 are cells of the second layer, one shared between
// consecutive slots: flag(i) sits over the V-edge between slot i-1 and i on
// each side of V / H quadrant.
inline TilingPatch build_dodecagrid(long slot_lo, long slot_hi, int collar = 2) {
  detail_patch::Builder B(GridKind::dodecagrid);
  auto want = [&](long i) { return i >= slot_lo && i <= slot_hi; };
  const char* rows[4] = {"ya", "ma", "rb", "rc"};
  for (long i = slot_lo; i <= slot_hi; ++i) {
    for (auto* r : rows) B.cell(r, i);
    for (auto* r : rows) B.cell(std::string(r) + "_flag", i);
  }
  auto opt = [&](const std::string& role, long i) {
    return want(i) ? B.cell(role, i) : kExterior;
  };
  for (long i = slot_lo; i <= slot_hi; ++i) {
    // main row cells: 12 faces
    auto main_nbrs = [&](const std::string& me, const std::string& below,
                         const std::string& across) {
      std::vector<int> nb(12, kExterior);
      nb[0] = B.cell(below, i);             // through H
      nb[1] = B.cell(across, i);            // through V
      nb[2] = opt(me, i + 1);               // along the line
      nb[5] = opt(me, i - 1);
      nb[6] = B.cell(me + "_flag", i);      // the marked pair: shared flags
      nb[7] = opt(me + "_flag", i + 1);
      return nb;
    };
    B.set_neighbors(B.cell("ya", i), main_nbrs("ya", "rb", "ma"));
    B.set_neighbors(B.cell("ma", i), main_nbrs("ma", "rc", "ya"));
    B.set_neighbors(B.cell("rb", i), main_nbrs("rb", "ya", "rc"));
    B.set_neighbors(B.cell("rc", i), main_nbrs("rc", "ma", "ya"));
    // flags: each flag(i) touches row cells i-1 and i through two of its
    // faces; everything else exterior
    for (auto* r : rows) {
      std::vector<int> nb(12, kExterior);
      nb[0] = opt(r, i - 1);
      nb[1] = B.cell(r, i);
      B.set_neighbors(B.cell(std::string(r) + "_flag", i), nb);
    }
  }
  (void)collar;
  return B.take();
}

inline TilingPatch build_patch(GridKind kind, long slot_lo, long slot_hi,
                               int collar = 2) {
  switch (kind) {
    case GridKind::pentagrid: return build_pentagrid(slot_lo, slot_hi, collar);
    case GridKind::heptagrid: return build_heptagrid(slot_lo, slot_hi, collar);
    case GridKind::dodecagrid: return build_dodecagrid(slot_lo, slot_hi, collar);
  }
  throw parse_error("unknown grid kind");
}

}  // namespace strongca::hyp
