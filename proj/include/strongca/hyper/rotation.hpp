#pragma once

// Rotation groups acting on neighbor indices: cyclic groups for the planar
// grids, the orientation-preserving automorphism group of the dodecahedron
// (isomorphic to A5, order 60) for the dodecagrid.

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "strongca/data.hpp"
#include "strongca/hyper/patch.hpp"
#include "strongca/util.hpp"

namespace strongca::hyp {

using Perm = std::vector<int>;  // image[i] = where index i goes

struct RotationGroup {
  std::vector<Perm> elements;  // first element is the identity

  size_t order() const { return elements.size(); }

  bool closed_under_composition() const {
    std::set<Perm> all(elements.begin(), elements.end());
    for (auto& a : elements)
      for (auto& b : elements) {
        Perm c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        if (!all.count(c)) return false;
      }
    return true;
  }
};

// Cyclically ordered neighbor faces of each dodecahedron face.
inline const std::vector<std::vector<int>>& dodec_face_adjacency() {
  static const std::vector<std::vector<int>> adj = [] {
    std::vector<std::vector<int>> a;
    detail::for_data_lines(data::dodec_adjacency, [&](int, std::string_view line) {
      std::vector<int> row;
      for (auto tok : detail::split_ws(line))
        row.push_back(static_cast<int>(detail::parse_long(tok, "face")));
      if (row.size() != 5) throw parse_error("dodecahedron face needs 5 neighbors");
      a.push_back(row);
    });
    if (a.size() != 12) throw parse_error("dodecahedron needs 12 faces");
    return a;
  }();
  return adj;
}

// Orientation-preserving symmetries: permutations of faces preserving
// adjacency and the cyclic orientation of the neighbor rings. Each is fixed
// by the image of one face and of one of its neighbors (12 * 5 = 60
// candidates, all of which must work out).
inline RotationGroup dodec_rotation_group() {
  const auto& adj = dodec_face_adjacency();
  RotationGroup g;
  auto ring_pos = [&](int face, int nb) {
    for (int k = 0; k < 5; ++k)
      if (adj[face][k] == nb) return k;
    return -1;
  };
  for (int f0 = 0; f0 < 12; ++f0) {
    for (int r = 0; r < 5; ++r) {
      // map face 0 -> f0 and adj[0][0] -> adj[f0][r]; propagate
      Perm img(12, -1);
      img[0] = f0;
      img[adj[0][0]] = adj[f0][r];
      bool ok = true;
      // breadth-first completion: if img[a] and img of one ring nb known,
      // the whole ring maps by rotation
      for (int rounds = 0; rounds < 12 && ok; ++rounds) {
        for (int a = 0; a < 12; ++a) {
          if (img[a] < 0) continue;
          int known = -1;
          for (int k = 0; k < 5; ++k)
            if (img[adj[a][k]] >= 0) {
              known = k;
              break;
            }
          if (known < 0) continue;
          int pos = ring_pos(img[a], img[adj[a][known]]);
          if (pos < 0) {
            ok = false;
            break;
          }
          for (int k = 0; k < 5; ++k) {
            int src = adj[a][(known + k) % 5];
            int dst = adj[img[a]][(pos + k) % 5];
            if (img[src] >= 0 && img[src] != dst) {
              ok = false;
              break;
            }
            img[src] = dst;
          }
          if (!ok) break;
        }
      }
      if (!ok) continue;
      if (std::any_of(img.begin(), img.end(), [](int v) { return v < 0; }))
        continue;
      std::set<int> seen(img.begin(), img.end());
      if (seen.size() != 12) continue;
      // verify adjacency + orientation preserved
      for (int a = 0; a < 12 && ok; ++a) {
        int pos = ring_pos(img[a], img[adj[a][0]]);
        if (pos < 0) {
          ok = false;
          break;
        }
        for (int k = 0; k < 5; ++k)
          if (img[adj[a][k]] != adj[img[a]][(pos + k) % 5]) {
            ok = false;
            break;
          }
      }
      if (ok) g.elements.push_back(img);
    }
  }
  std::sort(g.elements.begin(), g.elements.end());
  g.elements.erase(std::unique(g.elements.begin(), g.elements.end()),
                   g.elements.end());
  // identity first
  Perm id(12);
  for (int i = 0; i < 12; ++i) id[i] = i;
  auto it = std::find(g.elements.begin(), g.elements.end(), id);
  if (it != g.elements.end()) std::iter_swap(g.elements.begin(), it);
  return g;
}

inline RotationGroup rotation_group(GridKind kind) {
  if (kind == GridKind::dodecagrid) {
    RotationGroup g = dodec_rotation_group();
    if (g.order() != 60)
      throw parse_error("dodecahedron symmetry enumeration gave " +
                        std::to_string(g.order()) + " elements, expected 60");
    return g;
  }
  int n = valence(kind);
  RotationGroup g;
  for (int s = 0; s < n; ++s) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + s) % n;
    g.elements.push_back(p);
  }
  std::swap(g.elements[0], g.elements[0]);
  return g;
}

// Lexicographically least image of a neighbor tuple over the group.
inline std::vector<char> canonical_context(const RotationGroup& g,
                                           const std::vector<char>& nbrs) {
  std::vector<char> best;
  std::vector<char> cur(nbrs.size());
  for (auto& p : g.elements) {
    for (size_t i = 0; i < nbrs.size(); ++i) cur[i] = nbrs[p[i]];
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

}  // namespace strongca::hyp
