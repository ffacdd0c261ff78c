#pragma once

// Rotation-invariant rule tables over the grids, with the Y/x wildcard
// classes used by the combined tables (Y = any line-automaton state,
// x = any machine symbol 0 1 y A).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strongca/hyper/rotation.hpp"
#include "strongca/util.hpp"

namespace strongca::hyp {

// States are single characters; 'W' is the grid blank. Multi-character
// tokens map to single chars: pY -> 'P', M -> 'B' (the mauve line carries
// the same state as the flag color after identification).
inline char state_token(std::string_view tok) {
  if (tok == "pY") return 'P';
  if (tok.size() != 1) throw parse_error("bad state token '" + std::string(tok) + "'");
  return tok[0];
}

inline std::string state_name(char c) { return c == 'P' ? "pY" : std::string(1, c); }

struct GridRule {
  char cell;
  std::vector<char> nbrs;
  char next;
  int source_line = 0;
};

struct RotConflict {
  GridRule a, b;
};

// The LN9 states after identification, used to expand the Y wildcard.
// The blank is identified with W and handled by explicit rules, so Y ranges
// over the non-blank states.
inline const std::vector<char>& wildcard_Y() {
  static const std::vector<char> v{'0', '1', 'y', 'A', 'B', 'T', 'U', '4'};
  return v;
}
inline const std::vector<char>& wildcard_x() {
  static const std::vector<char> v{'0', '1', 'y', 'A'};
  return v;
}

class RotRuleTable {
 public:
  GridKind kind;
  std::vector<GridRule> rules;        // as written (wildcards intact)
  std::string name;

  // canonical exact map built by expansion
  std::map<std::pair<char, std::vector<char>>, char> canon;
  std::map<std::pair<char, std::vector<char>>, GridRule> canon_src;
  std::vector<RotConflict> conflicts;

  // rules that matched at least one lookup (for the lint report)
  mutable std::set<int> exercised;

  void build(const RotationGroup& g, bool expand_wildcards) {
    canon.clear();
    canon_src.clear();
    conflicts.clear();
    for (auto& r : rules) {
      if (!expand_wildcards && has_wildcard(r)) continue;
      expand_rule(g, r);
    }
  }

  std::optional<char> lookup(const RotationGroup& g, char cell,
                             const std::vector<char>& nbrs) const {
    auto key = std::make_pair(cell, canonical_context(g, nbrs));
    auto it = canon.find(key);
    if (it == canon.end()) return std::nullopt;
    auto sit = canon_src.find(key);
    if (sit != canon_src.end()) exercised.insert(sit->second.source_line);
    return it->second;
  }

  static bool has_wildcard(const GridRule& r) {
    if (r.cell == 'Y' || r.cell == 'x' || r.next == 'Y' || r.next == 'x')
      return true;
    for (char c : r.nbrs)
      if (c == 'Y' || c == 'x') return true;
    return false;
  }

 private:
  void expand_rule(const RotationGroup& g, const GridRule& r) {
    // enumerate wildcard assignments; each Y/x occurrence varies freely,
    // except that cell/next positions sharing the letter vary together with
    // nothing (schematic rules keep per-position independence; the one rule
    // family that needs linked substitution — the yellow-line schema — is
    // produced by the compiler, not by expansion)
    std::vector<size_t> wild_pos;
    for (size_t i = 0; i < r.nbrs.size(); ++i)
      if (r.nbrs[i] == 'Y' || r.nbrs[i] == 'x') wild_pos.push_back(i);
    bool cell_wild = (r.cell == 'Y' || r.cell == 'x');
    bool next_wild = (r.next == 'Y' || r.next == 'x');
    if (cell_wild || next_wild) {
      // cell and next wildcards are linked (same concrete state), used by
      // persistence rules like `x G W B B W -> x`
      const auto& dom = (r.cell == 'x' || r.next == 'x') ? wildcard_x() : wildcard_Y();
      for (char v : dom) {
        GridRule c = r;
        if (cell_wild) c.cell = v;
        if (next_wild) c.next = v;
        expand_rule(g, c);
      }
      return;
    }
    if (!wild_pos.empty()) {
      size_t i = wild_pos[0];
      const auto& dom = (r.nbrs[i] == 'x') ? wildcard_x() : wildcard_Y();
      for (char v : dom) {
        GridRule c = r;
        c.nbrs[i] = v;
        expand_rule(g, c);
      }
      return;
    }
    insert_exact(g, r);
  }

  void insert_exact(const RotationGroup& g, const GridRule& r) {
    auto key = std::make_pair(r.cell, canonical_context(g, r.nbrs));
    auto it = canon.find(key);
    if (it != canon.end()) {
      if (it->second != r.next) {
        // explicit rules beat wildcard-expanded rules
        const GridRule& prev = canon_src[key];
        bool prev_wild = has_wildcard(prev);
        bool cur_wild = has_wildcard(r);
        if (prev_wild && !cur_wild) {
          it->second = r.next;
          canon_src[key] = r;
        } else if (prev_wild == cur_wild) {
          conflicts.push_back({prev, r});
        }
      }
      return;
    }
    canon[key] = r.next;
    canon_src[key] = r;
  }
};

inline RotRuleTable parse_grid_rules(std::string_view text, GridKind kind,
                                     std::string name = "") {
  RotRuleTable t;
  t.kind = kind;
  t.name = std::move(name);
  int width = valence(kind);
  detail::for_data_lines(text, [&](int lineno, std::string_view line) {
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw parse_error("grid rules line " + std::to_string(lineno) +
                        ": expected 'c n1 .. nk -> n'");
    auto lhs = detail::split_ws(line.substr(0, arrow));
    auto rhs = detail::split_ws(line.substr(arrow + 2));
    if (static_cast<int>(lhs.size()) != width + 1 || rhs.size() != 1)
      throw parse_error("grid rules line " + std::to_string(lineno) +
                        ": wrong arity");
    GridRule r;
    r.cell = state_token(lhs[0]);
    for (int i = 1; i <= width; ++i) r.nbrs.push_back(state_token(lhs[i]));
    r.next = state_token(rhs[0]);
    r.source_line = lineno;
    t.rules.push_back(r);
  });
  return t;
}

inline std::string serialize_grid_rules(const RotRuleTable& t) {
  std::string out;
  for (auto& r : t.rules) {
    out += state_name(r.cell);
    for (char c : r.nbrs) out += ' ' + state_name(c);
    out += " -> " + state_name(r.next) + '\n';
  }
  return out;
}

struct InvarianceFinding {
  std::string what;
};

// Expand wildcards, group by canonical context, report conflicting classes.
inline std::vector<InvarianceFinding> check_rotation_invariance(
    RotRuleTable table, const RotationGroup& g) {
  table.build(g, /*expand_wildcards=*/true);
  std::vector<InvarianceFinding> out;
  for (auto& c : table.conflicts) {
    std::string msg = "conflicting rules: line " +
                      std::to_string(c.a.source_line) + " (" +
                      state_name(c.a.cell) + "... -> " + state_name(c.a.next) +
                      ") vs line " + std::to_string(c.b.source_line) + " (" +
                      state_name(c.b.cell) + "... -> " + state_name(c.b.next) + ")";
    out.push_back({msg});
  }
  return out;
}

}  // namespace strongca::hyp
