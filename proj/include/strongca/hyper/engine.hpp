#pragma once

// Synchronous execution of a rotation-invariant automaton on a patch.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strongca/hyper/patch.hpp"
#include "strongca/hyper/rules.hpp"

namespace strongca::hyp {

// Sparse state: cells absent from the map are blank ('W').
struct GridState {
  std::map<int, char> cells;

  bool operator==(const GridState&) const = default;

  char at(int id) const {
    if (id == kExterior) return 'W';
    auto it = cells.find(id);
    return it == cells.end() ? 'W' : it->second;
  }
  void set(int id, char s) {
    if (s == 'W')
      cells.erase(id);
    else
      cells[id] = s;
  }
};

struct GridMissingRule {
  int cell;
  std::string cell_ref;
  char state;
  std::vector<char> context;
  long step = -1;

  std::string describe() const {
    std::string s = "no rule for cell " + cell_ref + " in state ";
    s += state_name(state) + " with neighbors (";
    for (size_t i = 0; i < context.size(); ++i) {
      if (i) s += ' ';
      s += state_name(context[i]);
    }
    s += ")";
    if (step >= 0) s += " at step " + std::to_string(step);
    return s;
  }
};

enum class GridRunStatus { halted, budget_exhausted, missing_rule, collar_violation };

struct GridRunResult {
  std::vector<GridState> trace;
  GridRunStatus status = GridRunStatus::budget_exhausted;
  std::optional<GridMissingRule> error;
  std::string collar_detail;
};

// One synchronous step over every cell that is non-blank or has a non-blank
// neighbor. Writing a non-blank state to a cell whose neighbor list points
// outside the patch boundary is reported as a collar violation when the cell
// itself would need neighbors beyond the patch to evolve further; writes to
// exterior cells cannot happen (they are not part of the patch), so the
// check is: a non-blank cell must never sit on the outermost ring.
inline std::optional<GridState> grid_step(const TilingPatch& patch,
                                          const RotRuleTable& table,
                                          const RotationGroup& g,
                                          const GridState& st,
                                          GridMissingRule* err) {
  std::set<int> active;
  for (auto& [id, s] : st.cells) {
    active.insert(id);
    for (int nb : patch.neighbors[id])
      if (nb != kExterior) active.insert(nb);
  }
  GridState out;
  std::vector<char> ctx;
  for (int id : active) {
    char cur = st.at(id);
    ctx.clear();
    bool all_blank = cur == 'W';
    for (int nb : patch.neighbors[id]) {
      char s = st.at(nb);
      ctx.push_back(s);
      if (s != 'W') all_blank = false;
    }
    if (all_blank) continue;
    auto n = table.lookup(g, cur, ctx);
    if (!n) {
      if (err) *err = {id, patch.ref[id].str(), cur, ctx};
      return std::nullopt;
    }
    if (*n != 'W') out.set(id, *n);
  }
  return out;
}

// A non-blank state on a cell with exterior neighbors means the patch was
// built too small for this run.
inline std::optional<std::string> collar_violation(const TilingPatch& patch,
                                                   const GridState& st) {
  for (auto& [id, s] : st.cells)
    for (int nb : patch.neighbors[id])
      if (nb == kExterior) {
        // flags and halo cells legitimately border the exterior; only a
        // non-blank on a cell ALL of whose expansion room is exterior
        // matters. Conservative check: a non-blank cell with more than half
        // its neighbors outside is out of corridor.
        int out = 0;
        for (int nb2 : patch.neighbors[id])
          if (nb2 == kExterior) ++out;
        if (out > static_cast<int>(patch.neighbors[id].size()) / 2)
          return patch.ref[id].str() + " in state " + state_name(s) +
                 " is on the patch boundary";
        break;
      }
  return std::nullopt;
}

inline GridRunResult hyp_run(const TilingPatch& patch, const RotRuleTable& table,
                             const RotationGroup& g, const GridState& s0,
                             long max_steps, bool keep_trace = true) {
  GridRunResult res;
  res.trace.push_back(s0);
  GridState cur = s0;
  for (long i = 0; i < max_steps; ++i) {
    if (auto v = collar_violation(patch, cur)) {
      res.status = GridRunStatus::collar_violation;
      res.collar_detail = *v + " at step " + std::to_string(i);
      return res;
    }
    GridMissingRule err;
    auto next = grid_step(patch, table, g, cur, &err);
    if (!next) {
      err.step = i;
      res.status = GridRunStatus::missing_rule;
      res.error = err;
      return res;
    }
    if (*next == cur) {
      res.status = GridRunStatus::halted;
      if (keep_trace) res.trace.push_back(*next);
      return res;
    }
    cur = std::move(*next);
    if (keep_trace)
      res.trace.push_back(cur);
    else
      res.trace.back() = cur;
  }
  res.status = GridRunStatus::budget_exhausted;
  return res;
}

// Deterministic textual dump: one `cell-id state` line per non-blank cell.
inline std::string dump_state(const TilingPatch& patch, const GridState& st) {
  std::string out;
  std::map<CellRef, char> ordered;
  for (auto& [id, s] : st.cells) ordered[patch.ref[id]] = s;
  for (auto& [ref, s] : ordered) out += ref.str() + " " + state_name(s) + "\n";
  return out;
}

}  // namespace strongca::hyp
