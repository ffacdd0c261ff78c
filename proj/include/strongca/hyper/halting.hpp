#pragma once

// End-to-end verification on a grid: run the combined automaton from the
// encoded machine configuration, check the fixpoint, the state budget, the
// stopping signal discipline, and the equivalence of the decoded machine
// trace with the one-dimensional simulation.

#include <set>
#include <string>
#include <vector>

#include "strongca/hyper/scenario.hpp"

namespace strongca::hyp {

struct HaltingReport {
  bool ok = false;
  bool fixpoint = false;
  bool tm_trace_matched = false;
  bool state_budget_ok = false;
  bool no_early_G = false;
  int states_used = 0;
  long grid_steps = 0;
  std::string detail;
};

struct QInstance {
  TmConfiguration config;
  char incoming = 'L';
};

// Decoded-trace witness walk, shared by the grid and the 1D engines: every
// machine configuration must be seen (in order) among the decoded
// projections, with a bounded gap.
inline HaltingReport verify_halting(GridKind kind, const QInstance& inst,
                                    long budget, const QLayout& lay = {},
                                    std::vector<GridState>* trace_out = nullptr) {
  HaltingReport rep;
  const auto& m = minsky_utm();
  const auto& cat = minsky_catalog();
  TmTrace tm = tm_run(m, inst.config, 1000);
  CompiledQ q = compile_q(kind, ln9_table());
  if (!q.conflicts.empty()) {
    rep.detail = "combined table has conflicts";
    return rep;
  }
  LineConfiguration line =
      encode_tm(inst.config, cat, inst.incoming, {.with_zone = false});
  // normalize to start at 0
  LineConfiguration shifted;
  long lo = line.lo();
  for (auto& [p, s] : line.support) shifted.support[p - lo] = s;
  long need = lay.tape_start + (line.hi() - lo) + lay.zone_gap + lay.zone_len +
              8 + budget / 2;
  TilingPatch patch = build_patch(kind, -2, need);
  GridState st = q_initial(patch, shifted, lay);

  std::set<char> used;
  size_t next_idx = 0;
  long last_witness = 0;
  bool stopping_phase = false;
  rep.no_early_G = true;
  GridState cur = st;
  for (long step = 0; step <= budget; ++step) {
    if (trace_out) trace_out->push_back(cur);
    for (auto& [id, s] : cur.cells) used.insert(s);
    // track the stopping signal: once the machine trace is fully witnessed
    // the G may roam; before that it must stay off the tape interior
    bool interior_G = false;
    LineConfiguration proj = project_yellow(patch, cur, lay, &interior_G);
    if (interior_G && next_idx + 1 < tm.configs.size()) rep.no_early_G = false;
    if (next_idx < tm.configs.size()) {
      auto d = decode_ca(proj, cat);
      if (auto* dd = std::get_if<DecodedTm>(&d)) {
        if (dd->has_head) {
          for (size_t skip = 0; skip < 2 && next_idx + skip < tm.configs.size();
               ++skip) {
            if (dd->config == tm.configs[next_idx + skip]) {
              next_idx += skip + 1;
              last_witness = step;
              break;
            }
          }
        }
      }
      if (step - last_witness > 16) {
        rep.detail = "no witness for machine step " + std::to_string(next_idx) +
                     " near grid step " + std::to_string(step);
        break;
      }
    } else {
      stopping_phase = true;
    }
    GridMissingRule err;
    auto next = grid_step(patch, q.table, q.group, cur, &err);
    if (!next) {
      err.step = step;
      rep.detail = err.describe();
      return rep;
    }
    if (*next == cur) {
      rep.fixpoint = true;
      rep.grid_steps = step;
      break;
    }
    cur = std::move(*next);
  }
  (void)stopping_phase;
  rep.states_used = static_cast<int>(used.size());
  rep.state_budget_ok = used.size() <= 10;
  rep.tm_trace_matched = next_idx == tm.configs.size();
  bool tm_halted = tm.status == TmStatus::halted;
  if (tm_halted)
    rep.ok = rep.fixpoint && rep.tm_trace_matched && rep.state_budget_ok &&
             rep.no_early_G;
  else
    rep.ok = !rep.fixpoint && rep.state_budget_ok && rep.no_early_G &&
             rep.detail.empty();
  if (!rep.ok && rep.detail.empty()) {
    rep.detail = std::string(rep.fixpoint ? "" : "no fixpoint; ") +
                 (rep.tm_trace_matched ? "" : "machine trace not matched; ") +
                 (rep.state_budget_ok ? "" : "state budget exceeded; ") +
                 (rep.no_early_G ? "" : "stopping state on the tape too early; ");
  }
  return rep;
}

}  // namespace strongca::hyp
