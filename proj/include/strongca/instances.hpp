#pragma once

// Deterministic search for small machine set-ups usable as verification
// instances: runs that stay right of their leftmost encoded cell, halt
// within a budget, and embed cleanly on the line.

#include <string>
#include <vector>

#include "strongca/encoding.hpp"
#include "strongca/line_tables.hpp"
#include "strongca/turing.hpp"
#include "strongca/verify.hpp"

namespace strongca {

struct Instance {
  std::string tape;    // cells left to right
  long head = 0;
  int state = 1;
  char incoming = 'L';
  int tm_steps = 0;    // steps to halt (0 when non-halting)

  TmConfiguration config() const {
    TmConfiguration c;
    c.scanned = tape[head];
    for (long i = head - 1; i >= 0; --i) c.left += tape[i];
    for (size_t i = head + 1; i < tape.size(); ++i) c.right += tape[i];
    c.state = state;
    c.normalize('0');
    return c;
  }
};

namespace detail_inst {

// Run with an absolute left boundary; head must stay at positions >= 0.
// Returns (halted?, steps, halt position, final tape extent) or nullopt when
// the boundary is crossed.
struct BoundedRun {
  bool halted = false;
  int steps = 0;
  long halt_pos = 0;
  bool content_left_of_halt = false;
};

inline std::optional<BoundedRun> bounded_run(const TuringMachine& m,
                                             const std::string& tape, long head,
                                             int state, int budget) {
  std::map<long, char> cells;
  for (size_t i = 0; i < tape.size(); ++i) cells[static_cast<long>(i)] = tape[i];
  long pos = head;
  int st = state;
  BoundedRun out;
  for (int i = 0; i <= budget; ++i) {
    if (pos < 0) return std::nullopt;
    char sc = cells.count(pos) ? cells[pos] : m.blank;
    auto it = m.table.find({st, sc});
    if (it == m.table.end()) {
      out.halted = true;
      out.steps = i;
      out.halt_pos = pos;
      for (auto& [p, s] : cells)
        if (p < pos && s != m.blank) out.content_left_of_halt = true;
      return out;
    }
    cells[pos] = it->second.write;
    pos += it->second.move == Move::R ? 1 : (it->second.move == Move::L ? -1 : 0);
    st = it->second.next;
  }
  out.halted = false;
  out.steps = budget;
  return out;
}

}  // namespace detail_inst

// Halting instances for the built-in machine, hardest first. When
// `left_clean` is set, only set-ups whose halt position has no tape content
// to its left qualify (those erase to the all-blank configuration under the
// nine-state halting variant).
inline std::vector<Instance> find_halting_instances(int max_len, int min_steps,
                                                    bool left_clean,
                                                    size_t want,
                                                    bool check_cosim = true) {
  const auto& m = minsky_utm();
  const auto& cat = minsky_catalog();
  const std::string syms = "01yA";
  std::vector<Instance> found;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> tapes{""};
    for (int k = 0; k < len; ++k) {
      std::vector<std::string> next;
      for (auto& t : tapes)
        for (char c : syms) next.push_back(t + c);
      tapes = std::move(next);
    }
    for (auto& tape : tapes) {
      for (long head = 0; head < len; ++head) {
        for (int state = 1; state <= 7; ++state) {
          for (char inc : {'L', 'R'}) {
            if (!cat.code_for(state, inc)) continue;
            auto r = detail_inst::bounded_run(m, tape, head, state, 400);
            if (!r || !r->halted || r->steps < min_steps) continue;
            if (left_clean && r->content_left_of_halt) continue;
            Instance inst{tape, head, state, inc, r->steps};
            if (check_cosim) {
              auto res = cosimulate(m, ln11_table(), inst.config(), inc,
                                    r->steps + 4, cat);
              if (!res.ok || !res.ca_halted) continue;
            }
            found.push_back(inst);
          }
        }
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Instance& a, const Instance& b) {
              return a.tm_steps > b.tm_steps;
            });
  if (found.size() > want) found.resize(want);
  return found;
}

// A non-halting set-up that also embeds cleanly (checked by running the
// eleven-state automaton for `probe` steps without errors or fixpoints).
inline std::optional<Instance> find_looping_instance(long probe = 3000) {
  const auto& m = minsky_utm();
  const auto& cat = minsky_catalog();
  const std::string syms = "01yA";
  for (int len = 2; len <= 3; ++len) {
    std::vector<std::string> tapes{""};
    for (int k = 0; k < len; ++k) {
      std::vector<std::string> next;
      for (auto& t : tapes)
        for (char c : syms) next.push_back(t + c);
      tapes = next;
    }
    for (auto& tape : tapes) {
      if (static_cast<int>(tape.size()) != len) continue;
      for (long head = 0; head < len; ++head)
        for (int state = 1; state <= 7; ++state)
          for (char inc : {'L', 'R'}) {
            if (!cat.code_for(state, inc)) continue;
            auto r = detail_inst::bounded_run(m, tape, head, state, 2000);
            if (!r || r->halted) continue;
            Instance inst{tape, head, state, inc, 0};
            LineConfiguration cfg = encode_tm(inst.config(), cat, inc);
            bool clean = true;
            LineConfiguration cur = cfg;
            for (long i = 0; i < probe; ++i) {
              auto nx = ca_step(ln11_table(), cur);
              if (std::holds_alternative<MissingRule>(nx)) {
                clean = false;
                break;
              }
              auto& nc = std::get<LineConfiguration>(nx);
              if (nc == cur) {
                clean = false;
                break;
              }
              cur = std::move(nc);
            }
            if (clean) return inst;
          }
    }
  }
  return std::nullopt;
}

}  // namespace strongca
