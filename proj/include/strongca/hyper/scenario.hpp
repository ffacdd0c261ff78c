#pragma once

// Initial configurations, the combined automaton (line rules embedded in the
// yellow-cell signature), the yellow-line projection, and end-to-end halting
// verification on the grids.

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "strongca/encoding.hpp"
#include "strongca/hyper/engine.hpp"
#include "strongca/hyper/patch.hpp"
#include "strongca/hyper/rotation.hpp"
#include "strongca/hyper/rules.hpp"
#include "strongca/hyper/tables.hpp"
#include "strongca/line.hpp"
#include "strongca/line_tables.hpp"
#include "strongca/verify.hpp"

namespace strongca::hyp {

// ------------------------------------------------------------ P automaton

// Seeds reconstructed from the rule tables: the left cap sits on the yellow
// row, the tip carries the green growth cells.
inline GridState p_initial(const TilingPatch& patch) {
  GridState s;
  switch (patch.kind) {
    case GridKind::pentagrid:
      // three red, one yellow, two green
      s.set(patch.id("y", -1), 'R');
      s.set(patch.id("y", 0), 'Y');
      s.set(patch.id("y", 1), 'G');
      s.set(patch.id("r", -1), 'R');
      s.set(patch.id("r", 0), 'R');
      s.set(patch.id("r", 1), 'G');
      break;
    case GridKind::heptagrid:
      // five cells; the single green tops the yellow row
      s.set(patch.id("y", -1), 'R');
      s.set(patch.id("y", 0), 'Y');
      s.set(patch.id("y", 1), 'G');
      s.set(patch.id("r", 0), 'R');
      s.set(patch.id("r", 1), 'R');
      break;
    case GridKind::dodecagrid:
      // twelve cells: the upper six mirror the pentagrid seed with the cap
      // mauve; four reds and two greens below
      s.set(patch.id("ya", -1), 'B');
      s.set(patch.id("ya", 0), 'Y');
      s.set(patch.id("ya", 1), 'G');
      s.set(patch.id("ma", -1), 'B');
      s.set(patch.id("ma", 0), 'B');
      s.set(patch.id("ma", 1), 'G');
      s.set(patch.id("rb", -1), 'R');
      s.set(patch.id("rb", 0), 'R');
      s.set(patch.id("rb", 1), 'G');
      s.set(patch.id("rc", -1), 'R');
      s.set(patch.id("rc", 0), 'R');
      s.set(patch.id("rc", 1), 'G');
      break;
  }
  return s;
}

// ------------------------------------------------------------ Q automaton

inline char to_grid_state(char ln9) { return ln9 == '.' ? 'W' : ln9 == 'A' ? 'P' : ln9; }
inline char from_grid_state(char grid) { return grid == 'W' ? '.' : grid == 'P' ? 'A' : grid; }

// The combined automaton: every line-table rule is embedded into the
// yellow-cell signature of the grid; the bundled rules cover everything
// else. Bundled rules win over compiled ones on the same canonical context
// (the printed tables tune exactly those cells); two compiled rules or two
// bundled rules that disagree are a hard conflict.
struct CompiledQ {
  RotRuleTable table;
  RotationGroup group;
  std::vector<std::string> shadowed;   // compiled rules hidden by bundled ones
  std::vector<RotConflict> conflicts;  // same-priority disagreements
};

inline std::vector<char> yellow_signature(GridKind kind, char l, char r) {
  switch (kind) {
    case GridKind::pentagrid: return {'T', l, 'B', 'B', r};
    case GridKind::heptagrid: return {'T', l, 'B', 'W', 'B', r, 'T'};
    case GridKind::dodecagrid: {
      std::vector<char> f(12, 'W');
      f[0] = 'T';
      f[1] = 'B';
      f[2] = r;
      f[5] = l;
      f[6] = 'B';
      f[7] = 'B';
      return f;
    }
  }
  throw parse_error("unknown grid kind");
}

inline CompiledQ compile_q(GridKind kind, const RuleTable1D& line_table) {
  CompiledQ out;
  out.group = rotation_group(kind);
  out.table = q_table(kind);
  out.table.build(out.group, /*expand_wildcards=*/true);
  // remember which canonical keys come from bundled rules
  auto bundled_keys = out.table.canon;
  int synthetic_line = 100000;
  for (auto& [ctx, n] : line_table.rules) {
    char l = to_grid_state(ctx[0]);
    char c = to_grid_state(ctx[1]);
    char r = to_grid_state(ctx[2]);
    char nn = to_grid_state(n);
    if (c == 'W') continue;  // blank yellow cells are covered by grid rules
    GridRule gr;
    gr.cell = c;
    gr.nbrs = yellow_signature(kind, l, r);
    gr.next = nn;
    gr.source_line = synthetic_line++;
    auto key = std::make_pair(gr.cell, canonical_context(out.group, gr.nbrs));
    auto it = out.table.canon.find(key);
    if (it != out.table.canon.end()) {
      if (bundled_keys.count(key)) {
        if (it->second != gr.next) {
          std::string s = "compiled (";
          s += ctx[0];
          s += ' ';
          s += ctx[1];
          s += ' ';
          s += ctx[2];
          s += " -> ";
          s += n;
          s += ") shadowed by bundled rule line " +
               std::to_string(out.table.canon_src[key].source_line);
          out.shadowed.push_back(s);
        }
        continue;  // bundled rule wins
      }
      if (it->second != gr.next)
        out.conflicts.push_back({out.table.canon_src[key], gr});
      continue;
    }
    out.table.canon[key] = gr.next;
    out.table.canon_src[key] = gr;
    out.table.rules.push_back(gr);
  }
  return out;
}

// ------------------------------------------------------------ layouts

struct QLayout {
  long tape_start = 5;   // slot of the first tape cell (c)
  int zone_gap = 2;      // blanks between the last non-blank cell and the zone
  int zone_len = 3;      // initial growth-zone cells
  long flags_margin = 1; // extra flagged slots beyond the zone
};

// Write a line configuration onto the yellow row of the patch, with the cap,
// the anchor, the red line, the flags and the growth gadgets.
inline GridState q_initial(const TilingPatch& patch, const LineConfiguration& line,
                           const QLayout& lay = {}) {
  GridState s;
  long lo = line.empty() ? 0 : line.lo();
  long width = line.empty() ? 0 : line.hi() - line.lo();
  long d = lay.tape_start + width;            // last encoded cell
  long zone_lo = d + lay.zone_gap + 1;
  long zone_hi = zone_lo + lay.zone_len - 1;
  long tip = zone_hi + 1;                      // green growth cells
  auto set = [&](const char* role, long slot, char st) {
    int id = patch.id(role, slot);
    if (id == kExterior)
      throw parse_error(std::string("patch too short for ") + role + "[" +
                        std::to_string(slot) + "]");
    s.set(id, st);
  };
  switch (patch.kind) {
    case GridKind::pentagrid: {
      set("y", 0, 'T');   // cap
      set("y", 1, 'B');   // anchor
      for (long p = 0; p <= width; ++p) {
        char c = line.at(lo + p, '.');
        if (c != '.') set("y", lay.tape_start + p, to_grid_state(c));
      }
      for (long z = zone_lo; z <= zone_hi; ++z) set("y", z, 'U');
      set("y", tip, 'G');
      for (long i = 1; i < tip; ++i) set("r", i, 'T');
      set("r", 0, 'T');
      set("r", tip, 'G');
      for (long i = 1; i <= zone_hi + lay.flags_margin; ++i) {
        set("a", i, 'B');
        set("b", i, 'B');
      }
      break;
    }
    case GridKind::heptagrid: {
      set("y", 0, 'T');
      set("y", 1, 'B');
      for (long p = 0; p <= width; ++p) {
        char c = line.at(lo + p, '.');
        if (c != '.') set("y", lay.tape_start + p, to_grid_state(c));
      }
      for (long z = zone_lo; z <= zone_hi; ++z) set("y", z, 'U');
      set("y", tip, 'G');
      for (long i = 0; i < tip; ++i) set("r", i, 'T');
      set("r", tip, 'G');
      for (long i = 1; i <= zone_hi + lay.flags_margin; ++i) set("f", i, 'B');
      break;
    }
    case GridKind::dodecagrid: {
      set("ya", 0, 'T');
      set("ya", 1, 'B');
      for (long p = 0; p <= width; ++p) {
        char c = line.at(lo + p, '.');
        if (c != '.') set("ya", lay.tape_start + p, to_grid_state(c));
      }
      for (long z = zone_lo; z <= zone_hi; ++z) set("ya", z, 'U');
      set("ya", tip, 'G');
      for (long i = 0; i < tip; ++i) {
        set("ma", i, 'B');
        set("rb", i, 'T');
        set("rc", i, 'T');
      }
      set("ma", tip, 'G');
      set("rb", tip, 'G');
      set("rc", tip, 'G');
      for (long i = 1; i <= zone_hi + lay.flags_margin; ++i) {
        set("ya_flag", i, 'B');
        set("ma_flag", i, 'T');
        set("rb_flag", i, 'T');
        set("rc_flag", i, 'T');
      }
      break;
    }
  }
  return s;
}

// Read the yellow line back as a line configuration. A stopping-signal G is
// "interior" when tape content still sits to its right (the roaming signal
// must stay off the simulated tape until the stopping phase).
inline LineConfiguration project_yellow(const TilingPatch& patch,
                                        const GridState& s,
                                        const QLayout& lay = {},
                                        bool* interior_G = nullptr) {
  LineConfiguration out;
  std::vector<long> g_slots;
  const char* row = patch.kind == GridKind::dodecagrid ? "ya" : "y";
  long last_tape = std::numeric_limits<long>::min();
  for (auto& [ref, id] : patch.index) {
    if (ref.role != row) continue;
    char st = s.at(id);
    if (st == 'W') continue;
    if (ref.slot < lay.tape_start) continue;  // cap/anchor region
    if (st == 'G') {
      g_slots.push_back(ref.slot);
      continue;
    }
    if (st == 'U') continue;  // growth zone, not tape content
    last_tape = std::max(last_tape, ref.slot);
    out.support[ref.slot - lay.tape_start] = from_grid_state(st);
  }
  if (interior_G) {
    *interior_G = false;
    for (long g : g_slots)
      if (g < last_tape) *interior_G = true;
  }
  return out;
}

}  // namespace strongca::hyp
