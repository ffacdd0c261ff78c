#pragma once

// Deterministic SVG rendering: 1D space-time diagrams as rows of squares,
// grid corridors as horizontal strips (combinatorial layout only), and the
// dodecagrid as two panels, one per side of the horizontal plane.

#include <string>
#include <vector>

#include "strongca/hyper/engine.hpp"
#include "strongca/line.hpp"
#include "strongca/spacetime.hpp"

namespace strongca {

inline const char* state_color(char s) {
  switch (s) {
    case '.': case 'W': return "#ffffff";
    case '0': return "#bdd7ff";
    case '1': return "#5b9bd5";
    case 'y': return "#ffd966";
    case 'A': return "#ed7d31";
    case 'B': return "#9e5fc0";
    case 'T': return "#c00000";
    case '3': return "#00b050";
    case '4': return "#70ad47";
    case 'U': return "#7f7f7f";
    case 'V': return "#444444";
    case 'Y': return "#ffd966";
    case 'R': return "#c00000";
    case 'G': return "#00b050";
    case 'P': return "#ffe9b3";
    case 'M': return "#9e5fc0";
    default: return "#000000";
  }
}

inline std::string render_svg(const std::vector<LineConfiguration>& trace,
                              char quiescent = '.', Window w = {}) {
  if (w.hi < w.lo) w = trace_window(trace);
  const int cell = 10;
  long cols = w.hi - w.lo + 1;
  long rows = static_cast<long>(trace.size());
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(cols * cell) + "\" height=\"" +
         std::to_string(rows * cell) + "\">\n";
  for (long t = 0; t < rows; ++t)
    for (long p = w.lo; p <= w.hi; ++p) {
      char s = trace[t].at(p, quiescent);
      if (s == quiescent) continue;
      out += "<rect x=\"" + std::to_string((p - w.lo) * cell) + "\" y=\"" +
             std::to_string(t * cell) + "\" width=\"10\" height=\"10\" fill=\"" +
             state_color(s) + "\"><title>" + s + "</title></rect>\n";
    }
  out += "</svg>\n";
  return out;
}

// Corridor layout: rows of cells keyed by role, slots left to right. For
// the dodecagrid, two panels: rows above the plane on top, rows below it
// underneath.
inline std::string render_svg_grid(const hyp::TilingPatch& patch,
                                   const hyp::GridState& st) {
  using hyp::GridKind;
  std::vector<std::string> rows;
  switch (patch.kind) {
    case GridKind::pentagrid: rows = {"x", "a", "b", "y", "r", "d", "c", "z"}; break;
    case GridKind::heptagrid: rows = {"f", "w", "y", "r", "g", "v"}; break;
    case GridKind::dodecagrid:
      rows = {"ya_flag", "ya", "ma", "ma_flag",      // panel above
              "rb_flag", "rb", "rc", "rc_flag"};     // panel below
      break;
  }
  const int cell = 12, pad = 14;
  long lo = 0, hi = 0;
  for (auto& [ref, id] : patch.index) {
    lo = std::min(lo, ref.slot);
    hi = std::max(hi, ref.slot);
  }
  long cols = hi - lo + 1;
  bool two_panel = patch.kind == GridKind::dodecagrid;
  long height = static_cast<long>(rows.size()) * cell + (two_panel ? pad : 0) + 2 * pad;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(cols * cell + 2 * pad) + "\" height=\"" +
                    std::to_string(height) + "\">\n";
  for (size_t ri = 0; ri < rows.size(); ++ri) {
    long y = pad + static_cast<long>(ri) * cell;
    if (two_panel && ri >= 4) y += pad;  // one panel per side of the plane
    for (long s = lo; s <= hi; ++s) {
      int id = patch.id(rows[ri], s);
      if (id == hyp::kExterior) continue;
      char v = st.at(id);
      out += "<rect x=\"" + std::to_string(pad + (s - lo) * cell) + "\" y=\"" +
             std::to_string(y) + "\" width=\"11\" height=\"11\" stroke=\"#ccc\" fill=\"" +
             std::string(state_color(v)) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace strongca
