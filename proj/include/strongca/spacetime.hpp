#pragma once

// Text rendering of 1D run traces: one row per step over a fixed window.

#include <string>
#include <vector>

#include "strongca/line.hpp"

namespace strongca {

struct Window {
  long lo = 0, hi = -1;  // hi < lo means derive from the trace
};

inline Window trace_window(const std::vector<LineConfiguration>& trace,
                           long margin = 2) {
  Window w;
  bool any = false;
  for (auto& c : trace) {
    if (c.empty()) continue;
    if (!any) {
      w.lo = c.lo();
      w.hi = c.hi();
      any = true;
    } else {
      w.lo = std::min(w.lo, c.lo());
      w.hi = std::max(w.hi, c.hi());
    }
  }
  if (!any) {
    w.lo = 0;
    w.hi = 0;
  }
  w.lo -= margin;
  w.hi += margin;
  return w;
}

// Cells separated by single spaces, mirroring the printed-table typography.
inline std::string render_spacetime(const std::vector<LineConfiguration>& trace,
                                    char quiescent = '.', Window w = {},
                                    bool spaced = true) {
  if (w.hi < w.lo) w = trace_window(trace);
  std::string out;
  for (auto& c : trace) {
    for (long p = w.lo; p <= w.hi; ++p) {
      out += c.at(p, quiescent);
      if (spaced && p != w.hi) out += ' ';
    }
    out += '\n';
  }
  return out;
}

}  // namespace strongca
