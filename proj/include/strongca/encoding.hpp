#pragma once

// Embedding Turing configurations on the line and reading them back.
//
// Tape symbols sit on slots three cells apart. The head is an impulsion: a
// moving pair made of a code symbol and T. A right-moving pair `x T` sits
// with x on the slot left of the target and T in the gap; a left-moving pair
// `T x` mirrors this. Cells behind the head sit on a grid shifted two cells
// away from the direction of travel; deleting the pair and closing the gap
// restores one uniform grid.

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strongca/line.hpp"
#include "strongca/turing.hpp"

namespace strongca {

struct EncodeOptions {
  int zone_gap = 2;   // blank cells between the last symbol and the zone
  int zone_len = 3;   // initial zone cells
  bool with_zone = true;
};

// Lay the configuration out on the line with the head arriving in
// `incoming` direction ('L' or 'R').
inline LineConfiguration encode_tm(const TmConfiguration& c,
                                   const ImpulsionCatalog& cat,
                                   char incoming,
                                   const EncodeOptions& opt = {}) {
  LineConfiguration out;
  // absolute slot positions: scanned at 0
  std::vector<std::pair<long, char>> cells;
  for (size_t i = 0; i < c.left.size(); ++i)
    cells.push_back({-3L * static_cast<long>(i + 1), c.left[i]});
  cells.push_back({0, c.scanned});
  for (size_t i = 0; i < c.right.size(); ++i)
    cells.push_back({3L * static_cast<long>(i + 1), c.right[i]});
  auto code = cat.code_for(c.state, incoming);
  if (!code)
    throw parse_error("no impulsion code for state " + std::to_string(c.state) +
                      " arriving " + incoming);
  if (incoming == 'R') {
    for (auto& [p, s] : cells)
      if (p < 0) p -= 2;  // behind-grid
    out.support[-3] = *code;
    out.support[-2] = 'T';
  } else {
    for (auto& [p, s] : cells)
      if (p > 0) p += 2;
    out.support[2] = 'T';
    out.support[3] = *code;
  }
  for (auto& [p, s] : cells)
    if (s != '.') out.support[p] = s;
  // '0' cells are real tape symbols here, not blanks: keep them.
  if (opt.with_zone) {
    long d = out.hi();
    for (int i = 0; i < opt.zone_len; ++i)
      out.support[d + opt.zone_gap + 1 + i] = 'U';
  }
  return out;
}

struct DecodedTm {
  TmConfiguration config;
  bool has_head = false;
};

struct MidCollision {};
struct Desync {
  std::string reason;
};

using DecodeResult = std::variant<DecodedTm, MidCollision, Desync>;

// Strip the growth zone (the contiguous trailing run of U/B cells) off the
// right end.
inline LineConfiguration strip_zone(const LineConfiguration& c) {
  LineConfiguration out = c;
  long expect = std::numeric_limits<long>::max();
  while (!out.empty()) {
    long m = out.hi();
    if (expect != std::numeric_limits<long>::max() && m != expect) break;
    char s = out.support.at(m);
    if (s != 'U' && s != 'B') break;
    out.support.erase(m);
    expect = m - 1;
  }
  return out;
}

// Decode a configuration into a Turing configuration. Returns MidCollision
// when the shape is not a standard point (the pair must be flanked by
// blanks and the symbols must close up to one uniform grid).
inline DecodeResult decode_ca(const LineConfiguration& full,
                              const ImpulsionCatalog& cat) {
  LineConfiguration c = strip_zone(full);
  if (c.empty()) {
    DecodedTm d;
    d.has_head = false;
    return d;
  }
  // locate T cells
  std::vector<long> ts;
  for (auto& [p, s] : c.support)
    if (s == 'T') ts.push_back(p);
  long pair_lo = 0, pair_hi = 0;
  char dir = 0, code = 0;
  if (ts.size() > 1) return MidCollision{};
  if (ts.size() == 1) {
    long t = ts[0];
    char lft = c.at(t - 1, '.'), rgt = c.at(t + 1, '.');
    bool right_pair = lft != '.' && lft != 'T' && rgt == '.' && c.at(t - 2, '.') == '.';
    bool left_pair = rgt != '.' && rgt != 'T' && lft == '.' && c.at(t + 2, '.') == '.';
    if (right_pair == left_pair) return MidCollision{};
    if (right_pair) {
      pair_lo = t - 1;
      pair_hi = t;
      dir = 'R';
      code = lft;
    } else {
      pair_lo = t;
      pair_hi = t + 1;
      dir = 'L';
      code = rgt;
    }
  }
  // delete the pair cells, close the gap, check the grid
  std::vector<std::pair<long, char>> syms;
  for (auto& [p, s] : c.support) {
    if (ts.size() == 1 && p >= pair_lo && p <= pair_hi) continue;
    long q = (ts.size() == 1 && p > pair_hi) ? p - 2 : p;
    syms.push_back({q, s});
  }
  for (auto& [p, s] : syms)
    if (s != '0' && s != '1' && s != 'y' && s != 'A')
      return MidCollision{};
  if (!syms.empty()) {
    long base = syms.front().first;
    for (auto& [p, s] : syms)
      if ((p - base) % 3 != 0)
        return MidCollision{};
    for (size_t i = 1; i < syms.size(); ++i)
      if (syms[i].first != syms[i - 1].first + 3)
        return Desync{"gap in the tape grid"};
  }
  DecodedTm d;
  if (ts.empty()) {
    // headless configuration: tape only
    if (syms.empty()) return d;
    d.has_head = false;
    for (auto& [p, s] : syms) d.config.right.push_back(s);
    // representation without a head: store everything in right, scanned blank
    return d;
  }
  auto state = cat.state_for(code, dir);
  if (!state) return MidCollision{};  // transient pair-like shapes
  d.has_head = true;
  d.config.state = *state;
  // head target slot = first symbol strictly beyond the pair (direction R)
  // or before it (direction L); fresh blank tape when none exists.
  long head;
  if (dir == 'R') {
    head = pair_hi + 1;  // minimal position beyond the pair, snap to grid
    // actual slot = smallest symbol position (post-closure) >= head
    long cand = std::numeric_limits<long>::max();
    for (auto& [p, s] : syms)
      if (p >= head - 2) cand = std::min(cand, p);
    head = (cand == std::numeric_limits<long>::max())
               ? (syms.empty() ? 0 : syms.back().first + 3)
               : cand;
  } else {
    long cand = std::numeric_limits<long>::min();
    for (auto& [p, s] : syms)
      if (p <= pair_lo) cand = std::max(cand, p);
    head = (cand == std::numeric_limits<long>::min())
               ? (syms.empty() ? 0 : syms.front().first - 3)
               : cand;
  }
  for (auto& [p, s] : syms) {
    if (p < head)
      d.config.left.insert(d.config.left.begin(), s);  // nearest-first
    else if (p == head)
      d.config.scanned = s;
    else
      d.config.right.push_back(s);
  }
  if (std::none_of(syms.begin(), syms.end(),
                   [&](auto& ps) { return ps.first == head; }))
    d.config.scanned = '0';
  d.config.normalize('0');
  return d;
}

}  // namespace strongca
