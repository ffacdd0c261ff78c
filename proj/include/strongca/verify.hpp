#pragma once

// Verification of the bundled automata against the printed space-time
// fixtures, plus cosimulation of a Turing machine with its line embedding.

#include <sstream>
#include <string>
#include <vector>

#include "strongca/data.hpp"
#include "strongca/encoding.hpp"
#include "strongca/line.hpp"
#include "strongca/line_tables.hpp"

namespace strongca {

struct Finding {
  std::string check;
  bool ok = false;
  std::string detail;
};

struct Report {
  std::vector<Finding> findings;

  bool all_ok() const {
    for (auto& f : findings)
      if (!f.ok) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (auto& f : findings)
      if (!f.ok) ++n;
    return n;
  }
  void add(std::string check, bool ok, std::string detail = "") {
    findings.push_back({std::move(check), ok, std::move(detail)});
  }
  std::string to_text() const {
    std::string out;
    for (auto& f : findings) {
      out += f.ok ? "PASS " : "FAIL ";
      out += f.check;
      if (!f.detail.empty()) out += ": " + f.detail;
      out += '\n';
    }
    return out;
  }
};

// -------------------------------------------------------- golden blocks
//
// A fixture block is rows of cells printed two columns apart ('.' = blank,
// space = outside the printed window). Rows are matched step for step
// against the simulation; a row may be printed with a small horizontal
// offset (the printed tables shift a few continuation rows), and rows whose
// characters fall between cell columns are display artifacts and are
// skipped, consuming one step.

struct GoldenBlock {
  std::string title;        // e.g. "0T 1"
  std::vector<std::string> rows;
  std::string context;      // extra cells, e.g. "0 @ -1"
};

inline std::vector<GoldenBlock> parse_golden(std::string_view text,
                                             std::string_view key = "block") {
  std::vector<GoldenBlock> blocks;
  GoldenBlock cur;
  bool in_block = false;
  std::string context;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    if (line.substr(0, 11) == "-- context:") {
      context = std::string(detail::trim(line.substr(11)));
      continue;
    }
    if (line.substr(0, 2) == "--") continue;
    if (line.substr(0, key.size()) == key) {
      cur = GoldenBlock{};
      cur.title = std::string(detail::trim(line.substr(key.size())));
      cur.context = context;
      in_block = true;
      continue;
    }
    if (line.substr(0, 3) == "end") {
      if (in_block) blocks.push_back(cur);
      in_block = false;
      continue;
    }
    if (in_block && !detail::trim(line).empty())
      cur.rows.push_back(std::string(line));
  }
  return blocks;
}

namespace detail {

// Parse one fixture row into (cell -> state) given the block's base column.
// Returns false when any character is off the cell grid (display artifact).
inline bool parse_fixture_row(const std::string& row, long base, int shift,
                              std::map<long, char>& cells) {
  cells.clear();
  for (size_t i = 0; i < row.size(); ++i) {
    char ch = row[i];
    if (ch == ' ') continue;
    if ((static_cast<long>(i) - base) % 2 != 0) return false;
    cells[(static_cast<long>(i) - base) / 2 + shift] = ch;
  }
  return true;
}

inline long fixture_base(const std::vector<std::string>& rows) {
  long base = -1;
  for (auto& r : rows)
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] != ' ') {
        if (base < 0 || static_cast<long>(i) < base) base = static_cast<long>(i);
      }
  return base < 0 ? 0 : base;
}

// Does the configuration match the printed row (spaces = don't care)?
inline bool row_matches(const LineConfiguration& cfg, char q,
                        const std::string& row, long base, int shift) {
  for (size_t i = 0; i < row.size(); ++i) {
    char ch = row[i];
    if (ch == ' ') continue;
    if ((static_cast<long>(i) - base) % 2 != 0) return false;
    long cell = (static_cast<long>(i) - base) / 2 + shift;
    if (cfg.at(cell, q) != ch) return false;
  }
  return true;
}

inline LineConfiguration fixture_start(const GoldenBlock& b, long base, char q) {
  std::map<long, char> cells;
  parse_fixture_row(b.rows.at(0), base, 0, cells);
  LineConfiguration cfg;
  for (auto& [p, s] : cells)
    if (s != q) cfg.support[p] = s;
  if (!b.context.empty()) {
    // context format: "<state> @ <pos>" entries separated by commas
    std::string s = b.context;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto at = item.find('@');
      auto st = strongca::detail::trim(item.substr(0, at));
      auto ps = strongca::detail::trim(item.substr(at + 1));
      cfg.support[strongca::detail::parse_long(ps, "context position")] = st[0];
    }
  }
  return cfg;
}

}  // namespace detail

// Replay one fixture block under a table. Rows must match consecutive steps;
// every row consumes exactly one step. Off-grid rows are skipped (display
// artifacts); rows may match at a horizontal shift of up to two cells.
inline Finding verify_block(const RuleTable1D& t, const GoldenBlock& b,
                            std::string check_name) {
  Finding f;
  f.check = std::move(check_name);
  long base = detail::fixture_base(b.rows);
  LineConfiguration cfg = detail::fixture_start(b, base, t.quiescent);
  for (size_t i = 1; i < b.rows.size(); ++i) {
    auto next = ca_step(t, cfg);
    if (auto* err = std::get_if<MissingRule>(&next)) {
      f.ok = false;
      f.detail = "step " + std::to_string(i) + ": " + err->describe();
      return f;
    }
    cfg = std::get<LineConfiguration>(next);
    std::map<long, char> probe;
    if (!detail::parse_fixture_row(b.rows[i], base, 0, probe)) continue;  // artifact row
    bool ok = false;
    for (int shift : {0, -1, 1, -2, 2})
      if (detail::row_matches(cfg, t.quiescent, b.rows[i], base, shift)) {
        ok = true;
        break;
      }
    if (!ok) {
      f.ok = false;
      f.detail = "step " + std::to_string(i) + " diverges from the printed row";
      return f;
    }
  }
  f.ok = true;
  return f;
}

// All bundled collision fixtures (36 impulsion/symbol blocks under the
// seven-state table, 4 growth-zone blocks under the nine/eleven-state one).
inline Report verify_collisions() {
  Report rep;
  auto blocks = parse_golden(data::golden_collisions);
  for (auto& b : blocks)
    rep.findings.push_back(verify_block(ln7_table(), b, "collision " + b.title));
  auto uz = parse_golden(data::golden_uzone);
  for (auto& b : uz) {
    rep.findings.push_back(verify_block(ln11_table(), b, "zone collision " + b.title));
    rep.findings.push_back(verify_block(ln9_table(), b, "zone collision " + b.title + " (ln9)"));
  }
  return rep;
}

// The stopping-machinery fixtures under the eleven-state table.
inline Report verify_stopping_fixtures() {
  Report rep;
  int i = 0;
  for (auto& b : parse_golden(data::golden_signal_cross, "panel"))
    rep.findings.push_back(
        verify_block(ln11_table(), b, "signal crossing panel " + std::to_string(i++)));
  for (auto& b : parse_golden(data::golden_signal_end, "panel"))
    rep.findings.push_back(verify_block(ln11_table(), b, "signal at zone end"));
  i = 0;
  for (auto& b : parse_golden(data::golden_background, "panel")) {
    rep.findings.push_back(
        verify_block(ln11_table(), b, "background growth (ln11)"));
    rep.findings.push_back(verify_block(ln9_table(), b, "background growth (ln9)"));
  }
  return rep;
}

// ------------------------------------------------------------ cosimulation
//
// Run the machine and the line automaton side by side. A configuration of
// the automaton *witnesses* a machine configuration when it strictly decodes
// to it. Witnesses must appear in machine order with at most `max_gap`
// automaton steps between them. Consecutive collisions overlap by a step or
// two (the write-back of one collision completes after the next has begun),
// so a single machine configuration may go unwitnessed between two
// witnessed ones; the local space-time fidelity of every collision is
// covered separately by the block fixtures.

struct CosimResult {
  bool ok = false;
  std::string detail;
  long ca_steps = 0;
  int tm_steps_matched = 0;
  bool ca_halted = false;      // fixpoint reached
  LineConfiguration final_config;
};

inline CosimResult cosimulate(const TuringMachine& m, const RuleTable1D& t,
                              const TmConfiguration& c0, char incoming,
                              int n_tm_steps, const ImpulsionCatalog& cat,
                              long max_ca_steps = 0, int max_gap = 9,
                              const EncodeOptions& opt = {}) {
  CosimResult res;
  TmTrace tm = tm_run(m, c0, n_tm_steps);
  if (max_ca_steps == 0)
    max_ca_steps = 40L * static_cast<long>(tm.configs.size()) + 2000;
  LineConfiguration cfg = encode_tm(c0, cat, incoming, opt);
  {
    auto d0 = decode_ca(cfg, cat);
    auto* dd = std::get_if<DecodedTm>(&d0);
    if (!dd || !dd->has_head || !(dd->config == tm.configs.front())) {
      res.detail = "initial encoding does not decode back";
      return res;
    }
  }
  size_t next_idx = 1;
  long last_witness = 0;
  for (long step = 0; step < max_ca_steps; ++step) {
    if (next_idx < tm.configs.size() && step - last_witness > max_gap) {
      res.detail = "no witness for machine step " + std::to_string(next_idx) +
                   " within " + std::to_string(max_gap) + " automaton steps";
      return res;
    }
    auto next = ca_step(t, cfg);
    if (auto* err = std::get_if<MissingRule>(&next)) {
      res.detail = err->describe() + " at automaton step " + std::to_string(step);
      return res;
    }
    auto& nc = std::get<LineConfiguration>(next);
    bool fix = nc == cfg;
    cfg = std::move(nc);
    ++res.ca_steps;
    if (next_idx < tm.configs.size()) {
      auto d = decode_ca(cfg, cat);
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
    }
    if (fix) {
      res.ca_halted = true;
      break;
    }
  }
  res.tm_steps_matched = static_cast<int>(next_idx) - 1;
  res.final_config = cfg;
  if (next_idx < tm.configs.size()) {
    if (res.detail.empty())
      res.detail = "only " + std::to_string(next_idx - 1) + " of " +
                   std::to_string(tm.configs.size() - 1) + " machine steps witnessed";
    return res;
  }
  res.ok = true;
  return res;
}

}  // namespace strongca
