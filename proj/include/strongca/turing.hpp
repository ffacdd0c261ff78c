#pragma once

// Deterministic single-tape Turing machines with the seven-state four-letter
// universal machine as built-in data, plus the impulsion budget analysis
// used by the line embedding.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strongca/util.hpp"

namespace strongca {

enum class Move : char { L = 'L', R = 'R', S = 'S' };

struct Instruction {
  char write;
  Move move;
  int next;
};

struct TuringMachine {
  std::set<int> states;
  std::set<char> symbols;
  char blank = '0';
  std::map<std::pair<int, char>, Instruction> table;  // absent entry = halt

  void validate() const {
    if (!symbols.count(blank)) throw parse_error("blank symbol not declared");
    for (auto& [key, ins] : table) {
      if (!states.count(key.first) || !symbols.count(key.second))
        throw parse_error("instruction outside declared state/symbol sets");
      if (!states.count(ins.next) || !symbols.count(ins.write))
        throw parse_error("instruction writes outside declared sets");
    }
  }
};

// Two-sided tape in canonical form: no trailing blanks on either side.
struct TmConfiguration {
  std::string left;   // nearest-first (left[0] is just left of the head)
  char scanned = '0';
  std::string right;  // nearest-first
  int state = 1;

  bool operator==(const TmConfiguration&) const = default;

  void normalize(char blank) {
    while (!left.empty() && left.back() == blank) left.pop_back();
    while (!right.empty() && right.back() == blank) right.pop_back();
  }
};

struct TmStepHalted {};

inline std::optional<TmConfiguration> tm_step(const TuringMachine& m,
                                              const TmConfiguration& c) {
  if (!m.states.count(c.state) || !m.symbols.count(c.scanned))
    throw parse_error("configuration outside the machine's declared sets");
  auto it = m.table.find({c.state, c.scanned});
  if (it == m.table.end()) return std::nullopt;  // halt
  const Instruction& ins = it->second;
  TmConfiguration n = c;
  n.scanned = ins.write;
  n.state = ins.next;
  if (ins.move == Move::L) {
    n.right.insert(n.right.begin(), n.scanned);
    if (n.left.empty()) {
      n.scanned = m.blank;
    } else {
      n.scanned = n.left.front();
      n.left.erase(n.left.begin());
    }
  } else if (ins.move == Move::R) {
    n.left.insert(n.left.begin(), n.scanned);
    if (n.right.empty()) {
      n.scanned = m.blank;
    } else {
      n.scanned = n.right.front();
      n.right.erase(n.right.begin());
    }
  }
  n.normalize(m.blank);
  return n;
}

enum class TmStatus { halted, budget_exhausted };

struct TmTrace {
  std::vector<TmConfiguration> configs;
  TmStatus status = TmStatus::budget_exhausted;
};

inline TmTrace tm_run(const TuringMachine& m, TmConfiguration c0, int max_steps) {
  TmTrace tr;
  c0.normalize(m.blank);
  tr.configs.push_back(c0);
  for (int i = 0; i < max_steps; ++i) {
    auto next = tm_step(m, tr.configs.back());
    if (!next) {
      tr.status = TmStatus::halted;
      return tr;
    }
    tr.configs.push_back(*next);
  }
  tr.status = TmStatus::budget_exhausted;
  return tr;
}

// The universal seven-state machine over {0,1,y,A}. 27 instructions; the
// single halting cell is (3, 0).
inline const TuringMachine& minsky_utm() {
  static const TuringMachine m = [] {
    TuringMachine t;
    t.states = {1, 2, 3, 4, 5, 6, 7};
    t.symbols = {'0', '1', 'y', 'A'};
    t.blank = '0';
    auto ins = [&](int p, char x, char w, char mv, int q) {
      t.table[{p, x}] = Instruction{w, static_cast<Move>(mv), q};
    };
    ins(1, '0', '0', 'L', 1); ins(1, '1', '1', 'L', 2);
    ins(1, 'y', '0', 'L', 1); ins(1, 'A', '1', 'L', 1);
    ins(2, '0', 'y', 'R', 2); ins(2, '1', 'A', 'R', 2);
    ins(2, 'y', '0', 'L', 1); ins(2, 'A', 'y', 'R', 6);
    /* (3,'0') halts */       ins(3, '1', 'A', 'L', 3);
    ins(3, 'y', 'y', 'L', 3); ins(3, 'A', '1', 'L', 4);
    ins(4, '0', 'y', 'R', 5); ins(4, '1', '1', 'L', 7);
    ins(4, 'y', 'y', 'L', 4); ins(4, 'A', '1', 'L', 4);
    ins(5, '0', 'y', 'L', 3); ins(5, '1', 'A', 'R', 5);
    ins(5, 'y', 'y', 'R', 5); ins(5, 'A', '1', 'R', 5);
    ins(6, '0', 'A', 'L', 3); ins(6, '1', 'A', 'R', 6);
    ins(6, 'y', 'y', 'R', 6); ins(6, 'A', '1', 'R', 6);
    ins(7, '0', 'y', 'R', 6); ins(7, '1', '1', 'R', 7);
    ins(7, 'y', '0', 'R', 7); ins(7, 'A', '0', 'R', 2);
    return t;
  }();
  return m;
}

// ------------------------------------------------------------- impulsions
//
// An impulsion encodes "the head arrives in state q moving in direction d".
// States are partitioned by the directions through which they are entered.

struct ImpulsionCatalog {
  int s_left = 0, s_right = 0, s_both = 0;  // arrival-direction partition
  int n_left = 0, n_right = 0;
  int mu = 0;
  std::map<std::pair<int, char>, char> code;  // (state, 'L'/'R') -> symbol

  std::optional<char> code_for(int state, char dir) const {
    auto it = code.find({state, dir});
    if (it == code.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> state_for(char c, char dir) const {
    for (auto& [k, v] : code)
      if (v == c && k.second == dir) return k.first;
    return std::nullopt;
  }
};

// Assign one code per (state, arrival-direction). Codes may be reused across
// directions. For the built-in universal machine the assignment is pinned:
// right arrivals {2,5,6,7} -> y,0,1,A and left arrivals {1,2,3,4,7} ->
// y,0,1,A,B.
inline ImpulsionCatalog impulsion_catalog(const TuringMachine& m,
                                          const std::vector<char>& codes) {
  std::set<int> left, right;
  for (auto& [key, ins] : m.table) {
    if (ins.move == Move::L) left.insert(ins.next);
    if (ins.move == Move::R) right.insert(ins.next);
  }
  ImpulsionCatalog cat;
  for (int q : left) (right.count(q) ? cat.s_both : cat.s_left)++;
  for (int q : right)
    if (!left.count(q)) cat.s_right++;
  cat.n_left = static_cast<int>(left.size());
  cat.n_right = static_cast<int>(right.size());
  cat.mu = std::max(cat.n_left, cat.n_right);
  if (static_cast<int>(codes.size()) < cat.mu)
    throw parse_error("not enough code symbols for the impulsions: need " +
                      std::to_string(cat.mu));
  size_t i = 0;
  for (int q : right) cat.code[{q, 'R'}] = codes[i++ % codes.size()];
  i = 0;
  for (int q : left) cat.code[{q, 'L'}] = codes[i++ % codes.size()];
  return cat;
}

// The pinned catalog for the built-in machine.
inline const ImpulsionCatalog& minsky_catalog() {
  static const ImpulsionCatalog cat = [] {
    ImpulsionCatalog c = impulsion_catalog(minsky_utm(),
                                           {'y', '0', '1', 'A', 'B'});
    // right arrivals: 2,5,6,7 -> y,0,1,A ; left arrivals: 1,2,3,4,7 -> y,0,1,A,B
    c.code = {{{2, 'R'}, 'y'}, {{5, 'R'}, '0'}, {{6, 'R'}, '1'}, {{7, 'R'}, 'A'},
              {{1, 'L'}, 'y'}, {{2, 'L'}, '0'}, {{3, 'L'}, '1'}, {{4, 'L'}, 'A'},
              {{7, 'L'}, 'B'}};
    return c;
  }();
  return cat;
}

// ---------------------------------------------------------------- text format
//
//   states: 1 2 ... n
//   symbols: a b ... blank=a
//   p x -> M [y] [q]       (omitted y / q mean unchanged)
//   p x -> HALT

inline TuringMachine parse_machine(std::string_view text) {
  TuringMachine m;
  detail::for_data_lines(text, [&](int lineno, std::string_view line) {
    auto fail = [&](const std::string& msg) {
      throw parse_error("machine line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.substr(0, 7) == "states:") {
      for (auto tok : detail::split_ws(line.substr(7)))
        m.states.insert(static_cast<int>(detail::parse_long(tok, "state")));
      return;
    }
    if (line.substr(0, 8) == "symbols:") {
      for (auto tok : detail::split_ws(line.substr(8))) {
        if (tok.substr(0, 6) == "blank=") {
          if (tok.size() != 7) fail("blank= takes a single character");
          m.blank = tok[6];
          m.symbols.insert(tok[6]);
        } else if (tok.size() == 1) {
          m.symbols.insert(tok[0]);
        } else {
          fail("symbols are single characters");
        }
      }
      return;
    }
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) fail("expected 'p x -> ...'");
    auto lhs = detail::split_ws(line.substr(0, arrow));
    auto rhs = detail::split_ws(line.substr(arrow + 2));
    if (lhs.size() != 2 || lhs[1].size() != 1) fail("left side must be 'p x'");
    int p = static_cast<int>(detail::parse_long(lhs[0], "state"));
    char x = lhs[1][0];
    if (rhs.size() == 1 && rhs[0] == "HALT") return;  // explicit halting cell
    if (rhs.empty() || rhs.size() > 3) fail("right side must be 'M [y] [q]'");
    if (rhs[0].size() != 1 || (rhs[0][0] != 'L' && rhs[0][0] != 'R' && rhs[0][0] != 'S'))
      fail("move must be L, R or S");
    Instruction ins{x, static_cast<Move>(rhs[0][0]), p};
    size_t i = 1;
    // A single character declared as a symbol is read as the write symbol,
    // even if it is also a digit; use the full 'M y q' form to disambiguate.
    if (i < rhs.size() && rhs[i].size() == 1 && m.symbols.count(rhs[i][0])) {
      ins.write = rhs[i][0];
      ++i;
    }
    if (i < rhs.size()) {
      ins.next = static_cast<int>(detail::parse_long(rhs[i], "next state"));
      ++i;
    }
    if (i != rhs.size()) fail("trailing tokens");
    if (!m.table.emplace(std::pair{p, x}, ins).second)
      fail("duplicate instruction");
  });
  m.validate();
  return m;
}

inline std::string serialize_machine(const TuringMachine& m) {
  std::string out = "states:";
  for (int s : m.states) out += ' ' + std::to_string(s);
  out += "\nsymbols:";
  for (char c : m.symbols) {
    out += ' ';
    out += c;
  }
  out += " blank=";
  out += m.blank;
  out += '\n';
  for (int p : m.states)
    for (char x : m.symbols) {
      auto it = m.table.find({p, x});
      out += std::to_string(p);
      out += ' ';
      out += x;
      out += " -> ";
      if (it == m.table.end()) {
        out += "HALT";
      } else {
        out += static_cast<char>(it->second.move);
        out += ' ';
        out += it->second.write;
        out += ' ';
        out += std::to_string(it->second.next);
      }
      out += '\n';
    }
  return out;
}

}  // namespace strongca
