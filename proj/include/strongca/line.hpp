#pragma once

// One-dimensional cellular automaton with the standard (radius-1)
// neighborhood, sparse two-sided configurations, and fixpoint halting.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "strongca/util.hpp"

namespace strongca {

struct RuleTable1D {
  std::string name;
  std::vector<char> alphabet;   // first entry is not required to be quiescent
  char quiescent = '.';
  std::map<std::array<char, 3>, char> rules;
  mutable std::set<std::array<char, 3>> exercised;  // for the lint report

  std::optional<char> lookup(char l, char c, char r) const {
    auto it = rules.find({l, c, r});
    if (it == rules.end()) return std::nullopt;
    exercised.insert(it->first);
    return it->second;
  }

  bool has_state(char c) const {
    for (char a : alphabet)
      if (a == c) return true;
    return false;
  }

  void validate() const {
    if (!has_state(quiescent)) throw parse_error("quiescent state not in alphabet");
    auto q = lookup(quiescent, quiescent, quiescent);
    if (!q || *q != quiescent)
      throw parse_error("table violates quiescence: (q,q,q) must map to q");
    for (auto& [ctx, n] : rules)
      for (char c : {ctx[0], ctx[1], ctx[2], n})
        if (!has_state(c))
          throw parse_error(std::string("rule uses undeclared state '") + c + "'");
  }
};

// Finite support over the integers; everything else is quiescent.
struct LineConfiguration {
  std::map<long, char> support;  // never stores the quiescent state

  bool operator==(const LineConfiguration&) const = default;

  char at(long p, char quiescent) const {
    auto it = support.find(p);
    return it == support.end() ? quiescent : it->second;
  }
  void set(long p, char s, char quiescent) {
    if (s == quiescent)
      support.erase(p);
    else
      support[p] = s;
  }
  bool empty() const { return support.empty(); }
  long lo() const { return support.empty() ? 0 : support.begin()->first; }
  long hi() const { return support.empty() ? 0 : support.rbegin()->first; }
};

struct MissingRule {
  long position;
  std::array<char, 3> context;
  long step = -1;

  std::string describe() const {
    std::string s = "no rule for (";
    s += context[0];
    s += ' ';
    s += context[1];
    s += ' ';
    s += context[2];
    s += ") at position " + std::to_string(position);
    if (step >= 0) s += " step " + std::to_string(step);
    return s;
  }
};

inline std::variant<LineConfiguration, MissingRule> ca_step(
    const RuleTable1D& t, const LineConfiguration& c) {
  LineConfiguration out;
  if (c.empty()) return out;
  const char q = t.quiescent;
  for (long p = c.lo() - 1; p <= c.hi() + 1; ++p) {
    char l = c.at(p - 1, q), m = c.at(p, q), r = c.at(p + 1, q);
    if (l == q && m == q && r == q) continue;
    auto n = t.lookup(l, m, r);
    if (!n) return MissingRule{p, {l, m, r}};
    out.set(p, *n, q);
  }
  return out;
}

enum class RunStatus { halted, budget_exhausted, missing_rule };

struct RunResult {
  std::vector<LineConfiguration> trace;
  RunStatus status = RunStatus::budget_exhausted;
  std::optional<MissingRule> error;
};

// Halting = two consecutive identical configurations.
inline RunResult ca_run_until_halt(const RuleTable1D& t,
                                   const LineConfiguration& c0, long max_steps,
                                   bool keep_trace = true) {
  RunResult res;
  res.trace.push_back(c0);
  LineConfiguration cur = c0;
  for (long i = 0; i < max_steps; ++i) {
    auto next = ca_step(t, cur);
    if (auto* err = std::get_if<MissingRule>(&next)) {
      res.status = RunStatus::missing_rule;
      res.error = *err;
      res.error->step = i;
      return res;
    }
    auto& nc = std::get<LineConfiguration>(next);
    if (nc == cur) {
      res.status = RunStatus::halted;
      if (keep_trace) res.trace.push_back(nc);
      return res;
    }
    cur = std::move(nc);
    if (keep_trace)
      res.trace.push_back(cur);
    else
      res.trace.back() = cur;
  }
  res.status = RunStatus::budget_exhausted;
  return res;
}

// ---------------------------------------------------------------- text format
//
// Rule files:   `alphabet: . 0 1 ...`, `quiescent: .`, lines `l c r -> n`.
// Config files: a single line over the alphabet ('.' = blank), optional
//               `@offset` header giving the absolute position of column 0.

inline RuleTable1D parse_rules_1d(std::string_view text, std::string name = "") {
  RuleTable1D t;
  t.name = std::move(name);
  detail::for_data_lines(text, [&](int lineno, std::string_view line) {
    auto fail = [&](const std::string& msg) {
      throw parse_error("rules line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.substr(0, 9) == "alphabet:") {
      for (auto tok : detail::split_ws(line.substr(9))) {
        if (tok.size() != 1) fail("states are single characters");
        t.alphabet.push_back(tok[0]);
      }
      return;
    }
    if (line.substr(0, 10) == "quiescent:") {
      auto toks = detail::split_ws(line.substr(10));
      if (toks.size() != 1 || toks[0].size() != 1) fail("quiescent: takes one state");
      t.quiescent = toks[0][0];
      return;
    }
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) fail("expected 'l c r -> n'");
    auto lhs = detail::split_ws(line.substr(0, arrow));
    auto rhs = detail::split_ws(line.substr(arrow + 2));
    if (lhs.size() != 3 || rhs.size() != 1) fail("expected 'l c r -> n'");
    for (auto& tok : lhs)
      if (tok.size() != 1) fail("states are single characters");
    if (rhs[0].size() != 1) fail("new state is a single character");
    std::array<char, 3> ctx{lhs[0][0], lhs[1][0], lhs[2][0]};
    auto [it, fresh] = t.rules.emplace(ctx, rhs[0][0]);
    if (!fresh && it->second != rhs[0][0]) fail("conflicting duplicate rule");
  });
  t.validate();
  return t;
}

inline std::string serialize_rules_1d(const RuleTable1D& t) {
  std::string out = "alphabet:";
  for (char a : t.alphabet) {
    out += ' ';
    out += a;
  }
  out += "\nquiescent: ";
  out += t.quiescent;
  out += '\n';
  for (auto& [ctx, n] : t.rules) {
    out += ctx[0];
    out += ' ';
    out += ctx[1];
    out += ' ';
    out += ctx[2];
    out += " -> ";
    out += n;
    out += '\n';
  }
  return out;
}

inline LineConfiguration parse_config_1d(std::string_view text, char quiescent = '.') {
  LineConfiguration c;
  long offset = 0;
  bool have_cells = false;
  detail::for_data_lines(text, [&](int lineno, std::string_view line) {
    if (line[0] == '@') {
      offset = detail::parse_long(line.substr(1), "offset");
      return;
    }
    if (have_cells)
      throw parse_error("config line " + std::to_string(lineno) +
                        ": multiple cell rows");
    have_cells = true;
    long p = offset;
    for (char ch : line) {
      if (ch == ' ') continue;  // spaces between cells are allowed
      if (ch != quiescent) c.support[p] = ch;
      ++p;
    }
  });
  return c;
}

inline std::string serialize_config_1d(const LineConfiguration& c,
                                       char quiescent = '.') {
  std::string out;
  if (!c.empty()) {
    out += "@" + std::to_string(c.lo()) + "\n";
    for (long p = c.lo(); p <= c.hi(); ++p) out += c.at(p, quiescent);
  }
  out += '\n';
  return out;
}

}  // namespace strongca
