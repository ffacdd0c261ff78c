#pragma once

// Tag systems with deletion number 2, extended tag systems, and the lifting
// of an extended system into a plain one that simulates it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strongca/util.hpp"

namespace strongca {

using Word = std::string;  // single-character symbols

struct TagSystem {
  std::set<char> alphabet;
  std::map<char, Word> productions;
  std::set<char> halting;
  static constexpr int deletion_number = 2;

  void validate() const {
    for (auto& [sym, prod] : productions) {
      if (!alphabet.count(sym))
        throw parse_error(std::string("production for symbol '") + sym +
                          "' outside the alphabet");
      for (char c : prod)
        if (!alphabet.count(c))
          throw parse_error(std::string("production of '") + sym +
                            "' uses '" + c + "' outside the alphabet");
    }
    for (char h : halting)
      if (!alphabet.count(h))
        throw parse_error(std::string("halting letter '") + h +
                          "' outside the alphabet");
  }
};

struct ExtendedTagSystem {
  TagSystem base;
  std::set<char> terminal;

  void validate() const {
    base.validate();
    for (char t : terminal) {
      if (!base.alphabet.count(t))
        throw parse_error(std::string("terminal letter '") + t +
                          "' outside the alphabet");
      if (base.halting.count(t))
        throw parse_error(std::string("terminal letter '") + t +
                          "' cannot also be halting");
    }
  }
};

enum class TagStatus { halted, budget_exhausted, empty_word_violation };

struct TagTrace {
  std::vector<Word> words;
  TagStatus status = TagStatus::budget_exhausted;
};

struct TagHalt {};  // marker: the step fired a halting letter

// One tag step: delete the first two letters, append p(first).
// The step is performed even when the first letter is halting; the halt
// takes effect after completion.
inline std::optional<Word> tag_step(const TagSystem& sys, const Word& w,
                                    bool* halted = nullptr) {
  if (w.size() < 2) return std::nullopt;  // empty-word violation
  char head = w[0];
  auto it = sys.productions.find(head);
  Word next = w.substr(2);
  if (it != sys.productions.end()) next += it->second;
  if (halted) *halted = sys.halting.count(head) > 0;
  return next;
}

inline TagTrace tag_run(const TagSystem& sys, const Word& w0, int max_steps) {
  TagTrace tr;
  tr.words.push_back(w0);
  Word w = w0;
  for (int i = 0; i < max_steps; ++i) {
    bool halted = false;
    auto next = tag_step(sys, w, &halted);
    if (!next) {
      tr.status = TagStatus::empty_word_violation;
      return tr;
    }
    w = *next;
    tr.words.push_back(w);
    if (halted) {
      tr.status = TagStatus::halted;
      return tr;
    }
  }
  tr.status = TagStatus::budget_exhausted;
  return tr;
}

// Indices i0=0 < i1 < ... of the trace words that start a new pass: word
// i_{k+1} is produced by the step that erased the last letter of word i_k.
// Tracked by following the position of the pass-initial word's last letter
// through the deletions.
inline std::vector<size_t> pass_boundaries(const TagTrace& trace) {
  std::vector<size_t> out{0};
  if (trace.words.empty()) return out;
  size_t i = 0;
  while (i + 1 < trace.words.size()) {
    // letters of words[i] still present: words[i].size() of them at the
    // front of the current word. Each step removes two.
    size_t remaining = trace.words[i].size();
    size_t steps = (remaining + 1) / 2;  // steps until the last letter dies
    if (i + steps >= trace.words.size()) break;
    i += steps;
    out.push_back(i);
  }
  return out;
}

// Lemma-style lifting: turn an extended system E (single halting letter h)
// into a plain tag system P with q(x)=p(x) for ordinary letters,
// q(h)=p(h)·"zz"·a with h demoted, q(b)=bb for terminal b, q(z)=empty and z
// the only halting letter. `filler` must be a terminal letter.
inline TagSystem lift_extended(const ExtendedTagSystem& E, char filler,
                               char z = 'z') {
  E.validate();
  if (E.base.halting.size() != 1)
    throw parse_error("lifting requires a single halting letter");
  if (!E.terminal.count(filler))
    throw parse_error(std::string("filler letter '") + filler +
                      "' is not terminal");
  if (E.base.alphabet.count(z))
    throw parse_error(std::string("auxiliary letter '") + z +
                      "' already in the alphabet");
  char h = *E.base.halting.begin();
  TagSystem P;
  P.alphabet = E.base.alphabet;
  P.alphabet.insert(z);
  for (auto& [sym, prod] : E.base.productions)
    if (!E.terminal.count(sym) && sym != h) P.productions[sym] = prod;
  Word hp;
  if (auto it = E.base.productions.find(h); it != E.base.productions.end())
    hp = it->second;
  P.productions[h] = hp + z + z + filler;
  for (char b : E.terminal) P.productions[b] = Word(2, b);
  P.productions[z] = Word();
  P.halting = {z};
  return P;
}

// Doubled subsampled word: s_i = w[2i] for even positions, each written twice.
inline Word doubled_subsample(const Word& w) {
  Word out;
  for (size_t i = 0; i < w.size(); i += 2) {
    out += w[i];
    out += w[i];
  }
  return out;
}

struct LemmaReport {
  bool conclusive = false;
  bool agree = false;
  std::string detail;
};

// Run E and its lifting on w; check that halting behaviour agrees and that,
// on acceptance, the lifted system ends with the doubled subsampled final
// word (with one filler letter in front when |final| is even).
inline LemmaReport verify_lemma(const ExtendedTagSystem& E, const Word& w,
                                int budget, char filler) {
  LemmaReport rep;
  TagSystem P = lift_extended(E, filler);
  TagTrace te = tag_run(E.base, w, budget);
  if (te.status == TagStatus::budget_exhausted) {
    // P mimics E word for word until the halting letter fires, so within the
    // same budget it must not halt either.
    TagTrace tp0 = tag_run(P, w, budget);
    if (tp0.status == TagStatus::halted) {
      rep.conclusive = true;
      rep.agree = false;
      rep.detail = "lifted system halted but the extended one did not";
      return rep;
    }
    rep.conclusive = false;
    rep.detail = "budget exhausted on the extended system";
    return rep;
  }
  TagTrace tp = tag_run(P, w, static_cast<int>(te.words.size() +
                                               te.words.back().size()) + 8);
  if (te.status == TagStatus::empty_word_violation) {
    rep.conclusive = false;
    rep.detail = "extended run hit the empty word";
    return rep;
  }
  // E halted. The run is accepted only if the final word is all-terminal and
  // no terminal letter headed the word before the final step.
  const Word& final = te.words.back();
  bool accepted = std::all_of(final.begin(), final.end(),
                              [&](char c) { return E.terminal.count(c) > 0; });
  for (size_t i = 0; i + 1 < te.words.size(); ++i)
    if (!te.words[i].empty() && E.terminal.count(te.words[i][0])) accepted = false;
  if (!accepted) {
    rep.conclusive = false;
    rep.detail = "extended run halted but was not accepting";
    return rep;
  }
  if (tp.status != TagStatus::halted) {
    rep.conclusive = true;
    rep.agree = false;
    rep.detail = "lifted system did not halt on an accepted word";
    return rep;
  }
  Word expect = doubled_subsample(final);
  if (final.size() % 2 == 0) expect = Word(1, filler) + expect;
  rep.conclusive = true;
  rep.agree = tp.words.back() == expect;
  if (!rep.agree)
    rep.detail = "final word '" + tp.words.back() + "' differs from expected '" +
                 expect + "'";
  return rep;
}

// ---------------------------------------------------------------- text format
//
//   letter -> word        production (word over single-char symbols, `_` = empty)
//   halt: letters
//   terminal: letters     (extended systems)

inline ExtendedTagSystem parse_tag_system(std::string_view text) {
  ExtendedTagSystem E;
  detail::for_data_lines(text, [&](int lineno, std::string_view line) {
    auto fail = [&](const std::string& msg) {
      throw parse_error("tag system line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.substr(0, 5) == "halt:") {
      for (auto tok : detail::split_ws(line.substr(5))) {
        if (tok.size() != 1) fail("halting letters are single characters");
        E.base.halting.insert(tok[0]);
        E.base.alphabet.insert(tok[0]);
      }
      return;
    }
    if (line.substr(0, 9) == "terminal:") {
      for (auto tok : detail::split_ws(line.substr(9))) {
        if (tok.size() != 1) fail("terminal letters are single characters");
        E.terminal.insert(tok[0]);
        E.base.alphabet.insert(tok[0]);
      }
      return;
    }
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) fail("expected 'letter -> word'");
    auto lhs = detail::trim(line.substr(0, arrow));
    auto rhs = detail::trim(line.substr(arrow + 2));
    if (lhs.size() != 1) fail("left side must be a single letter");
    Word prod;
    if (rhs != "_")
      for (char c : rhs)
        if (c != ' ') prod += c;
    E.base.alphabet.insert(lhs[0]);
    for (char c : prod) E.base.alphabet.insert(c);
    if (!E.base.productions.emplace(lhs[0], prod).second)
      fail(std::string("duplicate production for '") + lhs[0] + "'");
  });
  E.validate();
  return E;
}

inline std::string serialize_tag_system(const ExtendedTagSystem& E) {
  std::string out;
  for (auto& [sym, prod] : E.base.productions) {
    out += sym;
    out += " -> ";
    out += prod.empty() ? "_" : prod;
    out += '\n';
  }
  if (!E.base.halting.empty()) {
    out += "halt:";
    for (char h : E.base.halting) {
      out += ' ';
      out += h;
    }
    out += '\n';
  }
  if (!E.terminal.empty()) {
    out += "terminal:";
    for (char t : E.terminal) {
      out += ' ';
      out += t;
    }
    out += '\n';
  }
  return out;
}

}  // namespace strongca
