#pragma once

// Accessors for the bundled line-automaton tables.

#include "strongca/data.hpp"
#include "strongca/line.hpp"

namespace strongca {

inline const RuleTable1D& ln7_table() {
  static const RuleTable1D t = parse_rules_1d(data::ln7_rules, "ln7");
  return t;
}

inline const RuleTable1D& ln9_table() {
  static const RuleTable1D t = parse_rules_1d(data::ln9_rules, "ln9");
  return t;
}

inline const RuleTable1D& ln9_halting_table() {
  static const RuleTable1D t = parse_rules_1d(data::ln9halt_rules, "ln9halt");
  return t;
}

inline const RuleTable1D& ln11_table() {
  static const RuleTable1D t = parse_rules_1d(data::ln11_rules, "ln11");
  return t;
}

}  // namespace strongca
