#pragma once

// Accessors for the bundled grid rule tables.

#include "strongca/data.hpp"
#include "strongca/hyper/rules.hpp"

namespace strongca::hyp {

inline const RotRuleTable& p_table(GridKind kind) {
  static const RotRuleTable penta =
      parse_grid_rules(data::p_penta_rules, GridKind::pentagrid, "p_penta");
  static const RotRuleTable hepta =
      parse_grid_rules(data::p_hepta_rules, GridKind::heptagrid, "p_hepta");
  static const RotRuleTable dodec =
      parse_grid_rules(data::p_dodec_rules, GridKind::dodecagrid, "p_dodec");
  switch (kind) {
    case GridKind::pentagrid: return penta;
    case GridKind::heptagrid: return hepta;
    case GridKind::dodecagrid: return dodec;
  }
  throw parse_error("unknown grid kind");
}

inline const RotRuleTable& q_table(GridKind kind) {
  static const RotRuleTable penta =
      parse_grid_rules(data::q_penta_rules, GridKind::pentagrid, "q_penta");
  static const RotRuleTable hepta =
      parse_grid_rules(data::q_hepta_rules, GridKind::heptagrid, "q_hepta");
  static const RotRuleTable dodec =
      parse_grid_rules(data::q_dodec_rules, GridKind::dodecagrid, "q_dodec");
  switch (kind) {
    case GridKind::pentagrid: return penta;
    case GridKind::heptagrid: return hepta;
    case GridKind::dodecagrid: return dodec;
  }
  throw parse_error("unknown grid kind");
}

}  // namespace strongca::hyp
