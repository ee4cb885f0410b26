#ifndef POSS_BATTERY_HPP
#define POSS_BATTERY_HPP

#include <string>
#include <vector>

#include "poss/formula.hpp"

namespace poss {

// The fixed formula battery used by the equivalence tests: formulas of modal
// depth at most two over p1, p2 and index i. Versioned; extend only by
// appending.
const std::vector<Fml>& formula_battery();
const std::vector<std::string>& formula_battery_text();

// Battery with the index renamed (for two-index frames).
std::vector<Fml> formula_battery(const std::string& index);

}  // namespace poss

#endif
