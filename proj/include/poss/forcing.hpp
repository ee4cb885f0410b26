#ifndef POSS_FORCING_HPP
#define POSS_FORCING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poss/formula.hpp"
#include "poss/frame.hpp"
#include "poss/report.hpp"

namespace poss {

// A model is a frame plus an admissible valuation. Every value must be a
// member of the frame's props; the reserved #t/#f variable defaults to the
// empty set and never needs binding (both truth sets are independent of it).
struct Model {
  const PossibilityFrame* frame = nullptr;
  std::map<std::string, StateSet> valuation;
};

bool forces(const Model& m, int state, const Fml& f, Budget* budget = nullptr);
StateSet truth_set(const Model& m, const Fml& f, Budget* budget = nullptr);

// Forcing over an extended frame: bot_state is the distinguished minimum and
// negation skips it, so every formula is forced there.
bool forces_extended(const Model& m, int bot_state, int state, const Fml& f);
StateSet truth_set_extended(const Model& m, int bot_state, const Fml& f);

// Validity over a frame sweeps every assignment of props members to the
// variables of f (in lexicographic order over sorted variables); a failing
// report carries the first falsifying valuation and state. The returned sets
// are the valuation values in sorted-variable order.
struct ValidityReport {
  bool valid = true;
  std::vector<std::string> vars;
  std::vector<StateSet> valuation;
  int state = -1;

  explicit operator bool() const { return valid; }
};

ValidityReport valid_on_frame(const PossibilityFrame& f, const Fml& fml,
                              Budget* budget = nullptr);

// Classical Kripke baseline.
struct KripkeFrame {
  int n = 0;
  std::vector<std::string> indices;
  std::vector<Relation> rels;

  int index_of(const std::string& i) const;
};

struct KripkeModel {
  const KripkeFrame* frame = nullptr;
  std::map<std::string, StateSet> valuation;
};

bool kripke_forces(const KripkeModel& m, int world, const Fml& f);
ValidityReport kripke_valid(const KripkeFrame& f, const Fml& fml,
                            Budget* budget = nullptr);

// A Kripke frame is the discrete-order full possibility frame over its
// worlds.
PossibilityFrame as_possibility(const KripkeFrame& f);

}  // namespace poss

#endif
