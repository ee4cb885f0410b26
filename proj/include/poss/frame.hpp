#ifndef POSS_FRAME_HPP
#define POSS_FRAME_HPP

#include <string>
#include <vector>

#include "poss/report.hpp"
#include "poss/states.hpp"

namespace poss {

// Finite poset of states; x <= y is read "x refines y", so refinements sit
// below what they refine and truth persists downward.
struct FinitePoset {
  int n = 0;
  std::vector<StateSet> below;  // below[y] = set of x with x <= y (incl. y)
  std::vector<StateSet> above;  // above[x] = set of y with x <= y (incl. x)

  FinitePoset() = default;
  // Builds from <=-pairs; reflexive pairs are implied. Throws if the result
  // is not reflexive-transitive-antisymmetric (no closure is applied).
  FinitePoset(int n, const std::vector<std::pair<int, int>>& leq_pairs);

  bool leq(int x, int y) const { return contains(below[y], x); }
  StateSet down(int x) const { return below[x]; }
  // x and y are compatible iff some state refines both.
  bool compat(int x, int y) const { return (below[x] & below[y]) != 0; }

  static FinitePoset discrete(int n);
};

// Downward interior, closure (upward), and down-closure of arbitrary sets.
StateSet interior(const FinitePoset& p, StateSet x);
StateSet closure(const FinitePoset& p, StateSet x);
StateSet down_set(const FinitePoset& p, StateSet x);

bool is_persistent(const FinitePoset& p, StateSet x);
bool is_refinable(const FinitePoset& p, StateSet x);
inline bool is_regular_open(const FinitePoset& p, StateSet x) {
  return is_persistent(p, x) && is_refinable(p, x);
}

// Smallest regular open superset: int(cl(down(x))).
StateSet ro_hull(const FinitePoset& p, StateSet x);

// All regular open sets, sorted.
Family regular_opens(const FinitePoset& p);

struct PossibilityFrame {
  FinitePoset poset;
  std::vector<std::string> indices;  // sorted, duplicate-free
  std::vector<Relation> rels;        // aligned with indices
  Family props;

  int size() const { return poset.n; }
  int index_of(const std::string& i) const;
  const Relation& rel(const std::string& i) const;
};

// The operations interpreting box and (derived) diamond on state sets.
StateSet box_op(const PossibilityFrame& f, int rel_index, StateSet x);
StateSet box_op(const PossibilityFrame& f, const std::string& index, StateSet x);
StateSet diamond_op(const PossibilityFrame& f, int rel_index, StateSet x);
StateSet diamond_op(const PossibilityFrame& f, const std::string& index, StateSet x);

// X implies Y, pointwise over refinements: int((S \ X) | Y).
StateSet implies_op(const FinitePoset& p, StateSet x, StateSet y);

// The interplay conditions relating accessibility and refinement. Names as
// accepted by check_interplay (ASCII; `_` marks the underlined variants):
//   R-rule R-com up-R R-down R=>win R=>win_ R<=>win_
//   R-refinability R-refinability+ R-refinability++
//   R-dense R-max R-maxe R-princ R-common
std::vector<std::string> interplay_condition_names();
CheckReport check_interplay(const FinitePoset& p, const Relation& r,
                            const std::string& condition);
CheckReport check_interplay(const PossibilityFrame& f, const std::string& index,
                            const std::string& condition);

// Checks the frame axioms in a fixed clause order: poset, empty set in P,
// closure of P under intersection / implication / box per sorted index, and
// P inside RO. Reports the first violated clause.
CheckReport validate_frame(const PossibilityFrame& f);

struct FrameClasses {
  bool full = false;
  bool standard = false;
  bool strong = false;
  bool separative = false;
  bool leq_tight = false;
  bool r_tight = false;
  bool tight = false;
  bool differentiated = false;
  bool atomic = false;
  bool principal = false;
  bool lattice_complete = false;
  bool rich = false;
  bool quasi_functional = false;
  bool functional = false;
  bool filter_descriptive = false;
};

FrameClasses classify(const PossibilityFrame& f);

// x refines y up to density: every refinement of x is compatible with y.
bool s_refines(const FinitePoset& p, int x, int y);
inline bool s_refines(const PossibilityFrame& f, int x, int y) {
  return s_refines(f.poset, x, y);
}

// Minimal points of the poset.
StateSet minimal_points(const FinitePoset& p);

// Helpers shared by several modules.
bool is_partial_function(const Relation& r);
StateSet rel_image(const Relation& r, StateSet x);
// Maximum of a nonempty state set in the poset, or -1 if there is none.
int maximum_of(const FinitePoset& p, StateSet x);

}  // namespace poss

#endif
