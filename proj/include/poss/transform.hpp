#ifndef POSS_TRANSFORM_HPP
#define POSS_TRANSFORM_HPP

#include <string>
#include <vector>

#include "poss/forcing.hpp"
#include "poss/frame.hpp"

namespace poss {

// States of the possibilization are the nonempty world sets X, ordered by
// inclusion and numbered by ascending mask; XRY iff Y is a subset of R[X].
// The input must be a world frame: a frame with discrete refinement order.
// P becomes the down-sets of the input's admissible sets plus the empty set.
PossibilityFrame powerset_possibilization(const PossibilityFrame& world_frame);
PossibilityFrame powerset_possibilization(const KripkeFrame& f);
// Mask of possibilization states contained in the world set v (the
// possibilization of a world valuation value).
StateSet possibilize_valuation(int world_count, StateSet v);

// Replaces each relation by the tight relation xRy iff every admissible set
// boxed at x contains y; same states, order, and props.
PossibilityFrame box_tighten(const PossibilityFrame& f);

struct QuotientResult {
  PossibilityFrame frame;
  std::vector<int> map;  // state -> class representative index
};

// Collapses states equivalent under the two-sided refinement preorder; each
// class is represented by its least member id, classes numbered ascending.
QuotientResult separative_quotient(const PossibilityFrame& f);

// Replaces the order by P-indistinguishability, quotients its symmetrization,
// and replaces each relation by the tight relation.
QuotientResult tighten(const PossibilityFrame& f);

// Requires R-max on every index; each relation becomes the partial function
// picking the maximum successor.
PossibilityFrame functionalize(const PossibilityFrame& f);

struct AtomStructureResult {
  PossibilityFrame frame;           // a world frame (discrete order)
  std::vector<int> minimal_states;  // original ids of the minimal points
};

// Restriction to the minimal points with aR'b iff a sees some x refined by b.
AtomStructureResult atom_structure(const PossibilityFrame& f);

struct DisjointUnionResult {
  PossibilityFrame frame;
  std::vector<std::vector<int>> embeddings;  // per summand: state -> new id
};

DisjointUnionResult disjoint_union(const std::vector<PossibilityFrame>& frames);

enum class SubframeKind { Generated, Selective, Neither };
std::string to_string(SubframeKind k);

struct SubframeResult {
  PossibilityFrame frame;
  SubframeKind kind = SubframeKind::Neither;
  std::vector<int> states;  // original ids, ascending
};

SubframeResult subframe(const PossibilityFrame& f, StateSet subset);

// Adjoins a distinguished impossible state as state 0 (all other states
// shift up by one); restrict_bot inverts it after checking the extended-frame
// shape.
PossibilityFrame extend_bot(const PossibilityFrame& f);
PossibilityFrame restrict_bot(const PossibilityFrame& f);

}  // namespace poss

#endif
