#ifndef POSS_BAO_HPP
#define POSS_BAO_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "poss/formula.hpp"
#include "poss/frame.hpp"
#include "poss/report.hpp"

namespace poss {

// A finite Boolean algebra with operators, represented as a field of sets
// over an explicit atom universe: elements are atom masks (sorted family
// containing empty and full, closed under intersection and complement), plus
// one dual-operator table per modal index, elements indexed by position.
struct FiniteBAO {
  int atoms = 0;
  std::vector<std::uint64_t> elements;       // sorted atom masks
  std::vector<std::string> indices;          // sorted, duplicate-free
  std::vector<std::vector<int>> box;         // box[k][e] = element index

  int size() const { return static_cast<int>(elements.size()); }
  std::uint64_t universe() const {
    return atoms >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << atoms) - 1);
  }
  int index_of(const std::string& i) const;
  int elem_index(std::uint64_t mask) const;  // -1 if absent
  int top() const { return elem_index(universe()); }
  int bottom() const { return elem_index(0); }
  int meet(int a, int b) const { return elem_index(elements[a] & elements[b]); }
  int join(int a, int b) const { return elem_index(elements[a] | elements[b]); }
  int complement(int a) const { return elem_index(universe() & ~elements[a]); }
  bool leq(int a, int b) const { return subset(elements[a], elements[b]); }
  int box_of(int k, int a) const { return box[k][a]; }
  int dia_of(int k, int a) const { return complement(box[k][complement(a)]); }

  // The powerset algebra over m atoms with every operator table supplied on
  // all 2^m masks in ascending order.
  static FiniteBAO powerset(int m, std::vector<std::string> indices,
                            std::vector<std::vector<int>> box_tables);
};

// Field-of-sets closure plus the two operator laws per index.
CheckReport validate_bao(const FiniteBAO& b);

struct BAOClasses {
  bool trivial = false;
  bool v_condition = false;  // complete additivity via its first-order form
  bool t_adjoint = false;    // every box has a left adjoint
};

BAOClasses classify_bao(const FiniteBAO& b);

// Underlying BAO of a frame: carrier P with intersection, the interior
// complement, and the boxes from the relations, re-expressed as a field of
// sets over the atoms of <P, subset>. prop_of_elem aligns element indices
// with the original admissible sets.
struct UnderlyingBAO {
  FiniteBAO bao;
  std::vector<StateSet> prop_of_elem;
  int elem_of_prop(const PossibilityFrame& f, StateSet p) const;
};

UnderlyingBAO underlying_bao(const PossibilityFrame& f);

// Frames built from an algebra. States of the principal/full frame are the
// nonzero elements in element order (element e+1 of the algebra is state e
// when bottom is element 0; in general state k carries nonzero element
// state_elem[k]).
struct AlgebraFrame {
  PossibilityFrame frame;
  std::vector<int> state_elem;  // state -> element index of the algebra
};

AlgebraFrame principal_frame(const FiniteBAO& b);  // P = principal downsets
AlgebraFrame full_frame(const FiniteBAO& b);       // P = RO of the poset

// Proper filters, each as a sorted list of element indices, in a canonical
// order (sorted by their sets of elements).
std::vector<std::vector<int>> filters(const FiniteBAO& b);
// Smallest filter containing the seed, or nullopt when improper.
std::optional<std::vector<int>> generated_filter(const FiniteBAO& b,
                                                 const std::vector<int>& seed);

// Filter frames: states are the proper filters in the order of filters(b).
struct FilterFrame {
  PossibilityFrame frame;
  std::vector<std::vector<int>> filter_of_state;
};

FilterFrame filter_frame(const FiniteBAO& b);          // P = RO
FilterFrame general_filter_frame(const FiniteBAO& b);  // P = the x-hat sets

// A homomorphism between algebras, elementwise.
struct BAOHom {
  const FiniteBAO* source = nullptr;
  const FiniteBAO* target = nullptr;
  std::vector<int> map;  // element index -> element index
};

// Preservation of meet, complement, top, and each box; `complete` also
// verifies arbitrary-meet preservation (finite scale makes it automatic, but
// it is checked on all subsets when feasible, else on all pairs plus top).
CheckReport check_bao_hom(const BAOHom& h, bool complete);

struct MorphismSpec;  // from morphism.hpp

// Duality on maps. dual_hom_under turns a possibility morphism h: F -> G
// into the BAO-homomorphism X |-> preimage of X, from G* to F*.
BAOHom dual_hom_under(const MorphismSpec& h, const UnderlyingBAO& source_under,
                      const UnderlyingBAO& target_under);
// Complete hom h: A' -> A to p-morphism between principal frames A. -> A'.
// with x |-> meet of {x' : x <= h(x')}.
MorphismSpec dual_hom_rela(const BAOHom& h, const AlgebraFrame& of_target,
                           const AlgebraFrame& of_source);
// Hom h: A' -> A to p-morphism A_gff -> A'_gff by preimage of filters.
MorphismSpec dual_hom_gff(const BAOHom& h, const FilterFrame& of_target,
                          const FilterFrame& of_source);

// The four canonical comparison maps. pf/gff/under must be built from the
// same algebra or frame they are passed with; the helpers keep pointers into
// them, so the caller owns their lifetime.
BAOHom zeta_A(const FiniteBAO& b, const AlgebraFrame& pf,
              const UnderlyingBAO& pf_under);
MorphismSpec zeta_F(const PossibilityFrame& f, const UnderlyingBAO& under,
                    const AlgebraFrame& pf);
BAOHom eta_A(const FiniteBAO& b, const FilterFrame& gff,
             const UnderlyingBAO& gff_under);
MorphismSpec eta_F(const PossibilityFrame& f, const UnderlyingBAO& under,
                   const FilterFrame& gff);

// Unique factorization of g: F -> G through zeta_F (G rich, join formula) or
// eta_F (G filter-descriptive, filter transfer).
MorphismSpec reflection_map_rich(const MorphismSpec& g, const UnderlyingBAO& under,
                                 const AlgebraFrame& pf);
MorphismSpec reflection_map_filter_descriptive(const MorphismSpec& g,
                                               const UnderlyingBAO& under,
                                               const FilterFrame& gff);

// Validity sweeps all element assignments; fails with the first assignment
// whose meaning is not top.
struct AlgebraicReport {
  bool valid = true;
  std::vector<std::string> vars;
  std::vector<int> valuation;  // element indices

  explicit operator bool() const { return valid; }
};

AlgebraicReport algebraic_valid(const FiniteBAO& b, const Fml& f,
                                Budget* budget = nullptr);

FiniteBAO product(const std::vector<FiniteBAO>& factors);
FiniteBAO subalgebra(const FiniteBAO& b, const std::vector<int>& seed_elements);

// If the inequality dia_alpha box_beta x <= box_delta dia_gamma x holds for
// every x, the filter frame must satisfy the corresponding first-order
// condition; vacuously true when the inequality fails.
CheckReport lemmon_scott_filter_canonicity(const FiniteBAO& b,
                                           const std::vector<std::string>& alpha,
                                           const std::vector<std::string>& beta,
                                           const std::vector<std::string>& delta,
                                           const std::vector<std::string>& gamma);

}  // namespace poss

#endif
