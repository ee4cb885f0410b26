#ifndef POSS_CORRESPONDENCE_HPP
#define POSS_CORRESPONDENCE_HPP

#include <functional>
#include <string>
#include <vector>

#include "poss/forcing.hpp"
#include "poss/formula.hpp"
#include "poss/frame.hpp"
#include "poss/report.hpp"

namespace poss {

// A schema dia_alpha box_beta p -> box_delta dia_gamma p, each component a
// possibly empty sequence of modal indices.
struct LSSchema {
  std::vector<std::string> alpha, beta, delta, gamma;
};

// Empty-sequence conventions differ by kind: over possibilities the empty
// path is converse refinement, over worlds it is identity.
enum class PathKind { Possibility, Kripke };

Relation path_relation(const PossibilityFrame& f, const std::vector<std::string>& sigma,
                       PathKind kind);

// The first-order frame condition matched to the schema. Possibility kind:
//   forall x,y (xRd y -> exists x' <= x forall z (x'Ra z ->
//                exists u (yRg u and zRb u)))
// or, when alpha is empty,
//   forall x,y (xRd y -> exists u (yRg u and xRb u)).
// Kripke kind:
//   forall x,y,z ((xRd y and xRa z) -> exists u (yRg u and zRb u)).
CheckReport ls_condition(const PossibilityFrame& f, const LSSchema& schema,
                         PathKind kind);

// The modal axiom of the schema over a fresh variable.
Fml ls_axiom(const LSSchema& schema, const std::string& var = "p1");

// Sweeps the frames produced by `frames`, checking axiom validity against the
// condition; with check_both_directions false only validity-from-condition is
// demanded (the half that holds beyond full frames).
struct CorrespondenceReport {
  bool ok = true;
  long long frames_checked = 0;
  int divergent_frame = -1;  // position in the stream
  bool axiom_valid = false, condition_holds = false;
};

CorrespondenceReport verify_correspondence(
    const LSSchema& schema, const std::function<bool(PossibilityFrame&)>& next_frame,
    PathKind kind, bool check_both_directions = true, Budget* budget = nullptr);

// Documentation-grade first-order rendering of a formula at a state variable.
std::string standard_translation(const Fml& f, const std::string& var = "x");

// dia_i(p & psi) -> (dia_i(p & phi) & dia_i(p & ~phi)) over the variable p1;
// psi must not contain p1.
Fml split_axiom(const Fml& phi, const Fml& psi, const std::string& i);

// Kripke-side property: a frame validating the split axiom also validates
// ~dia_i psi; the witness is empty (the report only records the verdict).
CheckReport kripke_split_property(const KripkeFrame& f, const Fml& phi,
                                  const Fml& psi, const std::string& i,
                                  Budget* budget = nullptr);

}  // namespace poss

#endif
