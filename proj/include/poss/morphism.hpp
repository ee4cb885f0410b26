#ifndef POSS_MORPHISM_HPP
#define POSS_MORPHISM_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "poss/frame.hpp"
#include "poss/report.hpp"

namespace poss {

enum class MorphismGrade { Possibility, Strict, P };

// Optional extra clauses on top of a grade.
enum class MorphismFlag {
  Dense,
  Robust,
  StrongEmbedding,
  LeqStrongEmbedding,
  Isomorphism,
};

std::string to_string(MorphismGrade g);
std::string to_string(MorphismFlag f);
std::optional<MorphismGrade> grade_from_string(const std::string& s);
std::optional<MorphismFlag> flag_from_string(const std::string& s);

struct MorphismSpec {
  const PossibilityFrame* source = nullptr;
  const PossibilityFrame* target = nullptr;
  std::vector<int> map;  // total on source states
  MorphismGrade grade = MorphismGrade::Possibility;
  std::set<MorphismFlag> flags;
};

// Verifies exactly the clause set implied by grade + flags; a failing report
// names the violated clause and the offending states/sets.
CheckReport check_morphism(const MorphismSpec& spec);

// Backtracking search for the lexicographically least total map satisfying
// grade + flags, or absence. Throws budget_error past `nodes` search nodes.
std::optional<MorphismSpec> find_morphism(const PossibilityFrame& source,
                                          const PossibilityFrame& target,
                                          MorphismGrade grade,
                                          const std::set<MorphismFlag>& flags = {},
                                          long long nodes = 50'000'000,
                                          const std::vector<int>* pinned = nullptr);

// Functional composition; both inputs must check at the common grade.
MorphismSpec compose(const MorphismSpec& f, const MorphismSpec& g);

// Bijection preserving order, relations, and admissibility both ways.
std::optional<std::vector<int>> are_isomorphic(const PossibilityFrame& f,
                                               const PossibilityFrame& g,
                                               long long nodes = 50'000'000);

}  // namespace poss

#endif
