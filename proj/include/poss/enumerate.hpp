#ifndef POSS_ENUMERATE_HPP
#define POSS_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "poss/bao.hpp"
#include "poss/frame.hpp"

namespace poss {

// One representative per isomorphism class, in a deterministic order
// (ascending canonical form: the minimum over state permutations of the
// concatenated adjacency bit strings). The default cap keeps the exact
// canonicalization tractable.
std::vector<FinitePoset> enumerate_posets(int n, int cap = 6);

// All relation tuples on each poset of exactly n states that pass R-rule and
// R=>win, paired with P = RO and deduplicated up to isomorphism.
std::vector<PossibilityFrame> enumerate_full_frames(
    int n, const std::vector<std::string>& indices, int cap = 4);

// Streaming variant; returns the number of frames visited.
long long for_each_full_frame(int n, const std::vector<std::string>& indices,
                              const std::function<void(const PossibilityFrame&)>& f,
                              int cap = 4);

// All operator tables on the powerset algebra of m atoms, satisfying the two
// BAO laws, deduplicated up to atom permutation.
std::vector<FiniteBAO> enumerate_baos(int m, const std::vector<std::string>& indices,
                                      int cap = 3);

struct RandomFrameParams {
  int max_states = 5;
  int index_count = 1;
  double rel_density = 0.35;
  bool full = true;  // P = RO; otherwise a random subalgebra of RO
};

// Deterministic per seed.
PossibilityFrame random_frame(std::uint64_t seed, const RandomFrameParams& params);

struct RandomBAOParams {
  int atoms = 3;
  int index_count = 1;
};

FiniteBAO random_bao(std::uint64_t seed, const RandomBAOParams& params);

// Canonical form helpers (exposed for the enumeration self-tests).
std::vector<std::uint64_t> foundation_canonical_form(const FinitePoset& p,
                                                     const std::vector<Relation>& rels);

}  // namespace poss

#endif
