#ifndef POSS_STATES_HPP
#define POSS_STATES_HPP

#include <cstdint>
#include <algorithm>
#include <stdexcept>
#include <vector>

namespace poss {

// State sets are bitmasks over states 0..n-1; n is capped at 64, which covers
// every structure this workbench enumerates or constructs.
using StateSet = std::uint64_t;

inline constexpr int kMaxStates = 64;

inline StateSet full_set(int n) {
  return n >= kMaxStates ? ~StateSet{0} : ((StateSet{1} << n) - 1);
}

inline bool contains(StateSet s, int x) { return (s >> x) & 1; }
inline StateSet with(StateSet s, int x) { return s | (StateSet{1} << x); }
inline StateSet without(StateSet s, int x) { return s & ~(StateSet{1} << x); }
inline bool subset(StateSet a, StateSet b) { return (a & ~b) == 0; }
inline int popcount(StateSet s) { return __builtin_popcountll(s); }

inline int first_state(StateSet s) { return s ? __builtin_ctzll(s) : -1; }

// Iterate set bits low to high.
template <typename F>
inline void for_each_state(StateSet s, F f) {
  while (s) {
    int x = __builtin_ctzll(s);
    f(x);
    s &= s - 1;
  }
}

// A family of state sets, kept sorted and duplicate-free so membership is a
// binary search and iteration order is canonical.
using Family = std::vector<StateSet>;

inline void normalize(Family& fam) {
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

inline bool family_contains(const Family& fam, StateSet x) {
  return std::binary_search(fam.begin(), fam.end(), x);
}

inline int family_index(const Family& fam, StateSet x) {
  auto it = std::lower_bound(fam.begin(), fam.end(), x);
  if (it == fam.end() || *it != x) return -1;
  return static_cast<int>(it - fam.begin());
}

// A binary relation on states, one successor mask per state.
using Relation = std::vector<StateSet>;

inline void check_state_count(int n) {
  if (n <= 0 || n > kMaxStates)
    throw std::invalid_argument("state count out of range (1.." +
                                std::to_string(kMaxStates) + ")");
}

// Aborts oversized sweeps instead of silently truncating them.
struct budget_error : std::runtime_error {
  budget_error() : std::runtime_error("budget exceeded") {}
};

struct Budget {
  long long remaining;
  explicit Budget(long long limit = 10'000'000) : remaining(limit) {}
  void tick(long long cost = 1) {
    remaining -= cost;
    if (remaining < 0) throw budget_error{};
  }
};

}  // namespace poss

#endif
