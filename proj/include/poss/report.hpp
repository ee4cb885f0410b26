#ifndef POSS_REPORT_HPP
#define POSS_REPORT_HPP

#include <string>
#include <vector>

#include "poss/states.hpp"

namespace poss {

// Structured verdict returned by classifiers and condition checkers.
// When verdict is false the witness names the violating instance: the
// universally quantified states of the condition (in order of appearance)
// and, where relevant, the violating sets. Checkers return the
// lexicographically least violating tuple.
struct CheckReport {
  bool ok = true;
  std::string condition;
  std::vector<int> states;
  std::vector<StateSet> sets;

  explicit operator bool() const { return ok; }

  static CheckReport pass(std::string cond) {
    CheckReport r;
    r.ok = true;
    r.condition = std::move(cond);
    return r;
  }
  static CheckReport fail(std::string cond, std::vector<int> st = {},
                          std::vector<StateSet> se = {}) {
    CheckReport r;
    r.ok = false;
    r.condition = std::move(cond);
    r.states = std::move(st);
    r.sets = std::move(se);
    return r;
  }
};

}  // namespace poss

#endif
