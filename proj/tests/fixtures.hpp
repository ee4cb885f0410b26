#ifndef POSS_TESTS_FIXTURES_HPP
#define POSS_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "poss/forcing.hpp"
#include "poss/frame.hpp"
#include "poss/transform.hpp"

namespace poss::fixtures {

inline PossibilityFrame make_frame(int n, std::vector<std::pair<int, int>> leq,
                                   std::vector<std::string> indices,
                                   std::vector<std::vector<std::pair<int, int>>> rels,
                                   Family props) {
  PossibilityFrame f;
  f.poset = FinitePoset(n, leq);
  f.indices = std::move(indices);
  for (const auto& pairs : rels) {
    Relation r(n, 0);
    for (auto [x, y] : pairs) r[x] = with(r[x], y);
    f.rels.push_back(std::move(r));
  }
  f.props = std::move(props);
  normalize(f.props);
  return f;
}

inline std::vector<std::pair<int, int>> universal_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.push_back({x, y});
  return out;
}

// two-state chain: 0 = b refines 1 = t
inline PossibilityFrame chain2(bool universal_rel = true) {
  PossibilityFrame f;
  f.poset = FinitePoset(2, {{0, 1}});
  f.indices = {"i"};
  Relation r(2, 0);
  if (universal_rel)
    for (int x = 0; x < 2; ++x) r[x] = full_set(2);
  f.rels = {r};
  f.props = {0, full_set(2)};
  return f;
}

// fan: 0 = a on top, 1..3 = b1..b3 minimal, universal relation, P = RO
inline PossibilityFrame fig11() {
  PossibilityFrame f;
  f.poset = FinitePoset(4, {{1, 0}, {2, 0}, {3, 0}});
  f.indices = {"i"};
  Relation r(4, full_set(4));
  f.rels = {r};
  f.props = regular_opens(f.poset);
  return f;
}

// powerset possibilization of the 2-world universal Kripke frame
inline PossibilityFrame p3() {
  KripkeFrame k;
  k.n = 2;
  k.indices = {"i"};
  k.rels = {Relation(2, full_set(2))};
  return powerset_possibilization(k);
}

inline KripkeFrame kripke(int n, std::vector<std::pair<int, int>> edges) {
  KripkeFrame k;
  k.n = n;
  k.indices = {"i"};
  Relation r(n, 0);
  for (auto [x, y] : edges) r[x] = with(r[x], y);
  k.rels = {r};
  return k;
}

}  // namespace poss::fixtures

#endif
