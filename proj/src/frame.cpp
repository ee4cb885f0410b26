#include "poss/frame.hpp"

#include <algorithm>
#include <stdexcept>

namespace poss {

FinitePoset::FinitePoset(int count, const std::vector<std::pair<int, int>>& leq_pairs) {
  check_state_count(count);
  n = count;
  below.assign(n, 0);
  for (int x = 0; x < n; ++x) below[x] = with(0, x);
  for (auto [x, y] : leq_pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("poset pair out of range");
    below[y] = with(below[y], x);
  }
  // Validate without applying any closure: the stated pairs (plus
  // reflexivity) must already form a partial order.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!contains(below[y], x)) continue;
      if (x != y && contains(below[x], y))
        throw std::invalid_argument("poset not antisymmetric");
      if ((below[x] & ~below[y]) != 0)
        throw std::invalid_argument("poset not transitive");
    }
  above.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (contains(below[y], x)) above[x] = with(above[x], y);
}

FinitePoset FinitePoset::discrete(int n) { return FinitePoset(n, {}); }

StateSet interior(const FinitePoset& p, StateSet x) {
  StateSet r = 0;
  for (int y = 0; y < p.n; ++y)
    if (subset(p.below[y], x)) r = with(r, y);
  return r;
}

StateSet closure(const FinitePoset& p, StateSet x) {
  StateSet r = 0;
  for (int y = 0; y < p.n; ++y)
    if (p.below[y] & x) r = with(r, y);
  return r;
}

StateSet down_set(const FinitePoset& p, StateSet x) {
  StateSet r = 0;
  for_each_state(x, [&](int s) { r |= p.below[s]; });
  return r;
}

bool is_persistent(const FinitePoset& p, StateSet x) {
  return down_set(p, x) == x;
}

bool is_refinable(const FinitePoset& p, StateSet x) {
  // s outside X must have a refinement none of whose refinements is in X
  for (int s = 0; s < p.n; ++s) {
    if (contains(x, s)) continue;
    bool ok = false;
    for_each_state(p.below[s], [&](int s1) {
      if (!ok && (p.below[s1] & x) == 0) ok = true;
    });
    if (!ok) return false;
  }
  return true;
}

StateSet ro_hull(const FinitePoset& p, StateSet x) {
  return interior(p, closure(p, down_set(p, x)));
}

Family regular_opens(const FinitePoset& p) {
  if (p.n > 22)
    throw std::invalid_argument("regular_opens: poset too large to enumerate");
  Family fam;
  StateSet all = full_set(p.n);
  for (StateSet x = 0;; ++x) {
    if (is_regular_open(p, x)) fam.push_back(x);
    if (x == all) break;
  }
  normalize(fam);
  return fam;
}

int PossibilityFrame::index_of(const std::string& i) const {
  for (std::size_t k = 0; k < indices.size(); ++k)
    if (indices[k] == i) return static_cast<int>(k);
  throw std::invalid_argument("unknown modal index: " + i);
}

const Relation& PossibilityFrame::rel(const std::string& i) const {
  return rels[index_of(i)];
}

StateSet box_op(const PossibilityFrame& f, int rel_index, StateSet x) {
  const Relation& r = f.rels[rel_index];
  StateSet out = 0;
  for (int s = 0; s < f.size(); ++s)
    if (subset(r[s], x)) out = with(out, s);
  return out;
}

StateSet box_op(const PossibilityFrame& f, const std::string& index, StateSet x) {
  return box_op(f, f.index_of(index), x);
}

StateSet diamond_op(const PossibilityFrame& f, int rel_index, StateSet x) {
  // s is in the result iff every refinement of s sees some state that can be
  // refined into x
  const Relation& r = f.rels[rel_index];
  const FinitePoset& p = f.poset;
  StateSet clx = closure(p, x);
  StateSet witness = 0;
  for (int s = 0; s < f.size(); ++s)
    if (r[s] & clx) witness = with(witness, s);
  StateSet out = 0;
  for (int s = 0; s < f.size(); ++s)
    if (subset(p.below[s], witness)) out = with(out, s);
  return out;
}

StateSet diamond_op(const PossibilityFrame& f, const std::string& index, StateSet x) {
  return diamond_op(f, f.index_of(index), x);
}

StateSet implies_op(const FinitePoset& p, StateSet x, StateSet y) {
  return interior(p, (~x & full_set(p.n)) | y);
}

StateSet minimal_points(const FinitePoset& p) {
  StateSet r = 0;
  for (int s = 0; s < p.n; ++s)
    if (p.below[s] == with(0, s)) r = with(r, s);
  return r;
}

bool is_partial_function(const Relation& r) {
  for (StateSet s : r)
    if (popcount(s) > 1) return false;
  return true;
}

StateSet rel_image(const Relation& r, StateSet x) {
  StateSet out = 0;
  for_each_state(x, [&](int s) { out |= r[s]; });
  return out;
}

int maximum_of(const FinitePoset& p, StateSet x) {
  int m = -1;
  for_each_state(x, [&](int s) {
    if (m < 0 && subset(x, p.below[s])) m = s;
  });
  return m;
}

bool s_refines(const FinitePoset& p, int x, int y) {
  bool ok = true;
  for_each_state(p.below[x], [&](int xp) {
    if (ok && !p.compat(xp, y)) ok = false;
  });
  return ok;
}

namespace {

bool rel_has(const Relation& r, int x, int y) { return contains(r[x], y); }

// Each checker scans its universally quantified tuple in lexicographic order
// (in order of appearance in the condition) and reports the first violation.

CheckReport chk_r_rule(const FinitePoset& p, const Relation& r) {
  // if x' <= x and x'Ry' comp z, then some y: xRy comp z
  for (int xp = 0; xp < p.n; ++xp)
    for (int x = 0; x < p.n; ++x) {
      if (!p.leq(xp, x)) continue;
      for (int yp = 0; yp < p.n; ++yp) {
        if (!rel_has(r, xp, yp)) continue;
        for (int z = 0; z < p.n; ++z) {
          if (!p.compat(yp, z)) continue;
          bool ok = false;
          for_each_state(r[x], [&](int y) {
            if (!ok && p.compat(y, z)) ok = true;
          });
          if (!ok) return CheckReport::fail("R-rule", {xp, x, yp, z});
        }
      }
    }
  return CheckReport::pass("R-rule");
}

CheckReport chk_r_com(const FinitePoset& p, const Relation& r) {
  for (int xp = 0; xp < p.n; ++xp)
    for (int x = 0; x < p.n; ++x) {
      if (!p.leq(xp, x)) continue;
      for (int yp = 0; yp < p.n; ++yp) {
        if (!rel_has(r, xp, yp)) continue;
        if ((r[x] & p.above[yp]) == 0)
          return CheckReport::fail("R-com", {xp, x, yp});
      }
    }
  return CheckReport::pass("R-com");
}

CheckReport chk_up_r(const FinitePoset& p, const Relation& r) {
  for (int xp = 0; xp < p.n; ++xp)
    for (int x = 0; x < p.n; ++x) {
      if (!p.leq(xp, x)) continue;
      for (int yp = 0; yp < p.n; ++yp)
        if (rel_has(r, xp, yp) && !rel_has(r, x, yp))
          return CheckReport::fail("up-R", {xp, x, yp});
    }
  return CheckReport::pass("up-R");
}

CheckReport chk_r_down(const FinitePoset& p, const Relation& r) {
  for (int yp = 0; yp < p.n; ++yp)
    for (int y = 0; y < p.n; ++y) {
      if (!p.leq(yp, y)) continue;
      for (int x = 0; x < p.n; ++x)
        if (rel_has(r, x, y) && !rel_has(r, x, yp))
          return CheckReport::fail("R-down", {yp, y, x});
    }
  return CheckReport::pass("R-down");
}

// Inner block of the win conditions: given x and y', is there an x' <= x
// such that every x'' <= x' has a successor compatible with y' (plain) or
// refining y' (underlined)?
bool win_core(const FinitePoset& p, const Relation& r, int x, int yp, bool underline) {
  StateSet target = underline ? p.below[yp] : closure(p, p.below[yp]);
  StateSet good = 0;
  for (int s = 0; s < p.n; ++s)
    if (r[s] & target) good = with(good, s);
  bool found = false;
  for_each_state(p.below[x], [&](int xp) {
    if (!found && subset(p.below[xp], good)) found = true;
  });
  return found;
}

CheckReport chk_r_win(const FinitePoset& p, const Relation& r, bool underline,
                      const std::string& name) {
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (!rel_has(r, x, y)) continue;
      for (int yp = 0; yp < p.n; ++yp) {
        if (!p.leq(yp, y)) continue;
        if (!win_core(p, r, x, yp, underline))
          return CheckReport::fail(name, {x, y, yp});
      }
    }
  return CheckReport::pass(name);
}

CheckReport chk_r_iff_win(const FinitePoset& p, const Relation& r) {
  CheckReport fwd = chk_r_win(p, r, true, "R<=>win_");
  if (!fwd.ok) return fwd;
  // right to left: a winning strategy for every y' <= y forces xRy
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (rel_has(r, x, y)) continue;
      bool wins = true;
      for_each_state(p.below[y], [&](int yp) {
        if (wins && !win_core(p, r, x, yp, true)) wins = false;
      });
      if (wins) return CheckReport::fail("R<=>win_", {x, y});
    }
  return CheckReport::pass("R<=>win_");
}

CheckReport chk_r_refinability(const FinitePoset& p, const Relation& r) {
  // if xRy then some x' <= x: every x'' <= x' has a successor refining y
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (!rel_has(r, x, y)) continue;
      StateSet good = 0;
      for (int s = 0; s < p.n; ++s)
        if (r[s] & p.below[y]) good = with(good, s);
      bool found = false;
      for_each_state(p.below[x], [&](int xp) {
        if (!found && subset(p.below[xp], good)) found = true;
      });
      if (!found) return CheckReport::fail("R-refinability", {x, y});
    }
  return CheckReport::pass("R-refinability");
}

CheckReport chk_r_refinability_plus(const FinitePoset& p, const Relation& r) {
  // if xRy then some y' <= y and x' <= x with every x'' <= x' seeing y'
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (!rel_has(r, x, y)) continue;
      bool found = false;
      for_each_state(p.below[y], [&](int yp) {
        if (found) return;
        StateSet good = 0;
        for (int s = 0; s < p.n; ++s)
          if (rel_has(r, s, yp)) good = with(good, s);
        for_each_state(p.below[x], [&](int xp) {
          if (!found && subset(p.below[xp], good)) found = true;
        });
      });
      if (!found) return CheckReport::fail("R-refinability+", {x, y});
    }
  return CheckReport::pass("R-refinability+");
}

CheckReport chk_r_refinability_pp(const FinitePoset& p, const Relation& r) {
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (!rel_has(r, x, y)) continue;
      StateSet good = 0;
      for (int s = 0; s < p.n; ++s)
        if (rel_has(r, s, y)) good = with(good, s);
      bool found = false;
      for_each_state(p.below[x], [&](int xp) {
        if (!found && subset(p.below[xp], good)) found = true;
      });
      if (!found) return CheckReport::fail("R-refinability++", {x, y});
    }
  return CheckReport::pass("R-refinability++");
}

CheckReport chk_r_dense(const FinitePoset& p, const Relation& r) {
  // xRy whenever every y' <= y has a refinement seen by x
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (rel_has(r, x, y)) continue;
      bool dense = true;
      for_each_state(p.below[y], [&](int yp) {
        if (dense && (p.below[yp] & r[x]) == 0) dense = false;
      });
      if (dense) return CheckReport::fail("R-dense", {x, y});
    }
  return CheckReport::pass("R-dense");
}

CheckReport chk_r_max(const FinitePoset& p, const Relation& r) {
  for (int x = 0; x < p.n; ++x) {
    if (r[x] == 0) continue;
    if (maximum_of(p, r[x]) < 0) return CheckReport::fail("R-max", {x}, {r[x]});
  }
  return CheckReport::pass("R-max");
}

CheckReport chk_r_maxe(const FinitePoset& p, const Relation& r) {
  for (int x = 0; x < p.n; ++x)
    if (r[x] == 0 || maximum_of(p, r[x]) < 0)
      return CheckReport::fail("R-maxe", {x}, {r[x]});
  return CheckReport::pass("R-maxe");
}

CheckReport chk_r_princ(const FinitePoset& p, const Relation& r) {
  for (int x = 0; x < p.n; ++x) {
    bool principal = false;
    for (int z = 0; z < p.n && !principal; ++z)
      if (r[x] == p.below[z]) principal = true;
    if (!principal) return CheckReport::fail("R-princ", {x}, {r[x]});
  }
  return CheckReport::pass("R-princ");
}

CheckReport chk_r_common(const FinitePoset& p, const Relation& r) {
  // if x' <= x and x'Ry', then some z <= y' with x'Rz and xRz
  for (int xp = 0; xp < p.n; ++xp)
    for (int x = 0; x < p.n; ++x) {
      if (!p.leq(xp, x)) continue;
      for (int yp = 0; yp < p.n; ++yp) {
        if (!rel_has(r, xp, yp)) continue;
        if ((p.below[yp] & r[xp] & r[x]) == 0)
          return CheckReport::fail("R-common", {xp, x, yp});
      }
    }
  return CheckReport::pass("R-common");
}

}  // namespace

std::vector<std::string> interplay_condition_names() {
  return {"R-rule",           "R-com",          "up-R",
          "R-down",           "R=>win",         "R=>win_",
          "R<=>win_",         "R-refinability", "R-refinability+",
          "R-refinability++", "R-dense",        "R-max",
          "R-maxe",           "R-princ",        "R-common"};
}

CheckReport check_interplay(const FinitePoset& p, const Relation& r,
                            const std::string& condition) {
  if (condition == "R-rule") return chk_r_rule(p, r);
  if (condition == "R-com") return chk_r_com(p, r);
  if (condition == "up-R") return chk_up_r(p, r);
  if (condition == "R-down") return chk_r_down(p, r);
  if (condition == "R=>win") return chk_r_win(p, r, false, "R=>win");
  if (condition == "R=>win_") return chk_r_win(p, r, true, "R=>win_");
  if (condition == "R<=>win_") return chk_r_iff_win(p, r);
  if (condition == "R-refinability") return chk_r_refinability(p, r);
  if (condition == "R-refinability+") return chk_r_refinability_plus(p, r);
  if (condition == "R-refinability++") return chk_r_refinability_pp(p, r);
  if (condition == "R-dense") return chk_r_dense(p, r);
  if (condition == "R-max") return chk_r_max(p, r);
  if (condition == "R-maxe") return chk_r_maxe(p, r);
  if (condition == "R-princ") return chk_r_princ(p, r);
  if (condition == "R-common") return chk_r_common(p, r);
  throw std::invalid_argument("unknown interplay condition: " + condition);
}

CheckReport check_interplay(const PossibilityFrame& f, const std::string& index,
                            const std::string& condition) {
  return check_interplay(f.poset, f.rel(index), condition);
}

CheckReport validate_frame(const PossibilityFrame& f) {
  const FinitePoset& p = f.poset;
  if (p.n <= 0) return CheckReport::fail("poset: empty state set");
  if (static_cast<int>(p.below.size()) != p.n ||
      static_cast<int>(p.above.size()) != p.n)
    return CheckReport::fail("poset: malformed");
  for (int x = 0; x < p.n; ++x)
    if (!contains(p.below[x], x))
      return CheckReport::fail("poset: not reflexive", {x});
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (!p.leq(x, y)) continue;
      if (x != y && p.leq(y, x))
        return CheckReport::fail("poset: not antisymmetric", {x, y});
      if ((p.below[x] & ~p.below[y]) != 0)
        return CheckReport::fail("poset: not transitive", {x, y});
    }
  if (f.indices.size() != f.rels.size())
    return CheckReport::fail("relations: index mismatch");
  if (!std::is_sorted(f.indices.begin(), f.indices.end()) ||
      std::adjacent_find(f.indices.begin(), f.indices.end()) != f.indices.end())
    return CheckReport::fail("relations: indices not sorted/unique");
  for (const Relation& r : f.rels)
    if (static_cast<int>(r.size()) != p.n)
      return CheckReport::fail("relations: malformed");
  if (!std::is_sorted(f.props.begin(), f.props.end()) ||
      std::adjacent_find(f.props.begin(), f.props.end()) != f.props.end())
    return CheckReport::fail("props: not sorted/unique");
  StateSet all = full_set(p.n);
  for (StateSet x : f.props)
    if (x & ~all) return CheckReport::fail("props: set out of range", {}, {x});

  if (!family_contains(f.props, 0))
    return CheckReport::fail("props: empty set missing");
  for (StateSet x : f.props)
    for (StateSet y : f.props)
      if (!family_contains(f.props, x & y))
        return CheckReport::fail("props: not closed under intersection", {}, {x, y});
  for (StateSet x : f.props)
    for (StateSet y : f.props)
      if (!family_contains(f.props, implies_op(p, x, y)))
        return CheckReport::fail("props: not closed under implication", {}, {x, y});
  for (std::size_t k = 0; k < f.indices.size(); ++k)
    for (StateSet y : f.props)
      if (!family_contains(f.props, box_op(f, static_cast<int>(k), y)))
        return CheckReport::fail("props: not closed under box " + f.indices[k], {}, {y});
  for (StateSet x : f.props)
    if (!is_regular_open(p, x))
      return CheckReport::fail("props: set not regular open", {}, {x});
  return CheckReport::pass("frame");
}

namespace {

// A finite lattice is Boolean iff mapping each element to the minimal points
// below it is an order isomorphism onto the powerset of minimal points. We
// test the poset extended with a fresh bottom, which contributes the empty
// atom set.
bool bottomed_is_boolean(const FinitePoset& p) {
  StateSet atoms = minimal_points(p);
  int k = popcount(atoms);
  if (k >= kMaxStates) return false;
  if ((StateSet{1} << k) != static_cast<StateSet>(p.n) + 1) return false;
  std::vector<int> atom_list;
  for_each_state(atoms, [&](int a) { atom_list.push_back(a); });
  std::vector<StateSet> key(p.n);
  Family seen;
  for (int x = 0; x < p.n; ++x) {
    StateSet m = 0;
    for (std::size_t i = 0; i < atom_list.size(); ++i)
      if (p.leq(atom_list[i], x)) m = with(m, static_cast<int>(i));
    if (m == 0) return false;
    key[x] = m;
    seen.push_back(m);
  }
  normalize(seen);
  if (static_cast<int>(seen.size()) != p.n) return false;
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.leq(x, y) != subset(key[x], key[y])) return false;
  return true;
}

bool props_are_principal(const PossibilityFrame& f) {
  Family expect = {0};
  for (int x = 0; x < f.size(); ++x) expect.push_back(f.poset.below[x]);
  normalize(expect);
  return expect == f.props;
}

}  // namespace

FrameClasses classify(const PossibilityFrame& f) {
  CheckReport v = validate_frame(f);
  if (!v.ok)
    throw std::invalid_argument("classify: invalid frame (" + v.condition + ")");
  const FinitePoset& p = f.poset;
  FrameClasses c;

  c.full = (f.props == regular_opens(p));

  c.standard = true;
  c.strong = true;
  c.quasi_functional = true;
  c.functional = true;
  for (const Relation& r : f.rels) {
    if (!check_interplay(p, r, "R-down").ok) c.standard = false;
    if (!check_interplay(p, r, "R<=>win_").ok) c.strong = false;
    if (!check_interplay(p, r, "R-max").ok) c.quasi_functional = false;
    if (!is_partial_function(r)) c.functional = false;
  }

  c.separative = true;
  for (int x = 0; x < p.n && c.separative; ++x)
    for (int y = 0; y < p.n && c.separative; ++y)
      if (s_refines(p, x, y) && !p.leq(x, y)) c.separative = false;

  // leq-tight: if every admissible set containing x contains y, then y <= x
  c.leq_tight = true;
  for (int x = 0; x < p.n && c.leq_tight; ++x)
    for (int y = 0; y < p.n && c.leq_tight; ++y) {
      if (p.leq(y, x)) continue;
      bool trans = true;
      for (StateSet z : f.props)
        if (contains(z, x) && !contains(z, y)) { trans = false; break; }
      if (trans) c.leq_tight = false;
    }

  c.r_tight = true;
  for (std::size_t k = 0; k < f.rels.size() && c.r_tight; ++k) {
    // precompute box of every admissible set once per index
    std::vector<StateSet> boxes(f.props.size());
    for (std::size_t j = 0; j < f.props.size(); ++j)
      boxes[j] = box_op(f, static_cast<int>(k), f.props[j]);
    for (int x = 0; x < p.n && c.r_tight; ++x)
      for (int y = 0; y < p.n && c.r_tight; ++y) {
        if (contains(f.rels[k][x], y)) continue;
        bool trans = true;
        for (std::size_t j = 0; j < f.props.size(); ++j)
          if (contains(boxes[j], x) && !contains(f.props[j], y)) {
            trans = false;
            break;
          }
        if (trans) c.r_tight = false;
      }
  }
  c.tight = c.leq_tight && c.r_tight;

  c.differentiated = true;
  for (int x = 0; x < p.n && c.differentiated; ++x)
    for (int y = x + 1; y < p.n && c.differentiated; ++y) {
      bool distinguished = false;
      for (StateSet z : f.props)
        if (contains(z, x) != contains(z, y)) { distinguished = true; break; }
      if (!distinguished) c.differentiated = false;
    }

  StateSet mins = minimal_points(p);
  c.atomic = true;
  for (int x = 0; x < p.n; ++x)
    if ((p.below[x] & mins) == 0) c.atomic = false;

  c.principal = props_are_principal(f);
  c.lattice_complete = c.principal && bottomed_is_boolean(p);
  c.rich = c.lattice_complete && c.strong;

  // filter-descriptive: tight, and every proper filter of the admissible
  // algebra <P, subset> is the trace P(x) of some state. Proper filters of a
  // finite lattice of sets are exactly the up-sets of nonempty members.
  c.filter_descriptive = c.tight;
  if (c.filter_descriptive) {
    for (StateSet z : f.props) {
      if (z == 0) continue;
      bool realized = false;
      for (int x = 0; x < p.n && !realized; ++x) {
        bool same = true;
        for (StateSet w : f.props)
          if (contains(w, x) != subset(z, w)) { same = false; break; }
        realized = same;
      }
      if (!realized) { c.filter_descriptive = false; break; }
    }
  }
  return c;
}

}  // namespace poss
