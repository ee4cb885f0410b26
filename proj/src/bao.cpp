#include "poss/bao.hpp"

#include <algorithm>
#include <stdexcept>

#include "poss/correspondence.hpp"
#include "poss/morphism.hpp"

namespace poss {

int FiniteBAO::index_of(const std::string& i) const {
  for (std::size_t k = 0; k < indices.size(); ++k)
    if (indices[k] == i) return static_cast<int>(k);
  throw std::invalid_argument("unknown modal index: " + i);
}

int FiniteBAO::elem_index(std::uint64_t mask) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), mask);
  if (it == elements.end() || *it != mask) return -1;
  return static_cast<int>(it - elements.begin());
}

FiniteBAO FiniteBAO::powerset(int m, std::vector<std::string> idx,
                              std::vector<std::vector<int>> box_tables) {
  if (m < 0 || m > 20) throw std::invalid_argument("powerset: bad atom count");
  FiniteBAO b;
  b.atoms = m;
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << m); ++e) b.elements.push_back(e);
  b.indices = std::move(idx);
  b.box = std::move(box_tables);
  if (b.box.size() != b.indices.size())
    throw std::invalid_argument("powerset: operator table count mismatch");
  for (const auto& t : b.box)
    if (t.size() != b.elements.size())
      throw std::invalid_argument("powerset: operator table size mismatch");
  return b;
}

CheckReport validate_bao(const FiniteBAO& b) {
  if (b.atoms < 0 || b.atoms >= kMaxStates)
    return CheckReport::fail("bao: atom count out of range");
  if (b.elements.empty()) return CheckReport::fail("bao: no elements");
  if (!std::is_sorted(b.elements.begin(), b.elements.end()) ||
      std::adjacent_find(b.elements.begin(), b.elements.end()) != b.elements.end())
    return CheckReport::fail("bao: elements not sorted/unique");
  std::uint64_t univ = b.universe();
  for (std::uint64_t e : b.elements)
    if (e & ~univ) return CheckReport::fail("bao: element outside universe", {}, {e});
  if (b.elem_index(0) < 0) return CheckReport::fail("bao: empty set missing");
  if (b.elem_index(univ) < 0) return CheckReport::fail("bao: full set missing");
  for (std::uint64_t x : b.elements) {
    if (b.elem_index(univ & ~x) < 0)
      return CheckReport::fail("bao: not closed under complement", {}, {x});
    for (std::uint64_t y : b.elements)
      if (b.elem_index(x & y) < 0)
        return CheckReport::fail("bao: not closed under intersection", {}, {x, y});
  }
  if (!std::is_sorted(b.indices.begin(), b.indices.end()) ||
      std::adjacent_find(b.indices.begin(), b.indices.end()) != b.indices.end())
    return CheckReport::fail("bao: indices not sorted/unique");
  if (b.box.size() != b.indices.size())
    return CheckReport::fail("bao: operator table count mismatch");
  int top = b.top();
  for (std::size_t k = 0; k < b.box.size(); ++k) {
    const auto& t = b.box[k];
    if (static_cast<int>(t.size()) != b.size())
      return CheckReport::fail("bao: operator table size mismatch");
    for (int v : t)
      if (v < 0 || v >= b.size())
        return CheckReport::fail("bao: operator value out of range");
    if (t[top] != top)
      return CheckReport::fail("bao: box top is not top (" + b.indices[k] + ")", {},
                               {b.elements[top]});
    for (int x = 0; x < b.size(); ++x)
      for (int y = 0; y < b.size(); ++y)
        if (t[b.meet(x, y)] != b.meet(t[x], t[y]))
          return CheckReport::fail("bao: box not multiplicative (" + b.indices[k] + ")",
                                   {}, {b.elements[x], b.elements[y]});
  }
  return CheckReport::pass("bao");
}

namespace {

void require_valid(const FiniteBAO& b, const char* who) {
  CheckReport r = validate_bao(b);
  if (!r.ok)
    throw std::invalid_argument(std::string(who) + ": invalid BAO (" + r.condition +
                                ")");
}

// The defined relation of the complete-additivity condition: x R y iff every
// nonzero y' below y has x meet dia y' nonzero.
bool r_of_bao(const FiniteBAO& b, int k, int x, int y) {
  for (int yp = 0; yp < b.size(); ++yp) {
    if (b.elements[yp] == 0 || !b.leq(yp, y)) continue;
    if (b.elements[b.meet(x, b.dia_of(k, yp))] == 0) return false;
  }
  return true;
}

}  // namespace

BAOClasses classify_bao(const FiniteBAO& b) {
  require_valid(b, "classify_bao");
  BAOClasses c;
  c.trivial = (b.size() == 1);

  c.v_condition = true;
  for (std::size_t k = 0; k < b.box.size() && c.v_condition; ++k)
    for (int x = 0; x < b.size() && c.v_condition; ++x)
      for (int y = 0; y < b.size() && c.v_condition; ++y) {
        if (b.elements[b.meet(x, b.dia_of(static_cast<int>(k), y))] == 0) continue;
        bool found = false;
        for (int yp = 0; yp < b.size() && !found; ++yp)
          if (b.elements[yp] != 0 && b.leq(yp, y) &&
              r_of_bao(b, static_cast<int>(k), x, yp))
            found = true;
        if (!found) c.v_condition = false;
      }

  // Adjoint search via the forced candidate f(x) = meet {y : x <= box y}.
  c.t_adjoint = true;
  for (std::size_t k = 0; k < b.box.size() && c.t_adjoint; ++k) {
    std::vector<int> f(b.size());
    for (int x = 0; x < b.size(); ++x) {
      std::uint64_t m = b.universe();
      for (int y = 0; y < b.size(); ++y)
        if (b.leq(x, b.box[k][y])) m &= b.elements[y];
      int fm = b.elem_index(m);
      if (fm < 0) { c.t_adjoint = false; break; }
      f[x] = fm;
    }
    if (!c.t_adjoint) break;
    for (int x = 0; x < b.size() && c.t_adjoint; ++x)
      for (int y = 0; y < b.size() && c.t_adjoint; ++y)
        if (b.leq(x, b.box[k][y]) != b.leq(f[x], y)) c.t_adjoint = false;
  }
  return c;
}

int UnderlyingBAO::elem_of_prop(const PossibilityFrame&, StateSet p) const {
  for (std::size_t e = 0; e < prop_of_elem.size(); ++e)
    if (prop_of_elem[e] == p) return static_cast<int>(e);
  return -1;
}

UnderlyingBAO underlying_bao(const PossibilityFrame& f) {
  CheckReport v = validate_frame(f);
  if (!v.ok)
    throw std::invalid_argument("underlying_bao: invalid frame (" + v.condition + ")");
  // Atoms of the algebra <P, subset>: minimal nonempty members.
  std::vector<StateSet> alg_atoms;
  for (StateSet x : f.props) {
    if (x == 0) continue;
    bool minimal = true;
    for (StateSet y : f.props)
      if (y != 0 && y != x && subset(y, x)) { minimal = false; break; }
    if (minimal) alg_atoms.push_back(x);
  }
  int m = static_cast<int>(alg_atoms.size());
  if (m >= kMaxStates || (std::size_t{1} << m) != f.props.size())
    throw std::invalid_argument("underlying_bao: P is not a Boolean algebra");

  UnderlyingBAO out;
  out.bao.atoms = m;
  out.bao.indices = f.indices;
  std::vector<std::pair<std::uint64_t, StateSet>> keyed;
  for (StateSet x : f.props) {
    std::uint64_t mask = 0;
    for (int i = 0; i < m; ++i)
      if (subset(alg_atoms[i], x)) mask |= std::uint64_t{1} << i;
    keyed.push_back({mask, x});
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [mask, prop] : keyed) {
    out.bao.elements.push_back(mask);
    out.prop_of_elem.push_back(prop);
  }
  if (std::adjacent_find(out.bao.elements.begin(), out.bao.elements.end()) !=
      out.bao.elements.end())
    throw std::invalid_argument("underlying_bao: P is not a Boolean algebra");
  for (std::size_t k = 0; k < f.indices.size(); ++k) {
    std::vector<int> table(out.bao.size());
    for (int e = 0; e < out.bao.size(); ++e) {
      StateSet boxed = box_op(f, static_cast<int>(k), out.prop_of_elem[e]);
      int idx = -1;
      for (std::size_t j = 0; j < out.prop_of_elem.size(); ++j)
        if (out.prop_of_elem[j] == boxed) idx = static_cast<int>(j);
      if (idx < 0)
        throw std::invalid_argument("underlying_bao: P not closed under box");
      table[e] = idx;
    }
    out.bao.box.push_back(std::move(table));
  }
  return out;
}

namespace {

AlgebraFrame algebra_frame(const FiniteBAO& b, bool full) {
  require_valid(b, full ? "full_frame" : "principal_frame");
  if (b.size() < 2)
    throw std::invalid_argument("principal/full frame: trivial BAO");
  AlgebraFrame out;
  int bottom = b.bottom();
  for (int e = 0; e < b.size(); ++e)
    if (e != bottom) out.state_elem.push_back(e);
  int n = static_cast<int>(out.state_elem.size());
  check_state_count(n);
  std::vector<std::pair<int, int>> leq;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (a != c && b.leq(out.state_elem[a], out.state_elem[c]))
        leq.push_back({a, c});
  out.frame.poset = FinitePoset(n, leq);
  out.frame.indices = b.indices;
  for (std::size_t k = 0; k < b.indices.size(); ++k) {
    Relation r(n, 0);
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        if (r_of_bao(b, static_cast<int>(k), out.state_elem[a], out.state_elem[c]))
          r[a] = with(r[a], c);
    out.frame.rels.push_back(std::move(r));
  }
  if (full) {
    out.frame.props = regular_opens(out.frame.poset);
  } else {
    out.frame.props.push_back(0);
    for (int a = 0; a < n; ++a) out.frame.props.push_back(out.frame.poset.below[a]);
    normalize(out.frame.props);
  }
  return out;
}

}  // namespace

AlgebraFrame principal_frame(const FiniteBAO& b) { return algebra_frame(b, false); }
AlgebraFrame full_frame(const FiniteBAO& b) { return algebra_frame(b, true); }

std::vector<std::vector<int>> filters(const FiniteBAO& b) {
  require_valid(b, "filters");
  std::vector<std::vector<int>> out;
  for (int g = 0; g < b.size(); ++g) {
    if (b.elements[g] == 0) continue;
    std::vector<int> filt;
    for (int e = 0; e < b.size(); ++e)
      if (b.leq(g, e)) filt.push_back(e);
    out.push_back(std::move(filt));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> generated_filter(const FiniteBAO& b,
                                                 const std::vector<int>& seed) {
  require_valid(b, "generated_filter");
  if (b.size() == 1) return std::nullopt;  // the trivial BAO has no proper filter
  std::uint64_t m = b.universe();
  for (int e : seed) {
    if (e < 0 || e >= b.size())
      throw std::invalid_argument("generated_filter: seed element out of range");
    m &= b.elements[e];
  }
  if (m == 0) return std::nullopt;  // improper
  int g = b.elem_index(m);
  std::vector<int> filt;
  for (int e = 0; e < b.size(); ++e)
    if (b.leq(g, e)) filt.push_back(e);
  return filt;
}

namespace {

FilterFrame filter_frame_impl(const FiniteBAO& b, bool full) {
  require_valid(b, full ? "filter_frame" : "general_filter_frame");
  if (b.size() < 2)
    throw std::invalid_argument("filter frame: trivial BAO");
  FilterFrame out;
  out.filter_of_state = filters(b);
  int n = static_cast<int>(out.filter_of_state.size());
  check_state_count(n);
  // element membership masks per filter for fast subset tests
  std::vector<std::vector<bool>> has(n, std::vector<bool>(b.size(), false));
  for (int s = 0; s < n; ++s)
    for (int e : out.filter_of_state[s]) has[s][e] = true;

  std::vector<std::pair<int, int>> leq;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      // x refines y iff filter x includes filter y
      bool incl = true;
      for (int e : out.filter_of_state[y])
        if (!has[x][e]) { incl = false; break; }
      if (incl) leq.push_back({x, y});
    }
  out.frame.poset = FinitePoset(n, leq);
  out.frame.indices = b.indices;
  for (std::size_t k = 0; k < b.indices.size(); ++k) {
    Relation r(n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        bool rel = true;
        for (int e = 0; e < b.size(); ++e)
          if (has[x][b.box[k][e]] && !has[y][e]) { rel = false; break; }
        if (rel) r[x] = with(r[x], y);
      }
    out.frame.rels.push_back(std::move(r));
  }
  if (full) {
    out.frame.props = regular_opens(out.frame.poset);
  } else {
    for (int e = 0; e < b.size(); ++e) {
      StateSet hat = 0;
      for (int s = 0; s < n; ++s)
        if (has[s][e]) hat = with(hat, s);
      out.frame.props.push_back(hat);
    }
    normalize(out.frame.props);
  }
  return out;
}

}  // namespace

FilterFrame filter_frame(const FiniteBAO& b) { return filter_frame_impl(b, true); }
FilterFrame general_filter_frame(const FiniteBAO& b) {
  return filter_frame_impl(b, false);
}

CheckReport check_bao_hom(const BAOHom& h, bool complete) {
  const FiniteBAO& A = *h.source;
  const FiniteBAO& B = *h.target;
  if (static_cast<int>(h.map.size()) != A.size())
    throw std::invalid_argument("check_bao_hom: map not total");
  for (int v : h.map)
    if (v < 0 || v >= B.size())
      throw std::invalid_argument("check_bao_hom: value out of range");
  if (A.indices != B.indices) return CheckReport::fail("hom: index sets differ");
  if (h.map[A.top()] != B.top()) return CheckReport::fail("hom: top not preserved");
  for (int x = 0; x < A.size(); ++x) {
    if (h.map[A.complement(x)] != B.complement(h.map[x]))
      return CheckReport::fail("hom: complement not preserved", {}, {A.elements[x]});
    for (int y = 0; y < A.size(); ++y)
      if (h.map[A.meet(x, y)] != B.meet(h.map[x], h.map[y]))
        return CheckReport::fail("hom: meet not preserved", {},
                                 {A.elements[x], A.elements[y]});
  }
  for (std::size_t k = 0; k < A.indices.size(); ++k)
    for (int x = 0; x < A.size(); ++x)
      if (h.map[A.box[k][x]] != B.box[k][h.map[x]])
        return CheckReport::fail("hom: box not preserved (" + A.indices[k] + ")", {},
                                 {A.elements[x]});
  if (complete) {
    // Arbitrary meets reduce to finite ones here; when the subset space is
    // small we still sweep it outright.
    if (A.size() <= 12) {
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << A.size()); ++sub) {
        std::uint64_t meet_a = A.universe();
        std::uint64_t meet_b = B.universe();
        for (int e = 0; e < A.size(); ++e)
          if ((sub >> e) & 1) {
            meet_a &= A.elements[e];
            meet_b &= B.elements[h.map[e]];
          }
        if (B.elements[h.map[A.elem_index(meet_a)]] != meet_b)
          return CheckReport::fail("hom: arbitrary meet not preserved");
      }
    }
  }
  return CheckReport::pass(complete ? "complete-hom" : "hom");
}

BAOHom dual_hom_under(const MorphismSpec& h, const UnderlyingBAO& source_under,
                      const UnderlyingBAO& target_under) {
  // h: F -> G induces h*: G* -> F* by preimage.
  BAOHom out;
  out.source = &target_under.bao;
  out.target = &source_under.bao;
  const PossibilityFrame& F = *h.source;
  for (StateSet xp : target_under.prop_of_elem) {
    StateSet pre = 0;
    for (int x = 0; x < F.size(); ++x)
      if (contains(xp, h.map[x])) pre = with(pre, x);
    int e = source_under.elem_of_prop(F, pre);
    if (e < 0)
      throw std::invalid_argument("dual_hom_under: preimage not admissible");
    out.map.push_back(e);
  }
  return out;
}

MorphismSpec dual_hom_rela(const BAOHom& h, const AlgebraFrame& of_target,
                           const AlgebraFrame& of_source) {
  // h: A' -> A (source A', target A) gives a p-morphism A. -> A'. by
  // x |-> meet {x' : x <= h(x')}.
  const FiniteBAO& Ap = *h.source;
  const FiniteBAO& A = *h.target;
  MorphismSpec out;
  out.source = &of_target.frame;
  out.target = &of_source.frame;
  out.grade = MorphismGrade::P;
  for (int s = 0; s < of_target.frame.size(); ++s) {
    int x = of_target.state_elem[s];
    std::uint64_t m = Ap.universe();
    for (int xp = 0; xp < Ap.size(); ++xp)
      if (A.leq(x, h.map[xp])) m &= Ap.elements[xp];
    int me = Ap.elem_index(m);
    if (me < 0 || Ap.elements[me] == 0)
      throw std::invalid_argument("dual_hom_rela: image collapses to bottom");
    int t = -1;
    for (int sp = 0; sp < of_source.frame.size(); ++sp)
      if (of_source.state_elem[sp] == me) t = sp;
    out.map.push_back(t);
  }
  return out;
}

MorphismSpec dual_hom_gff(const BAOHom& h, const FilterFrame& of_target,
                          const FilterFrame& of_source) {
  // h: A' -> A gives A_gff -> A'_gff by preimage of filters.
  const FiniteBAO& Ap = *h.source;
  MorphismSpec out;
  out.source = &of_target.frame;
  out.target = &of_source.frame;
  out.grade = MorphismGrade::P;
  for (const std::vector<int>& filt : of_target.filter_of_state) {
    std::vector<int> pre;
    for (int ep = 0; ep < Ap.size(); ++ep)
      if (std::binary_search(filt.begin(), filt.end(), h.map[ep])) pre.push_back(ep);
    int t = -1;
    for (std::size_t sp = 0; sp < of_source.filter_of_state.size(); ++sp)
      if (of_source.filter_of_state[sp] == pre) t = static_cast<int>(sp);
    if (t < 0)
      throw std::invalid_argument("dual_hom_gff: preimage is not a proper filter");
    out.map.push_back(t);
  }
  return out;
}

BAOHom zeta_A(const FiniteBAO& b, const AlgebraFrame& pf,
              const UnderlyingBAO& pf_under) {
  // x |-> {nonzero x' <= x}, as an element of (A.)*
  BAOHom out;
  out.source = &b;
  out.target = &pf_under.bao;
  for (int x = 0; x < b.size(); ++x) {
    StateSet z = 0;
    for (int s = 0; s < pf.frame.size(); ++s)
      if (b.leq(pf.state_elem[s], x)) z = with(z, s);
    int e = pf_under.elem_of_prop(pf.frame, z);
    if (e < 0) throw std::invalid_argument("zeta_A: image not admissible");
    out.map.push_back(e);
  }
  return out;
}

MorphismSpec zeta_F(const PossibilityFrame& f, const UnderlyingBAO& under,
                    const AlgebraFrame& pf) {
  MorphismSpec out;
  out.source = &f;
  out.target = &pf.frame;
  out.grade = MorphismGrade::Strict;
  out.flags = {MorphismFlag::Dense, MorphismFlag::Robust};
  for (int x = 0; x < f.size(); ++x) {
    StateSet z = 0;
    for (int xp = 0; xp < f.size(); ++xp)
      if (s_refines(f.poset, xp, x)) z = with(z, xp);
    int e = under.elem_of_prop(f, z);
    if (e < 0)
      throw std::invalid_argument(
          "zeta_F: s-refinement set not admissible (frame not full or principal)");
    int t = -1;
    for (int s = 0; s < pf.frame.size(); ++s)
      if (pf.state_elem[s] == e) t = s;
    if (t < 0) throw std::invalid_argument("zeta_F: image is bottom");
    out.map.push_back(t);
  }
  return out;
}

BAOHom eta_A(const FiniteBAO& b, const FilterFrame& gff,
             const UnderlyingBAO& gff_under) {
  BAOHom out;
  out.source = &b;
  out.target = &gff_under.bao;
  for (int x = 0; x < b.size(); ++x) {
    StateSet hat = 0;
    for (std::size_t s = 0; s < gff.filter_of_state.size(); ++s)
      if (std::binary_search(gff.filter_of_state[s].begin(),
                             gff.filter_of_state[s].end(), x))
        hat = with(hat, static_cast<int>(s));
    int e = gff_under.elem_of_prop(gff.frame, hat);
    if (e < 0) throw std::invalid_argument("eta_A: x-hat not admissible");
    out.map.push_back(e);
  }
  return out;
}

MorphismSpec eta_F(const PossibilityFrame& f, const UnderlyingBAO& under,
                   const FilterFrame& gff) {
  MorphismSpec out;
  out.source = &f;
  out.target = &gff.frame;
  out.grade = MorphismGrade::Possibility;
  for (int x = 0; x < f.size(); ++x) {
    // P(x) as a set of element indices of F*
    std::vector<int> px;
    for (std::size_t e = 0; e < under.prop_of_elem.size(); ++e)
      if (contains(under.prop_of_elem[e], x)) px.push_back(static_cast<int>(e));
    int t = -1;
    for (std::size_t s = 0; s < gff.filter_of_state.size(); ++s)
      if (gff.filter_of_state[s] == px) t = static_cast<int>(s);
    if (t < 0) throw std::invalid_argument("eta_F: P(x) is not a proper filter");
    out.map.push_back(t);
  }
  return out;
}

MorphismSpec reflection_map_rich(const MorphismSpec& g, const UnderlyingBAO& under,
                                 const AlgebraFrame& pf) {
  const PossibilityFrame& G = *g.target;
  MorphismSpec out;
  out.source = &pf.frame;
  out.target = &G;
  out.grade = MorphismGrade::P;
  for (int s = 0; s < pf.frame.size(); ++s) {
    StateSet prop = under.prop_of_elem[pf.state_elem[s]];
    // join of g[prop] in the target's bottomed lattice
    StateSet targets = 0;
    for_each_state(prop, [&](int x) { targets = with(targets, g.map[x]); });
    StateSet ub = full_set(G.size());
    for (int u = 0; u < G.size(); ++u)
      if (!subset(targets, G.poset.below[u])) ub = without(ub, u);
    int join = -1;
    for_each_state(ub, [&](int u) {
      if (join < 0 && subset(ub, G.poset.above[u])) join = u;
    });
    if (join < 0)
      throw std::invalid_argument("reflection_map_rich: join missing (target not rich)");
    out.map.push_back(join);
  }
  return out;
}

MorphismSpec reflection_map_filter_descriptive(const MorphismSpec& g,
                                               const UnderlyingBAO& under,
                                               const FilterFrame& gff) {
  const PossibilityFrame& F = *g.source;
  const PossibilityFrame& G = *g.target;
  MorphismSpec out;
  out.source = &gff.frame;
  out.target = &G;
  out.grade = MorphismGrade::P;
  for (const std::vector<int>& filt : gff.filter_of_state) {
    // target sets whose preimage lies in the filter
    std::vector<StateSet> transferred;
    for (StateSet xp : G.props) {
      StateSet pre = 0;
      for (int x = 0; x < F.size(); ++x)
        if (contains(xp, g.map[x])) pre = with(pre, x);
      int e = under.elem_of_prop(F, pre);
      if (e < 0)
        throw std::invalid_argument("reflection_map: preimage not admissible");
      if (std::binary_search(filt.begin(), filt.end(), e)) transferred.push_back(xp);
    }
    int y = -1;
    for (int cand = 0; cand < G.size() && y < 0; ++cand) {
      std::vector<StateSet> py;
      for (StateSet xp : G.props)
        if (contains(xp, cand)) py.push_back(xp);
      if (py == transferred) y = cand;
    }
    if (y < 0)
      throw std::invalid_argument(
          "reflection_map: filter not realized (target not filter-descriptive)");
    out.map.push_back(y);
  }
  return out;
}

namespace {

int alg_eval(const FiniteBAO& b, const std::map<std::string, int>& val, const Fml& f) {
  switch (f->kind) {
    case Formula::Kind::Var: {
      auto it = val.find(f->label);
      if (it != val.end()) return it->second;
      if (f->label == kReservedVar) return b.bottom();
      throw std::invalid_argument("unbound variable: " + f->label);
    }
    case Formula::Kind::Neg:
      return b.complement(alg_eval(b, val, f->left));
    case Formula::Kind::And:
      return b.meet(alg_eval(b, val, f->left), alg_eval(b, val, f->right));
    case Formula::Kind::Imp:
      // material implication in the algebra: -(a & -b)
      return b.complement(
          b.meet(alg_eval(b, val, f->left), b.complement(alg_eval(b, val, f->right))));
    case Formula::Kind::Box:
      return b.box[b.index_of(f->label)][alg_eval(b, val, f->left)];
  }
  return -1;
}

}  // namespace

AlgebraicReport algebraic_valid(const FiniteBAO& b, const Fml& f, Budget* budget) {
  require_valid(b, "algebraic_valid");
  Budget local;
  if (!budget) budget = &local;
  std::vector<std::string> vars = variables(f);
  std::erase(vars, kReservedVar);
  AlgebraicReport rep;
  rep.vars = vars;
  std::vector<int> choice(vars.size(), 0);
  std::map<std::string, int> val;
  int top = b.top();
  while (true) {
    budget->tick();
    for (std::size_t i = 0; i < vars.size(); ++i) val[vars[i]] = choice[i];
    if (alg_eval(b, val, f) != top) {
      rep.valid = false;
      rep.valuation = choice;
      return rep;
    }
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++choice[i] < b.size()) break;
      choice[i] = 0;
      if (i == 0) return rep;
    }
    if (vars.empty()) return rep;
  }
}

FiniteBAO product(const std::vector<FiniteBAO>& factors) {
  if (factors.empty()) throw std::invalid_argument("product: empty family");
  for (const FiniteBAO& b : factors) {
    require_valid(b, "product");
    if (b.indices != factors[0].indices)
      throw std::invalid_argument("product: index sets differ");
  }
  FiniteBAO out;
  out.indices = factors[0].indices;
  out.atoms = 0;
  std::vector<int> shift;
  for (const FiniteBAO& b : factors) {
    shift.push_back(out.atoms);
    out.atoms += b.atoms;
  }
  if (out.atoms >= kMaxStates) throw std::invalid_argument("product: too many atoms");

  // elements: all tuples of factor elements, encoded by shifted union
  std::vector<std::uint64_t> elems = {0};
  for (std::size_t j = 0; j < factors.size(); ++j) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t prefix : elems)
      for (std::uint64_t e : factors[j].elements) next.push_back(prefix | (e << shift[j]));
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  out.elements = std::move(elems);
  for (std::size_t k = 0; k < out.indices.size(); ++k) {
    std::vector<int> table(out.size());
    for (int e = 0; e < out.size(); ++e) {
      std::uint64_t boxed = 0;
      for (std::size_t j = 0; j < factors.size(); ++j) {
        std::uint64_t comp =
            (out.elements[e] >> shift[j]) & factors[j].universe();
        int ce = factors[j].elem_index(comp);
        boxed |= factors[j].elements[factors[j].box[k][ce]] << shift[j];
      }
      table[e] = out.elem_index(boxed);
    }
    out.box.push_back(std::move(table));
  }
  return out;
}

FiniteBAO subalgebra(const FiniteBAO& b, const std::vector<int>& seed_elements) {
  require_valid(b, "subalgebra");
  std::vector<std::uint64_t> closed = {0, b.universe()};
  for (int e : seed_elements) {
    if (e < 0 || e >= b.size())
      throw std::invalid_argument("subalgebra: seed out of range");
    closed.push_back(b.elements[e]);
  }
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint64_t> add;
    for (std::uint64_t x : closed) {
      std::uint64_t cx = b.universe() & ~x;
      if (!std::binary_search(closed.begin(), closed.end(), cx)) add.push_back(cx);
      for (std::size_t k = 0; k < b.indices.size(); ++k) {
        std::uint64_t bx = b.elements[b.box[k][b.elem_index(x)]];
        if (!std::binary_search(closed.begin(), closed.end(), bx)) add.push_back(bx);
      }
      for (std::uint64_t y : closed) {
        std::uint64_t m = x & y;
        if (!std::binary_search(closed.begin(), closed.end(), m)) add.push_back(m);
      }
    }
    if (!add.empty()) {
      changed = true;
      closed.insert(closed.end(), add.begin(), add.end());
      std::sort(closed.begin(), closed.end());
      closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    }
  }
  FiniteBAO out;
  out.atoms = b.atoms;
  out.elements = std::move(closed);
  out.indices = b.indices;
  for (std::size_t k = 0; k < b.indices.size(); ++k) {
    std::vector<int> table(out.size());
    for (int e = 0; e < out.size(); ++e)
      table[e] = out.elem_index(b.elements[b.box[k][b.elem_index(out.elements[e])]]);
    out.box.push_back(std::move(table));
  }
  return out;
}

CheckReport lemmon_scott_filter_canonicity(const FiniteBAO& b,
                                           const std::vector<std::string>& alpha,
                                           const std::vector<std::string>& beta,
                                           const std::vector<std::string>& delta,
                                           const std::vector<std::string>& gamma) {
  require_valid(b, "lemmon_scott_filter_canonicity");
  auto apply_box = [&](const std::vector<std::string>& seq, int e) {
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
      e = b.box[b.index_of(*it)][e];
    return e;
  };
  auto apply_dia = [&](const std::vector<std::string>& seq, int e) {
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
      e = b.dia_of(b.index_of(*it), e);
    return e;
  };
  bool inequality = true;
  for (int x = 0; x < b.size(); ++x)
    if (!b.leq(apply_dia(alpha, apply_box(beta, x)),
               apply_box(delta, apply_dia(gamma, x)))) {
      inequality = false;
      break;
    }
  if (!inequality)
    return CheckReport::pass("ls-filter-canonicity (inequality fails, vacuous)");
  FilterFrame ff = filter_frame(b);
  LSSchema schema{alpha, beta, delta, gamma};
  CheckReport cond = ls_condition(ff.frame, schema, PathKind::Possibility);
  if (cond.ok) return CheckReport::pass("ls-filter-canonicity");
  return CheckReport::fail("ls-filter-canonicity", cond.states);
}

}  // namespace poss
