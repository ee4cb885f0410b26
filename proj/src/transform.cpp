#include "poss/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace poss {

namespace {

void require_valid(const PossibilityFrame& f, const char* who) {
  CheckReport r = validate_frame(f);
  if (!r.ok)
    throw std::invalid_argument(std::string(who) + ": invalid frame (" +
                                r.condition + ")");
}

}  // namespace

PossibilityFrame powerset_possibilization(const PossibilityFrame& world_frame) {
  require_valid(world_frame, "powerset_possibilization");
  int w = world_frame.size();
  for (int x = 0; x < w; ++x)
    if (world_frame.poset.below[x] != with(0, x))
      throw std::invalid_argument(
          "powerset_possibilization: input order must be discrete");
  if (w > 6)
    throw std::invalid_argument("powerset_possibilization: too many worlds");

  // State k of the result is the nonempty world set with mask k+1.
  int n = (1 << w) - 1;
  auto state_of = [&](StateSet worlds) { return static_cast<int>(worlds) - 1; };

  PossibilityFrame out;
  std::vector<std::pair<int, int>> leq;
  for (StateSet a = 1; a <= static_cast<StateSet>(n); ++a)
    for (StateSet b = 1; b <= static_cast<StateSet>(n); ++b)
      if (a != b && subset(a, b)) leq.push_back({state_of(a), state_of(b)});
  out.poset = FinitePoset(n, leq);
  out.indices = world_frame.indices;
  for (const Relation& r : world_frame.rels) {
    Relation rr(n, 0);
    for (StateSet a = 1; a <= static_cast<StateSet>(n); ++a) {
      StateSet img = rel_image(r, a);
      for (StateSet b = 1; b <= static_cast<StateSet>(n); ++b)
        if (subset(b, img)) rr[state_of(a)] = with(rr[state_of(a)], state_of(b));
    }
    out.rels.push_back(std::move(rr));
  }
  out.props.push_back(0);
  for (StateSet a : world_frame.props) {
    StateSet down = 0;
    for (StateSet b = 1; b <= static_cast<StateSet>(n); ++b)
      if (subset(b, a)) down = with(down, state_of(b));
    out.props.push_back(down);
  }
  normalize(out.props);
  return out;
}

PossibilityFrame powerset_possibilization(const KripkeFrame& f) {
  return powerset_possibilization(as_possibility(f));
}

StateSet possibilize_valuation(int world_count, StateSet v) {
  int n = (1 << world_count) - 1;
  StateSet out = 0;
  for (StateSet a = 1; a <= static_cast<StateSet>(n); ++a)
    if (subset(a, v)) out = with(out, static_cast<int>(a) - 1);
  return out;
}

PossibilityFrame box_tighten(const PossibilityFrame& f) {
  require_valid(f, "box_tighten");
  PossibilityFrame out = f;
  for (std::size_t k = 0; k < f.rels.size(); ++k) {
    std::vector<StateSet> boxes(f.props.size());
    for (std::size_t j = 0; j < f.props.size(); ++j)
      boxes[j] = box_op(f, static_cast<int>(k), f.props[j]);
    Relation tight(f.size(), 0);
    for (int x = 0; x < f.size(); ++x)
      for (int y = 0; y < f.size(); ++y) {
        bool related = true;
        for (std::size_t j = 0; j < f.props.size(); ++j)
          if (contains(boxes[j], x) && !contains(f.props[j], y)) {
            related = false;
            break;
          }
        if (related) tight[x] = with(tight[x], y);
      }
    out.rels[k] = std::move(tight);
  }
  return out;
}

namespace {

// Quotient by an equivalence relation given as class-of[state]; classes are
// renumbered so that class k's least member is the k-th smallest
// representative, the lifted order is given by `leq_class` on original
// states, and relations are lifted existentially unless `tight_rel` says to
// recompute them from the boxes of the input.
QuotientResult quotient_frame(
    const PossibilityFrame& f, const std::vector<int>& cls,
    const std::vector<std::vector<bool>>& leq_between_states, bool tight_rel) {
  int n = f.size();
  std::vector<int> reps;
  std::vector<int> cls_index(n, -1);
  for (int x = 0; x < n; ++x)
    if (cls[x] == x) {
      cls_index[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  std::vector<int> map(n);
  for (int x = 0; x < n; ++x) map[x] = cls_index[cls[x]];
  int m = static_cast<int>(reps.size());

  QuotientResult out;
  out.map = map;
  std::vector<std::pair<int, int>> leq;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && leq_between_states[reps[a]][reps[b]]) leq.push_back({a, b});
  out.frame.poset = FinitePoset(m, leq);
  out.frame.indices = f.indices;
  for (std::size_t k = 0; k < f.rels.size(); ++k) {
    Relation r(m, 0);
    if (tight_rel) {
      std::vector<StateSet> boxes(f.props.size());
      for (std::size_t j = 0; j < f.props.size(); ++j)
        boxes[j] = box_op(f, static_cast<int>(k), f.props[j]);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          bool related = true;
          for (std::size_t j = 0; j < f.props.size(); ++j)
            if (contains(boxes[j], reps[a]) && !contains(f.props[j], reps[b])) {
              related = false;
              break;
            }
          if (related) r[a] = with(r[a], b);
        }
    } else {
      for (int x = 0; x < n; ++x)
        for_each_state(f.rels[k][x], [&](int y) {
          r[map[x]] = with(r[map[x]], map[y]);
        });
    }
    out.frame.rels.push_back(std::move(r));
  }
  for (StateSet z : f.props) {
    StateSet img = 0;
    for_each_state(z, [&](int x) { img = with(img, map[x]); });
    out.frame.props.push_back(img);
  }
  normalize(out.frame.props);
  return out;
}

}  // namespace

QuotientResult separative_quotient(const PossibilityFrame& f) {
  require_valid(f, "separative_quotient");
  int n = f.size();
  std::vector<std::vector<bool>> srefines(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) srefines[x][y] = s_refines(f.poset, x, y);
  std::vector<int> cls(n);
  for (int x = 0; x < n; ++x) {
    cls[x] = x;
    for (int y = 0; y < x; ++y)
      if (srefines[x][y] && srefines[y][x]) {
        cls[x] = cls[y];
        break;
      }
  }
  return quotient_frame(f, cls, srefines, /*tight_rel=*/false);
}

QuotientResult tighten(const PossibilityFrame& f) {
  require_valid(f, "tighten");
  int n = f.size();
  // x' below x in the P-indistinguishability order iff every admissible set
  // containing x contains x'
  std::vector<std::vector<bool>> tleq(n, std::vector<bool>(n, false));
  for (int xp = 0; xp < n; ++xp)
    for (int x = 0; x < n; ++x) {
      bool le = true;
      for (StateSet z : f.props)
        if (contains(z, x) && !contains(z, xp)) { le = false; break; }
      tleq[xp][x] = le;
    }
  std::vector<int> cls(n);
  for (int x = 0; x < n; ++x) {
    cls[x] = x;
    for (int y = 0; y < x; ++y)
      if (tleq[x][y] && tleq[y][x]) {
        cls[x] = cls[y];
        break;
      }
  }
  return quotient_frame(f, cls, tleq, /*tight_rel=*/true);
}

PossibilityFrame functionalize(const PossibilityFrame& f) {
  require_valid(f, "functionalize");
  PossibilityFrame out = f;
  for (std::size_t k = 0; k < f.rels.size(); ++k) {
    CheckReport mx = check_interplay(f.poset, f.rels[k], "R-max");
    if (!mx.ok)
      throw std::invalid_argument(
          "functionalize: R-max fails for index " + f.indices[k] + " at state " +
          std::to_string(mx.states.empty() ? -1 : mx.states[0]));
    Relation r(f.size(), 0);
    for (int x = 0; x < f.size(); ++x)
      if (f.rels[k][x] != 0)
        r[x] = with(0, maximum_of(f.poset, f.rels[k][x]));
    out.rels[k] = std::move(r);
  }
  return out;
}

AtomStructureResult atom_structure(const PossibilityFrame& f) {
  require_valid(f, "atom_structure");
  StateSet mins = minimal_points(f.poset);
  AtomStructureResult out;
  for_each_state(mins, [&](int a) { out.minimal_states.push_back(a); });
  int m = static_cast<int>(out.minimal_states.size());
  std::vector<int> pos(f.size(), -1);
  for (int i = 0; i < m; ++i) pos[out.minimal_states[i]] = i;

  out.frame.poset = FinitePoset::discrete(m);
  out.frame.indices = f.indices;
  for (std::size_t k = 0; k < f.rels.size(); ++k) {
    Relation r(m, 0);
    for (int i = 0; i < m; ++i) {
      int a = out.minimal_states[i];
      // aR'b iff a sees some x with b below x
      StateSet reach = down_set(f.poset, f.rels[k][a]) & mins;
      for_each_state(reach, [&](int b) { r[i] = with(r[i], pos[b]); });
    }
    out.frame.rels.push_back(std::move(r));
  }
  for (StateSet z : f.props) {
    StateSet trace = 0;
    for_each_state(z & mins, [&](int b) { trace = with(trace, pos[b]); });
    out.frame.props.push_back(trace);
  }
  normalize(out.frame.props);
  return out;
}

DisjointUnionResult disjoint_union(const std::vector<PossibilityFrame>& frames) {
  if (frames.empty())
    throw std::invalid_argument("disjoint_union: empty family");
  for (const PossibilityFrame& f : frames) {
    require_valid(f, "disjoint_union");
    if (f.indices != frames[0].indices)
      throw std::invalid_argument("disjoint_union: index sets differ");
  }
  int total = 0;
  for (const PossibilityFrame& f : frames) total += f.size();
  check_state_count(total);

  DisjointUnionResult out;
  int base = 0;
  std::vector<std::pair<int, int>> leq;
  std::vector<Relation> rels(frames[0].indices.size(), Relation(total, 0));
  for (const PossibilityFrame& f : frames) {
    std::vector<int> emb(f.size());
    for (int x = 0; x < f.size(); ++x) emb[x] = base + x;
    out.embeddings.push_back(emb);
    for (int x = 0; x < f.size(); ++x)
      for (int y = 0; y < f.size(); ++y) {
        if (x != y && f.poset.leq(x, y)) leq.push_back({base + x, base + y});
      }
    for (std::size_t k = 0; k < rels.size(); ++k)
      for (int x = 0; x < f.size(); ++x)
        rels[k][base + x] = f.rels[k][x] << base;
    base += f.size();
  }
  out.frame.poset = FinitePoset(total, leq);
  out.frame.indices = frames[0].indices;
  out.frame.rels = std::move(rels);

  // P: sets whose trace on every summand is admissible there. Built as the
  // cartesian product of the summands' families.
  Family props = {0};
  base = 0;
  for (const PossibilityFrame& f : frames) {
    Family next;
    for (StateSet prefix : props)
      for (StateSet z : f.props) next.push_back(prefix | (z << base));
    props = std::move(next);
    base += f.size();
  }
  normalize(props);
  out.frame.props = std::move(props);
  return out;
}

std::string to_string(SubframeKind k) {
  switch (k) {
    case SubframeKind::Generated: return "generated";
    case SubframeKind::Selective: return "selective";
    case SubframeKind::Neither: return "neither";
  }
  return "?";
}

namespace {

// Restriction of order, relations, and props to a state mask; no input
// validation (extended frames are restricted through here too).
SubframeResult restrict_states(const PossibilityFrame& f, StateSet subset_mask) {
  SubframeResult out;
  std::vector<int> pos(f.size(), -1);
  for_each_state(subset_mask, [&](int x) {
    pos[x] = static_cast<int>(out.states.size());
    out.states.push_back(x);
  });
  int m = static_cast<int>(out.states.size());

  std::vector<std::pair<int, int>> leq;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && f.poset.leq(out.states[a], out.states[b])) leq.push_back({a, b});
  out.frame.poset = FinitePoset(m, leq);
  out.frame.indices = f.indices;
  for (std::size_t k = 0; k < f.rels.size(); ++k) {
    Relation r(m, 0);
    for (int a = 0; a < m; ++a)
      for_each_state(f.rels[k][out.states[a]] & subset_mask,
                     [&](int y) { r[a] = with(r[a], pos[y]); });
    out.frame.rels.push_back(std::move(r));
  }
  for (StateSet z : f.props) {
    StateSet trace = 0;
    for_each_state(z & subset_mask, [&](int x) { trace = with(trace, pos[x]); });
    out.frame.props.push_back(trace);
  }
  normalize(out.frame.props);
  return out;
}

}  // namespace

SubframeResult subframe(const PossibilityFrame& f, StateSet subset_mask) {
  require_valid(f, "subframe");
  if (subset_mask == 0) throw std::invalid_argument("subframe: empty subset");
  if (subset_mask & ~full_set(f.size()))
    throw std::invalid_argument("subframe: subset out of range");

  SubframeResult out = restrict_states(f, subset_mask);

  // Kind per the defining clauses.
  bool generated = true;
  for_each_state(subset_mask, [&](int x) {
    if (!subset(f.poset.below[x], subset_mask)) generated = false;
    for (const Relation& r : f.rels)
      if (!subset(r[x], subset_mask)) generated = false;
  });
  if (generated) {
    out.kind = SubframeKind::Generated;
    return out;
  }
  bool selective = true;
  // if x in S' and y <= x, some z in S' refines y
  for_each_state(subset_mask, [&](int x) {
    if (!selective) return;
    for_each_state(f.poset.below[x], [&](int y) {
      if (selective && (down_set(f.poset, with(0, y)) & subset_mask) == 0)
        selective = false;
    });
  });
  // if x in S', xRy, u <= y, some z in S' compatible with u and seen by x
  if (selective)
    for_each_state(subset_mask, [&](int x) {
      if (!selective) return;
      for (const Relation& r : f.rels) {
        for_each_state(r[x], [&](int y) {
          if (!selective) return;
          for_each_state(f.poset.below[y], [&](int u) {
            if (!selective) return;
            bool ok = false;
            for_each_state(r[x] & subset_mask, [&](int z) {
              if (!ok && f.poset.compat(z, u)) ok = true;
            });
            if (!ok) selective = false;
          });
        });
      }
    });
  out.kind = selective ? SubframeKind::Selective : SubframeKind::Neither;
  return out;
}

PossibilityFrame extend_bot(const PossibilityFrame& f) {
  require_valid(f, "extend_bot");
  int n = f.size();
  check_state_count(n + 1);
  PossibilityFrame out;
  std::vector<std::pair<int, int>> leq;
  for (int x = 0; x < n; ++x) {
    leq.push_back({0, x + 1});
    for (int y = 0; y < n; ++y)
      if (x != y && f.poset.leq(x, y)) leq.push_back({x + 1, y + 1});
  }
  out.poset = FinitePoset(n + 1, leq);
  out.indices = f.indices;
  for (const Relation& r : f.rels) {
    Relation rr(n + 1, 0);
    rr[0] = with(0, 0);
    for (int x = 0; x < n; ++x) rr[x + 1] = (r[x] << 1) | 1;
    out.rels.push_back(std::move(rr));
  }
  for (StateSet z : f.props) out.props.push_back((z << 1) | 1);
  normalize(out.props);
  return out;
}

PossibilityFrame restrict_bot(const PossibilityFrame& f) {
  int n = f.size();
  if (n < 2) throw std::invalid_argument("restrict_bot: no states besides bottom");
  int bot = -1;
  for (int x = 0; x < n; ++x)
    if (f.poset.above[x] == full_set(n)) bot = x;
  if (bot < 0)
    throw std::invalid_argument("restrict_bot: input has no minimum");
  StateSet botmask = with(0, bot);
  for (const Relation& r : f.rels) {
    if (r[bot] != botmask)
      throw std::invalid_argument("restrict_bot: R(bottom) must be {bottom}");
    for (int x = 0; x < n; ++x)
      if (!contains(r[x], bot))
        throw std::invalid_argument("restrict_bot: bottom must be accessible");
  }
  for (StateSet z : f.props)
    if (!contains(z, bot))
      throw std::invalid_argument("restrict_bot: bottom must lie in every prop");

  SubframeResult res = restrict_states(f, full_set(n) & ~botmask);
  CheckReport r = validate_frame(res.frame);
  if (!r.ok)
    throw std::invalid_argument("restrict_bot: restriction is not a frame (" +
                                r.condition + ")");
  return res.frame;
}

}  // namespace poss
