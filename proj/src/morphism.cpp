#include "poss/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace poss {

std::string to_string(MorphismGrade g) {
  switch (g) {
    case MorphismGrade::Possibility: return "possibility";
    case MorphismGrade::Strict: return "strict";
    case MorphismGrade::P: return "p";
  }
  return "?";
}

std::string to_string(MorphismFlag f) {
  switch (f) {
    case MorphismFlag::Dense: return "dense";
    case MorphismFlag::Robust: return "robust";
    case MorphismFlag::StrongEmbedding: return "strong-embedding";
    case MorphismFlag::LeqStrongEmbedding: return "leq-strong-embedding";
    case MorphismFlag::Isomorphism: return "isomorphism";
  }
  return "?";
}

std::optional<MorphismGrade> grade_from_string(const std::string& s) {
  if (s == "possibility") return MorphismGrade::Possibility;
  if (s == "strict") return MorphismGrade::Strict;
  if (s == "p") return MorphismGrade::P;
  return std::nullopt;
}

std::optional<MorphismFlag> flag_from_string(const std::string& s) {
  if (s == "dense") return MorphismFlag::Dense;
  if (s == "robust") return MorphismFlag::Robust;
  if (s == "strong-embedding") return MorphismFlag::StrongEmbedding;
  if (s == "leq-strong-embedding") return MorphismFlag::LeqStrongEmbedding;
  if (s == "isomorphism") return MorphismFlag::Isomorphism;
  return std::nullopt;
}

namespace {

StateSet preimage(const std::vector<int>& h, StateSet target_set, int n_source) {
  StateSet out = 0;
  for (int x = 0; x < n_source; ++x)
    if (contains(target_set, h[x])) out = with(out, x);
  return out;
}

StateSet image(const std::vector<int>& h, StateSet source_set) {
  StateSet out = 0;
  for_each_state(source_set, [&](int x) { out = with(out, h[x]); });
  return out;
}

struct Clauses {
  bool leq_matching = false, r_matching = false, pull_back = false;
  bool leq_forth = false, leq_back = false, r_forth = false, r_back = false;
  bool p_leq_back = false, p_r_back = false;
};

Clauses clauses_for(MorphismGrade g) {
  Clauses c;
  switch (g) {
    case MorphismGrade::Possibility:
      c.leq_matching = c.r_matching = c.pull_back = true;
      break;
    case MorphismGrade::Strict:
      c.pull_back = c.leq_forth = c.leq_back = c.r_forth = c.r_back = true;
      break;
    case MorphismGrade::P:
      c.pull_back = c.leq_forth = c.p_leq_back = c.r_forth = c.p_r_back = true;
      break;
  }
  return c;
}

}  // namespace

CheckReport check_morphism(const MorphismSpec& spec) {
  const PossibilityFrame& F = *spec.source;
  const PossibilityFrame& G = *spec.target;
  const std::vector<int>& h = spec.map;
  if (static_cast<int>(h.size()) != F.size())
    throw std::invalid_argument("morphism map not total on source");
  for (int v : h)
    if (v < 0 || v >= G.size())
      throw std::invalid_argument("morphism map value out of range");
  if (F.indices != G.indices)
    return CheckReport::fail("index sets differ");

  const FinitePoset& pf = F.poset;
  const FinitePoset& pg = G.poset;
  Clauses c = clauses_for(spec.grade);

  if (c.leq_matching) {
    for (int x = 0; x < F.size(); ++x)
      for (StateSet xp : G.props) {
        bool lhs = (pg.below[h[x]] & xp) == 0;
        bool rhs = (pf.below[x] & preimage(h, xp, F.size())) == 0;
        if (lhs != rhs) return CheckReport::fail("leq-matching", {x}, {xp});
      }
  }
  if (c.r_matching) {
    for (std::size_t k = 0; k < F.indices.size(); ++k)
      for (int x = 0; x < F.size(); ++x)
        for (StateSet xp : G.props) {
          bool lhs = subset(G.rels[k][h[x]], xp);
          bool rhs = subset(F.rels[k][x], preimage(h, xp, F.size()));
          if (lhs != rhs)
            return CheckReport::fail("R-matching " + F.indices[k], {x}, {xp});
        }
  }
  if (c.pull_back) {
    for (StateSet xp : G.props)
      if (!family_contains(F.props, preimage(h, xp, F.size())))
        return CheckReport::fail("pull-back", {}, {xp});
  }
  if (c.leq_forth) {
    for (int y = 0; y < F.size(); ++y)
      for (int x = 0; x < F.size(); ++x)
        if (pf.leq(y, x) && !pg.leq(h[y], h[x]))
          return CheckReport::fail("leq-forth", {y, x});
  }
  if (c.leq_back) {
    for (int x = 0; x < F.size(); ++x)
      for (int yp = 0; yp < G.size(); ++yp) {
        if (!pg.leq(yp, h[x])) continue;
        bool ok = false;
        for_each_state(pf.below[x], [&](int y) {
          if (!ok && pg.leq(h[y], yp)) ok = true;
        });
        if (!ok) return CheckReport::fail("leq-back", {x, yp});
      }
  }
  if (c.p_leq_back) {
    for (int x = 0; x < F.size(); ++x)
      for (int yp = 0; yp < G.size(); ++yp) {
        if (!pg.leq(yp, h[x])) continue;
        bool ok = false;
        for_each_state(pf.below[x], [&](int y) {
          if (!ok && h[y] == yp) ok = true;
        });
        if (!ok) return CheckReport::fail("p-leq-back", {x, yp});
      }
  }
  if (c.r_forth) {
    for (std::size_t k = 0; k < F.indices.size(); ++k)
      for (int x = 0; x < F.size(); ++x)
        for (int y = 0; y < F.size(); ++y)
          if (contains(F.rels[k][x], y) && !contains(G.rels[k][h[x]], h[y]))
            return CheckReport::fail("R-forth " + F.indices[k], {x, y});
  }
  if (c.r_back) {
    for (std::size_t k = 0; k < F.indices.size(); ++k)
      for (int x = 0; x < F.size(); ++x)
        for (int yp = 0; yp < G.size(); ++yp) {
          if (!contains(G.rels[k][h[x]], yp)) continue;
          for (int zp = 0; zp < G.size(); ++zp) {
            if (!pg.leq(zp, yp)) continue;
            bool ok = false;
            for_each_state(F.rels[k][x], [&](int y) {
              if (!ok && pg.compat(h[y], zp)) ok = true;
            });
            if (!ok) return CheckReport::fail("R-back " + F.indices[k], {x, yp, zp});
          }
        }
  }
  if (c.p_r_back) {
    for (std::size_t k = 0; k < F.indices.size(); ++k)
      for (int x = 0; x < F.size(); ++x)
        for (int yp = 0; yp < G.size(); ++yp) {
          if (!contains(G.rels[k][h[x]], yp)) continue;
          bool ok = false;
          for_each_state(F.rels[k][x], [&](int y) {
            if (!ok && h[y] == yp) ok = true;
          });
          if (!ok) return CheckReport::fail("p-R-back " + F.indices[k], {x, yp});
        }
  }

  StateSet hS = image(h, full_set(F.size()));
  for (MorphismFlag flag : spec.flags) {
    switch (flag) {
      case MorphismFlag::Dense: {
        for (int xp = 0; xp < G.size(); ++xp)
          if ((pg.below[xp] & hS) == 0) return CheckReport::fail("dense", {xp});
        break;
      }
      case MorphismFlag::Robust: {
        for (StateSet x : F.props) {
          if (preimage(h, image(h, x), F.size()) != x)
            return CheckReport::fail("robust: not h-saturated", {}, {x});
          StateSet hx = image(h, x);
          bool found = false;
          for (StateSet xp : G.props)
            if (hx == (hS & xp)) { found = true; break; }
          if (!found) return CheckReport::fail("robust: image not traceable", {}, {x});
        }
        break;
      }
      case MorphismFlag::StrongEmbedding:
      case MorphismFlag::LeqStrongEmbedding: {
        for (int y = 0; y < F.size(); ++y)
          for (int x = 0; x < F.size(); ++x)
            if (pf.leq(y, x) != pg.leq(h[y], h[x]))
              return CheckReport::fail("embedding: order not reflected", {y, x});
        if (flag == MorphismFlag::StrongEmbedding) {
          for (std::size_t k = 0; k < F.indices.size(); ++k)
            for (int x = 0; x < F.size(); ++x)
              for (int y = 0; y < F.size(); ++y)
                if (contains(F.rels[k][x], y) != contains(G.rels[k][h[x]], h[y]))
                  return CheckReport::fail("embedding: relation not reflected", {x, y});
        }
        for (StateSet x : F.props) {
          StateSet hx = image(h, x);
          bool found = false;
          for (StateSet xp : G.props)
            if (hx == (hS & xp)) { found = true; break; }
          if (!found)
            return CheckReport::fail("embedding: image not traceable", {}, {x});
        }
        break;
      }
      case MorphismFlag::Isomorphism: {
        if (F.size() != G.size() || popcount(hS) != F.size())
          return CheckReport::fail("isomorphism: not a bijection");
        for (int y = 0; y < F.size(); ++y)
          for (int x = 0; x < F.size(); ++x)
            if (pf.leq(y, x) != pg.leq(h[y], h[x]))
              return CheckReport::fail("isomorphism: order not preserved", {y, x});
        for (std::size_t k = 0; k < F.indices.size(); ++k)
          for (int x = 0; x < F.size(); ++x)
            for (int y = 0; y < F.size(); ++y)
              if (contains(F.rels[k][x], y) != contains(G.rels[k][h[x]], h[y]))
                return CheckReport::fail("isomorphism: relation not preserved", {x, y});
        for (StateSet xp : G.props)
          if (!family_contains(F.props, preimage(h, xp, F.size())))
            return CheckReport::fail("isomorphism: pull-back fails", {}, {xp});
        for (StateSet x : F.props)
          if (!family_contains(G.props, image(h, x)))
            return CheckReport::fail("isomorphism: image not admissible", {}, {x});
        break;
      }
    }
  }
  return CheckReport::pass(to_string(spec.grade));
}

namespace {

// Sound partial pruning for the backtracking search. Forth clauses only
// mention assigned states, so they can reject partial maps; they are valid
// pruning for the strict and p grades and, thanks to the structure of
// principal targets, for the possibility grade into principal frames.
struct Searcher {
  const PossibilityFrame& F;
  const PossibilityFrame& G;
  MorphismGrade grade;
  const std::set<MorphismFlag>& flags;
  long long nodes_left;
  bool prune_leq_forth;
  bool prune_r_forth;
  bool iso;
  std::vector<int> h;
  StateSet used = 0;

  Searcher(const PossibilityFrame& f, const PossibilityFrame& g, MorphismGrade gr,
           const std::set<MorphismFlag>& fl, long long nodes)
      : F(f), G(g), grade(gr), flags(fl), nodes_left(nodes) {
    iso = flags.count(MorphismFlag::Isomorphism) > 0;
    prune_leq_forth = grade != MorphismGrade::Possibility || iso ||
                      flags.count(MorphismFlag::StrongEmbedding) ||
                      flags.count(MorphismFlag::LeqStrongEmbedding);
    prune_r_forth = grade != MorphismGrade::Possibility || iso ||
                    flags.count(MorphismFlag::StrongEmbedding) > 0;
    // any possibility morphism into a principal frame satisfies leq-forth
    if (!prune_leq_forth) {
      Family expect = {0};
      for (int x = 0; x < G.size(); ++x) expect.push_back(G.poset.below[x]);
      normalize(expect);
      prune_leq_forth = (expect == G.props);
    }
    h.assign(F.size(), -1);
  }

  bool partial_ok(int x) {
    for (int y = 0; y <= x; ++y) {
      if (prune_leq_forth) {
        if (F.poset.leq(y, x) && !G.poset.leq(h[y], h[x])) return false;
        if (F.poset.leq(x, y) && !G.poset.leq(h[x], h[y])) return false;
      }
      if (iso || flags.count(MorphismFlag::StrongEmbedding) ||
          flags.count(MorphismFlag::LeqStrongEmbedding)) {
        if (F.poset.leq(y, x) != G.poset.leq(h[y], h[x])) return false;
        if (F.poset.leq(x, y) != G.poset.leq(h[x], h[y])) return false;
      }
      if (prune_r_forth)
        for (std::size_t k = 0; k < F.indices.size(); ++k) {
          if (contains(F.rels[k][x], y) && !contains(G.rels[k][h[x]], h[y]))
            return false;
          if (contains(F.rels[k][y], x) && !contains(G.rels[k][h[y]], h[x]))
            return false;
        }
      if (iso || flags.count(MorphismFlag::StrongEmbedding))
        for (std::size_t k = 0; k < F.indices.size(); ++k) {
          if (contains(F.rels[k][x], y) != contains(G.rels[k][h[x]], h[y]))
            return false;
          if (contains(F.rels[k][y], x) != contains(G.rels[k][h[y]], h[x]))
            return false;
        }
    }
    return true;
  }

  bool search(int x, const std::vector<int>* pinned, MorphismSpec& out) {
    if (x == F.size()) {
      MorphismSpec spec{&F, &G, h, grade, flags};
      if (check_morphism(spec).ok) {
        out = spec;
        return true;
      }
      return false;
    }
    int lo = 0, hi = G.size() - 1;
    if (pinned && (*pinned)[x] >= 0) lo = hi = (*pinned)[x];
    for (int v = lo; v <= hi; ++v) {
      if (--nodes_left < 0) throw budget_error{};
      if (iso && contains(used, v)) continue;
      h[x] = v;
      if (!partial_ok(x)) continue;
      if (iso) used = with(used, v);
      if (search(x + 1, pinned, out)) return true;
      if (iso) used = without(used, v);
    }
    h[x] = -1;
    return false;
  }
};

}  // namespace

std::optional<MorphismSpec> find_morphism(const PossibilityFrame& source,
                                          const PossibilityFrame& target,
                                          MorphismGrade grade,
                                          const std::set<MorphismFlag>& flags,
                                          long long nodes,
                                          const std::vector<int>* pinned) {
  if (flags.count(MorphismFlag::Isomorphism) && source.size() != target.size())
    return std::nullopt;
  Searcher s(source, target, grade, flags, nodes);
  MorphismSpec out;
  if (s.search(0, pinned, out)) return out;
  return std::nullopt;
}

namespace {
bool same_frame(const PossibilityFrame& a, const PossibilityFrame& b) {
  return a.poset.below == b.poset.below && a.indices == b.indices &&
         a.rels == b.rels && a.props == b.props;
}
}  // namespace

MorphismSpec compose(const MorphismSpec& f, const MorphismSpec& g) {
  if (!same_frame(*f.target, *g.source))
    throw std::invalid_argument("compose: frame mismatch");
  if (f.grade != g.grade)
    throw std::invalid_argument("compose: morphism grades differ");
  if (!check_morphism(f).ok || !check_morphism(g).ok)
    throw std::invalid_argument("compose: input does not check at its grade");
  MorphismSpec out;
  out.source = f.source;
  out.target = g.target;
  out.grade = f.grade;
  out.map.resize(f.map.size());
  for (std::size_t x = 0; x < f.map.size(); ++x) out.map[x] = g.map[f.map[x]];
  return out;
}

std::optional<std::vector<int>> are_isomorphic(const PossibilityFrame& f,
                                               const PossibilityFrame& g,
                                               long long nodes) {
  if (f.size() != g.size() || f.props.size() != g.props.size() ||
      f.indices != g.indices)
    return std::nullopt;
  auto spec = find_morphism(f, g, MorphismGrade::Possibility,
                            {MorphismFlag::Isomorphism}, nodes);
  if (!spec) return std::nullopt;
  return spec->map;
}

}  // namespace poss
