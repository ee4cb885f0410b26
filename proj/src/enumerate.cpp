#include "poss/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace poss {

namespace {

void all_permutations(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::uint64_t matrix_bits(int n, const std::vector<StateSet>& rows,
                          const std::vector<int>& perm) {
  // row/column-permuted adjacency matrix, row-major; perm maps new -> old
  std::uint64_t bits = 0;
  int pos = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (contains(rows[perm[a]], perm[b])) bits |= std::uint64_t{1} << pos;
      ++pos;
    }
  return bits;
}

// Enumerates strict partial orders by deciding each unordered pair to <, >,
// or incomparable and filtering for transitivity at the leaves; plenty fast
// at the capped sizes.
template <typename Emit>
void gen_strict_orders(int n, Emit emit) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<std::vector<int>> lt(n, std::vector<int>(n, 0));
  auto transitive = [&]() {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!lt[a][b]) continue;
        for (int c = 0; c < n; ++c)
          if (lt[b][c] && !lt[a][c]) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == pairs.size()) {
      if (transitive()) emit(lt);
      return;
    }
    auto [i, j] = pairs[k];
    self(self, k + 1);
    lt[i][j] = 1;
    self(self, k + 1);
    lt[i][j] = 0;
    lt[j][i] = 1;
    self(self, k + 1);
    lt[j][i] = 0;
  };
  rec(rec, 0);
}

}  // namespace

std::vector<std::uint64_t> foundation_canonical_form(
    const FinitePoset& p, const std::vector<Relation>& rels) {
  int n = p.n;
  if (n > 6) throw std::invalid_argument("canonical form capped at 6 states");
  std::vector<std::vector<int>> perms;
  all_permutations(n, perms);
  std::vector<std::uint64_t> best;
  for (const std::vector<int>& perm : perms) {
    std::vector<std::uint64_t> cand;
    cand.push_back(matrix_bits(n, p.below, perm));
    for (const Relation& r : rels) cand.push_back(matrix_bits(n, r, perm));
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

std::vector<FinitePoset> enumerate_posets(int n, int cap) {
  if (n < 1 || n > cap || n > 6)
    throw std::invalid_argument("enumerate_posets: size beyond cap");
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<FinitePoset> out;
  gen_strict_orders(n, [&](const std::vector<std::vector<int>>& m) {
    std::vector<std::pair<int, int>> leq;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (m[a][b]) leq.push_back({a, b});
    FinitePoset p(n, leq);
    if (seen.insert(foundation_canonical_form(p, {})).second)
      out.push_back(std::move(p));
  });
  std::sort(out.begin(), out.end(), [](const FinitePoset& a, const FinitePoset& b) {
    return foundation_canonical_form(a, {}) < foundation_canonical_form(b, {});
  });
  return out;
}

namespace {

std::vector<Relation> valid_relations(const FinitePoset& p) {
  int n = p.n;
  std::vector<Relation> out;
  std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Relation r(n, 0);
    for (int x = 0; x < n; ++x) r[x] = (bits >> (x * n)) & full_set(n);
    if (!check_interplay(p, r, "R-rule").ok) continue;
    if (!check_interplay(p, r, "R=>win").ok) continue;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

long long for_each_full_frame(int n, const std::vector<std::string>& indices,
                              const std::function<void(const PossibilityFrame&)>& emit,
                              int cap) {
  if (n < 1 || n > cap || n > 4)
    throw std::invalid_argument("for_each_full_frame: size beyond cap");
  if (indices.empty() || indices.size() > 2)
    throw std::invalid_argument("for_each_full_frame: 1 or 2 indices supported");
  if (!std::is_sorted(indices.begin(), indices.end()))
    throw std::invalid_argument("for_each_full_frame: indices must be sorted");
  long long count = 0;
  for (const FinitePoset& p : enumerate_posets(n, std::max(cap, n))) {
    Family ro = regular_opens(p);
    std::vector<Relation> rels = valid_relations(p);
    std::set<std::vector<std::uint64_t>> seen;
    auto push = [&](std::vector<Relation> tuple) {
      if (!seen.insert(foundation_canonical_form(p, tuple)).second) return;
      PossibilityFrame f;
      f.poset = p;
      f.indices = indices;
      f.rels = std::move(tuple);
      f.props = ro;
      emit(f);
      ++count;
    };
    if (indices.size() == 1) {
      for (const Relation& r : rels) push({r});
    } else {
      for (const Relation& r1 : rels)
        for (const Relation& r2 : rels) push({r1, r2});
    }
  }
  return count;
}

std::vector<PossibilityFrame> enumerate_full_frames(
    int n, const std::vector<std::string>& indices, int cap) {
  std::vector<PossibilityFrame> out;
  for_each_full_frame(
      n, indices, [&](const PossibilityFrame& f) { out.push_back(f); }, cap);
  return out;
}

namespace {

std::uint64_t apply_perm(std::uint64_t mask, const std::vector<int>& perm) {
  // perm[a] = image of atom a
  std::uint64_t out = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    if ((mask >> a) & 1) out |= std::uint64_t{1} << perm[a];
  return out;
}

// box table from the diamond's values on atoms: dia is the union over the
// atoms below the argument, box is its dual.
std::vector<int> box_table_from_dia_atoms(int m, const std::vector<std::uint64_t>& dia_atom) {
  int sz = 1 << m;
  std::vector<int> table(sz);
  std::uint64_t full = static_cast<std::uint64_t>(sz - 1);
  for (int e = 0; e < sz; ++e) {
    std::uint64_t dia_of_comp = 0;
    for (int a = 0; a < m; ++a)
      if (((full & ~static_cast<std::uint64_t>(e)) >> a) & 1) dia_of_comp |= dia_atom[a];
    table[e] = static_cast<int>(full & ~dia_of_comp);
  }
  return table;
}

}  // namespace

std::vector<FiniteBAO> enumerate_baos(int m, const std::vector<std::string>& indices,
                                      int cap) {
  if (m < 1 || m > cap || m > 3)
    throw std::invalid_argument("enumerate_baos: atom count beyond cap");
  if (indices.empty()) throw std::invalid_argument("enumerate_baos: no indices");
  if (!std::is_sorted(indices.begin(), indices.end()))
    throw std::invalid_argument("enumerate_baos: indices must be sorted");
  int sz = 1 << m;

  std::vector<std::vector<int>> per_index_tables;
  long long table_count = 1;
  for (int a = 0; a < m; ++a) table_count *= sz;
  for (long long t = 0; t < table_count; ++t) {
    std::vector<std::uint64_t> dia_atom(m);
    long long rem = t;
    for (int a = 0; a < m; ++a) {
      dia_atom[a] = static_cast<std::uint64_t>(rem % sz);
      rem /= sz;
    }
    per_index_tables.push_back(box_table_from_dia_atoms(m, dia_atom));
  }

  std::vector<std::vector<int>> perms;
  all_permutations(m, perms);

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<FiniteBAO> out;
  std::vector<std::size_t> pick(indices.size(), 0);
  while (true) {
    // canonical form under atom permutations: for every permutation render
    // each table as box'(e) = perm(box(perm^-1(e))) and take the minimum
    std::vector<std::uint64_t> best;
    for (const std::vector<int>& perm : perms) {
      std::vector<int> inv(m);
      for (int a = 0; a < m; ++a) inv[perm[a]] = a;
      std::vector<std::uint64_t> cand;
      for (std::size_t k = 0; k < indices.size(); ++k) {
        const std::vector<int>& table = per_index_tables[pick[k]];
        for (int e = 0; e < sz; ++e) {
          std::uint64_t src = apply_perm(static_cast<std::uint64_t>(e), inv);
          cand.push_back(apply_perm(
              static_cast<std::uint64_t>(table[static_cast<int>(src)]), perm));
        }
      }
      if (best.empty() || cand < best) best = cand;
    }
    if (seen.insert(best).second) {
      std::vector<std::vector<int>> box_tables;
      for (std::size_t k = 0; k < indices.size(); ++k)
        box_tables.push_back(per_index_tables[pick[k]]);
      out.push_back(FiniteBAO::powerset(m, indices, std::move(box_tables)));
    }
    std::size_t i = indices.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++pick[i] < per_index_tables.size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (done) break;
  }
  return out;
}

PossibilityFrame random_frame(std::uint64_t seed, const RandomFrameParams& params) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, std::max(1, params.max_states));
  int n = size_dist(rng);
  std::vector<std::vector<int>> lt(n, std::vector<int>(n, 0));
  std::bernoulli_distribution edge(0.4);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (edge(rng)) lt[i][j] = 1;  // i refines j
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (lt[a][k] && lt[k][b]) lt[a][b] = 1;
  std::vector<std::pair<int, int>> leq;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lt[a][b]) leq.push_back({a, b});
  FinitePoset p(n, leq);

  PossibilityFrame f;
  f.poset = p;
  for (int k = 0; k < params.index_count; ++k)
    f.indices.push_back(std::string(1, static_cast<char>('i' + k)));
  std::sort(f.indices.begin(), f.indices.end());
  std::bernoulli_distribution rel_edge(params.rel_density);
  for (int k = 0; k < params.index_count; ++k) {
    Relation r(n, 0);
    for (int attempt = 0; attempt < 64; ++attempt) {
      Relation cand(n, 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (rel_edge(rng)) cand[x] = with(cand[x], y);
      if (check_interplay(p, cand, "R-rule").ok &&
          check_interplay(p, cand, "R=>win").ok) {
        r = std::move(cand);
        break;
      }
    }
    f.rels.push_back(std::move(r));
  }
  Family ro = regular_opens(p);
  if (params.full) {
    f.props = ro;
  } else {
    // close a random seed of RO sets under the frame operations
    std::uniform_int_distribution<std::size_t> pickro(0, ro.size() - 1);
    Family props = {0, ro[pickro(rng)]};
    normalize(props);
    bool grew = true;
    while (grew) {
      grew = false;
      Family add;
      for (StateSet a : props) {
        for (StateSet b : props) {
          StateSet m1 = a & b;
          StateSet m2 = implies_op(p, a, b);
          if (!family_contains(props, m1)) add.push_back(m1);
          if (!family_contains(props, m2)) add.push_back(m2);
        }
        for (std::size_t k = 0; k < f.rels.size(); ++k) {
          StateSet bx = box_op(f, static_cast<int>(k), a);
          if (!family_contains(props, bx)) add.push_back(bx);
        }
      }
      if (!add.empty()) {
        grew = true;
        props.insert(props.end(), add.begin(), add.end());
        normalize(props);
      }
    }
    f.props = props;
  }
  return f;
}

FiniteBAO random_bao(std::uint64_t seed, const RandomBAOParams& params) {
  std::mt19937_64 rng(seed);
  int m = params.atoms;
  if (m < 1 || m > 6) throw std::invalid_argument("random_bao: bad atom count");
  int sz = 1 << m;
  std::vector<std::string> indices;
  for (int k = 0; k < params.index_count; ++k)
    indices.push_back(std::string(1, static_cast<char>('i' + k)));
  std::sort(indices.begin(), indices.end());
  std::uniform_int_distribution<int> pick(0, sz - 1);
  std::vector<std::vector<int>> tables;
  for (int k = 0; k < params.index_count; ++k) {
    std::vector<std::uint64_t> dia_atom(m);
    for (int a = 0; a < m; ++a) dia_atom[a] = static_cast<std::uint64_t>(pick(rng));
    tables.push_back(box_table_from_dia_atoms(m, dia_atom));
  }
  return FiniteBAO::powerset(m, indices, tables);
}

}  // namespace poss
