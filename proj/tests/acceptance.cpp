// Acceptance suite: runs every criterion end to end and prints one pass/fail
// line per criterion. Exit code is the number of failing criteria.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "poss/battery.hpp"
#include "poss/bao.hpp"
#include "poss/correspondence.hpp"
#include "poss/enumerate.hpp"
#include "poss/forcing.hpp"
#include "poss/formula.hpp"
#include "poss/frame.hpp"
#include "poss/io.hpp"
#include "poss/morphism.hpp"
#include "poss/transform.hpp"

using namespace poss;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& note,
            double seconds) {
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
  if (!note.empty()) line << " (" << note << ")";
  line << " [" << static_cast<long long>(seconds * 1000) << " ms]";
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

template <typename F>
void run(int number, const std::string& name, F body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  report(number, name, ok, note, secs);
}

PossibilityFrame fig11() {
  PossibilityFrame f;
  f.poset = FinitePoset(4, {{1, 0}, {2, 0}, {3, 0}});
  f.indices = {"i"};
  f.rels = {Relation(4, full_set(4))};
  f.props = regular_opens(f.poset);
  return f;
}

PossibilityFrame chain2() {
  PossibilityFrame f;
  f.poset = FinitePoset(2, {{0, 1}});
  f.indices = {"i"};
  f.rels = {Relation(2, full_set(2))};
  f.props = {0, full_set(2)};
  return f;
}

PossibilityFrame p3() {
  KripkeFrame k;
  k.n = 2;
  k.indices = {"i"};
  k.rels = {Relation(2, full_set(2))};
  return powerset_possibilization(k);
}

// battery validity with early-exit per formula
std::vector<bool> battery_valid(const PossibilityFrame& f) {
  std::vector<bool> out;
  Budget big(200'000'000);
  for (const Fml& fml : formula_battery())
    out.push_back(valid_on_frame(f, fml, &big).valid);
  return out;
}

// all relations on a poset, streamed
template <typename F>
void for_each_relation(const FinitePoset& p, F body) {
  int n = p.n;
  std::uint64_t total = std::uint64_t{1} << (n * n);
  Relation r(n, 0);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int x = 0; x < n; ++x) r[x] = (bits >> (x * n)) & full_set(n);
    body(r);
  }
}

bool ro_closed_under_box(const FinitePoset& p, const Family& ro, const Relation& r) {
  for (StateSet z : ro) {
    StateSet boxed = 0;
    for (int x = 0; x < p.n; ++x)
      if (subset(r[x], z)) boxed = with(boxed, x);
    if (!family_contains(ro, boxed)) return false;
  }
  return true;
}

// criterion 1

bool crit1(std::string& note) {
  PossibilityFrame f = fig11();
  Family ro = regular_opens(f.poset);
  if (ro.size() != 8) return false;
  for (StateSet x : ro) {
    if (!family_contains(ro, interior(f.poset, ~x & full_set(4)))) return false;
    for (StateSet y : ro)
      if (!family_contains(ro, x & y) ||
          !family_contains(ro, implies_op(f.poset, x, y)))
        return false;
  }
  if (regular_opens(chain2().poset) != Family{0, full_set(2)}) return false;
  PossibilityFrame pp3 = p3();
  if (regular_opens(pp3.poset) != pp3.props || pp3.props.size() != 4) return false;
  note = "RO(FIG11)=8, RO(CHAIN2)=2, RO(P3)=props";
  return true;
}

// criterion 2

bool crit2(std::string& note) {
  long long checked = 0;
  bool ok = true;
  for (int n = 1; n <= 4 && ok; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      Family ro = regular_opens(p);
      for_each_relation(p, [&](const Relation& r) {
        if (!ok) return;
        bool closed = ro_closed_under_box(p, ro, r);
        bool conds = check_interplay(p, r, "R-rule").ok &&
                     check_interplay(p, r, "R=>win").ok;
        if (closed != conds) ok = false;
        ++checked;
      });
      if (!ok) break;
    }
  note = std::to_string(checked) + " poset-relation pairs";
  return ok;
}

// criterion 3

bool crit3(std::string& note) {
  long long checked = 0;
  bool ok = true;
  for (int n = 1; n <= 4 && ok; ++n)
    for (const FinitePoset& p : enumerate_posets(n)) {
      Family ro = regular_opens(p);
      for_each_relation(p, [&](const Relation& r) {
        if (!ok) return;
        ++checked;
        bool rule = check_interplay(p, r, "R-rule").ok;
        bool win = check_interplay(p, r, "R=>win").ok;
        bool down = check_interplay(p, r, "R-down").ok;
        bool dense = check_interplay(p, r, "R-dense").ok;
        bool iffwin = check_interplay(p, r, "R<=>win_").ok;
        // ultimate condition equivalence
        if (iffwin != (rule && win && down && dense)) { ok = false; return; }
        // successor sets regular open iff R-down and R-dense
        bool rx_ro = true;
        for (int x = 0; x < p.n; ++x)
          if (!family_contains(ro, r[x])) rx_ro = false;
        if (rx_ro != (down && dense)) { ok = false; return; }
        // R-rule, R-down, R-dense derive up-R
        if (rule && down && dense && !check_interplay(p, r, "up-R").ok) {
          ok = false;
          return;
        }
        // under R-down the three win-style conditions coincide
        if (down) {
          bool winu = check_interplay(p, r, "R=>win_").ok;
          bool refin = check_interplay(p, r, "R-refinability").ok;
          if (win != winu || win != refin) { ok = false; return; }
        }
      });
      if (!ok) break;
    }
  note = std::to_string(checked) + " poset-relation pairs";
  return ok;
}

// criterion 4

bool crit4(std::string& note) {
  long long frames = 0;
  bool ok = true;
  const std::vector<Fml>& battery = formula_battery();
  for (int n = 1; n <= 4 && ok; ++n) {
    for_each_full_frame(n, {"i"}, [&](const PossibilityFrame& f) {
      if (!ok) return;
      ++frames;
      PossibilityFrame ft = box_tighten(f);
      FrameClasses c = classify(ft);
      if (!(c.strong && c.full && c.r_tight)) { ok = false; return; }
      // truth sets identical under every valuation of the battery variables
      Model mf{&f, {}};
      Model mt{&ft, {}};
      for (const Fml& fml : battery) {
        std::vector<std::string> vars = variables(fml);
        std::erase(vars, kReservedVar);
        std::vector<std::size_t> pick(vars.size(), 0);
        while (true) {
          for (std::size_t i = 0; i < vars.size(); ++i) {
            mf.valuation[vars[i]] = f.props[pick[i]];
            mt.valuation[vars[i]] = f.props[pick[i]];
          }
          if (truth_set(mf, fml) != truth_set(mt, fml)) { ok = false; return; }
          std::size_t i = vars.size();
          bool done = true;
          while (i > 0) {
            --i;
            if (++pick[i] < f.props.size()) { done = false; break; }
            pick[i] = 0;
          }
          if (done) break;
        }
      }
    });
  }
  note = std::to_string(frames) + " full frames";
  return ok;
}

// criterion 5

bool crit5(std::string& note) {
  bool ok = true;
  const std::vector<Fml>& battery = formula_battery();
  long long n_quot = 0, n_tight = 0, n_atoms = 0, n_func = 0, n_pow = 0,
            n_union = 0, n_sub = 0;
  PossibilityFrame prev;
  std::vector<bool> prev_valid;
  bool have_prev = false;

  // a quasi-functional full frame: relations are principal downsets of a
  // random partial function, rejection-sampled for the closure conditions
  auto random_qf_frame = [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
      PossibilityFrame f = random_frame(rng(), {5, 1, 0.0, true});
      std::uniform_int_distribution<int> pick(-1, f.size() - 1);
      Relation r(f.size(), 0);
      for (int x = 0; x < f.size(); ++x) {
        int fx = attempt + 1 == 32 ? x : pick(rng);
        if (fx >= 0) r[x] = f.poset.below[fx];
      }
      if (!check_interplay(f.poset, r, "R-rule").ok) continue;
      if (!check_interplay(f.poset, r, "R=>win").ok) continue;
      f.rels[0] = r;
      return f;
    }
    return random_frame(seed, {5, 1, 0.0, true});
  };

  for (std::uint64_t seed = 0; ok && (seed < 200 || n_union < 200 || n_sub < 200);
       ++seed) {
    if (seed > 3000) { ok = false; break; }
    PossibilityFrame f = random_frame(seed, {5, 1, 0.4, true});
    std::vector<bool> base = battery_valid(f);

    auto expect_same = [&](const PossibilityFrame& g, long long& counter) {
      if (!ok) return;
      if (battery_valid(g) != base) ok = false;
      ++counter;
    };

    expect_same(separative_quotient(f).frame, n_quot);
    expect_same(tighten(f).frame, n_tight);
    PossibilityFrame at = atom_structure(f).frame;
    expect_same(at, n_atoms);

    // powerset possibilization of the atom structure (a world frame)
    if (ok) {
      PossibilityFrame pow = powerset_possibilization(at);
      if (battery_valid(at) != battery_valid(pow)) ok = false;
      ++n_pow;
    }

    // disjoint union with the previous frame: validity is the conjunction
    if (ok && have_prev && f.size() + prev.size() <= 10) {
      DisjointUnionResult du = disjoint_union({f, prev});
      std::vector<bool> du_valid = battery_valid(du.frame);
      for (std::size_t i = 0; i < battery.size(); ++i)
        if (du_valid[i] != (base[i] && prev_valid[i])) ok = false;
      ++n_union;
    }
    prev = f;
    prev_valid = base;
    have_prev = true;

    // selective subframes anti-preserve validity
    if (ok) {
      int tested = 0;
      for (StateSet sub = 1; sub < full_set(f.size()) && tested < 2 && ok; ++sub) {
        SubframeResult sf = subframe(f, sub);
        if (sf.kind == SubframeKind::Neither) continue;
        if (!validate_frame(sf.frame).ok) { ok = false; break; }
        ++tested;
        ++n_sub;
        std::vector<bool> sub_valid = battery_valid(sf.frame);
        for (std::size_t i = 0; i < battery.size(); ++i)
          if (base[i] && !sub_valid[i]) ok = false;
      }
    }
  }

  // functionalization needs quasi-functional inputs; sample those directly
  for (std::uint64_t seed = 0; ok && n_func < 200; ++seed) {
    if (seed > 3000) { ok = false; break; }
    PossibilityFrame f = random_qf_frame(seed);
    if (!classify(f).quasi_functional) continue;
    if (battery_valid(functionalize(f)) != battery_valid(f)) ok = false;
    ++n_func;
  }

  std::ostringstream n;
  n << "samples: quotient " << n_quot << ", tighten " << n_tight << ", atoms "
    << n_atoms << ", functionalize " << n_func << ", possibilization " << n_pow
    << ", union " << n_union << ", subframe " << n_sub;
  note = n.str();
  return ok && n_quot >= 200 && n_tight >= 200 && n_atoms >= 200 && n_func >= 200 &&
         n_pow >= 200 && n_union >= 200 && n_sub >= 200;
}

// criterion 6

bool hom_is_iso(const BAOHom& h) {
  if (!check_bao_hom(h, true).ok) return false;
  if (h.source->size() != h.target->size()) return false;
  std::set<int> img(h.map.begin(), h.map.end());
  return static_cast<int>(img.size()) == h.source->size();
}

bool crit6(std::string& note) {
  bool ok = true;
  int baos = 0;
  for (int m = 1; m <= 3 && ok; ++m)
    for (const FiniteBAO& b : enumerate_baos(m, {"i"})) {
      ++baos;
      AlgebraFrame pf = principal_frame(b);
      UnderlyingBAO pu = underlying_bao(pf.frame);
      if (!hom_is_iso(zeta_A(b, pf, pu))) { ok = false; break; }

      FilterFrame gff = general_filter_frame(b);
      UnderlyingBAO gu = underlying_bao(gff.frame);
      if (!hom_is_iso(eta_A(b, gff, gu))) { ok = false; break; }

      // finite degenerations: the full frame and the filter frame also
      // reproduce the algebra
      AlgebraFrame ff = full_frame(b);
      UnderlyingBAO fu = underlying_bao(ff.frame);
      if (!hom_is_iso(zeta_A(b, ff, fu))) { ok = false; break; }

      FilterFrame ffr = filter_frame(b);
      UnderlyingBAO ffu = underlying_bao(ffr.frame);
      if (!hom_is_iso(eta_A(b, ffr, ffu))) { ok = false; break; }
    }
  if (!ok) {
    note = "algebra round trip failed";
    return false;
  }

  // frame round trips over enumerated full frames plus non-full fixtures
  int frames = 0;
  std::vector<PossibilityFrame> pool;
  for (int n = 1; n <= 3; ++n)
    for (const PossibilityFrame& f : enumerate_full_frames(n, {"i"})) pool.push_back(f);
  {
    PossibilityFrame trivial_p3 = p3();
    trivial_p3.props = {0, full_set(3)};
    pool.push_back(trivial_p3);
    pool.push_back(chain2());
  }
  for (const PossibilityFrame& f : pool) {
    ++frames;
    FrameClasses c = classify(f);
    UnderlyingBAO u = underlying_bao(f);
    FilterFrame gff = general_filter_frame(u.bao);
    bool gff_iso = are_isomorphic(f, gff.frame).has_value();
    if (gff_iso != c.filter_descriptive) { ok = false; break; }
    AlgebraFrame pf = principal_frame(u.bao);
    bool pf_iso = are_isomorphic(f, pf.frame).has_value();
    if (pf_iso != (c.tight && c.principal)) { ok = false; break; }
  }
  note = std::to_string(baos) + " BAOs, " + std::to_string(frames) + " frames";
  return ok;
}

// criterion 7

bool maps_equal(const std::vector<int>& a, const std::vector<int>& b) { return a == b; }

bool crit7(std::string& note) {
  bool ok = true;
  int sampled = 0;
  std::mt19937_64 rng(600);

  // naturality squares on morphisms between random full frames with at
  // least two states on each side
  while (sampled < 30 && ok) {
    PossibilityFrame F = random_frame(rng(), {3, 1, 0.45, true});
    PossibilityFrame G = random_frame(rng(), {3, 1, 0.45, true});
    if (F.size() < 2 || G.size() < 2) continue;
    auto g = find_morphism(F, G, MorphismGrade::Possibility);
    if (!g) continue;
    ++sampled;
    UnderlyingBAO uf = underlying_bao(F);
    UnderlyingBAO ug = underlying_bao(G);
    BAOHom gstar = dual_hom_under(*g, uf, ug);  // G* -> F*

    // square: (g*)_gff . eta_F = eta_G . g
    FilterFrame gff_f = general_filter_frame(uf.bao);
    FilterFrame gff_g = general_filter_frame(ug.bao);
    MorphismSpec gstar_gff = dual_hom_gff(gstar, gff_f, gff_g);
    MorphismSpec etaF = eta_F(F, uf, gff_f);
    MorphismSpec etaG = eta_F(G, ug, gff_g);
    for (int x = 0; x < F.size(); ++x)
      if (gstar_gff.map[etaF.map[x]] != etaG.map[g->map[x]]) ok = false;

    // square: (h_rela)^under . zeta_A = zeta_B . h  with  h = g*
    AlgebraFrame pf_f = principal_frame(uf.bao);
    AlgebraFrame pf_g = principal_frame(ug.bao);
    MorphismSpec hrela = dual_hom_rela(gstar, pf_f, pf_g);  // (F*). -> (G*).
    UnderlyingBAO upf_f = underlying_bao(pf_f.frame);
    UnderlyingBAO upf_g = underlying_bao(pf_g.frame);
    BAOHom hrela_under = dual_hom_under(hrela, upf_f, upf_g);
    BAOHom zetaA = zeta_A(ug.bao, pf_g, upf_g);
    BAOHom zetaB = zeta_A(uf.bao, pf_f, upf_f);
    for (int e = 0; e < ug.bao.size(); ++e)
      if (hrela_under.map[zetaA.map[e]] != zetaB.map[gstar.map[e]]) ok = false;

    // square: (h_gff)^under . eta_A = eta_B . h, with h = g* from G* to F*
    // and h_gff = gstar_gff from (F*)_gff to (G*)_gff
    UnderlyingBAO ugff_f = underlying_bao(gff_f.frame);
    UnderlyingBAO ugff_g = underlying_bao(gff_g.frame);
    BAOHom hgff_under = dual_hom_under(gstar_gff, ugff_f, ugff_g);
    BAOHom etaA = eta_A(ug.bao, gff_g, ugff_g);
    BAOHom etaB = eta_A(uf.bao, gff_f, ugff_f);
    for (int e = 0; e < ug.bao.size(); ++e)
      if (hgff_under.map[etaA.map[e]] != etaB.map[gstar.map[e]]) ok = false;
  }

  // reflections: factorization and uniqueness
  int reflections = 0;
  while (reflections < 20 && ok) {
    PossibilityFrame F = random_frame(rng(), {3, 1, 0.45, true});
    PossibilityFrame E = random_frame(rng(), {3, 1, 0.45, true});
    if (F.size() < 2 || E.size() < 2) continue;
    UnderlyingBAO ue = underlying_bao(E);

    // rich target: the principal frame of E's algebra
    AlgebraFrame rich = principal_frame(ue.bao);
    auto g = find_morphism(F, rich.frame, MorphismGrade::Possibility);
    if (!g) continue;
    ++reflections;
    ++sampled;
    UnderlyingBAO uf = underlying_bao(F);
    AlgebraFrame pf = principal_frame(uf.bao);
    MorphismSpec zeta = zeta_F(F, uf, pf);
    MorphismSpec gbar = reflection_map_rich(*g, uf, pf);
    if (!check_morphism(gbar).ok) { ok = false; break; }
    for (int x = 0; x < F.size(); ++x)
      if (gbar.map[zeta.map[x]] != g->map[x]) ok = false;
    // uniqueness: no other possibility morphism factors g through zeta
    std::vector<int> pins(pf.frame.size(), -1);
    for (int x = 0; x < F.size(); ++x) pins[zeta.map[x]] = g->map[x];
    for (int s = 0; s < pf.frame.size() && ok; ++s) {
      if (pins[s] >= 0) continue;
      for (int v = 0; v < rich.frame.size() && ok; ++v) {
        if (v == gbar.map[s]) continue;
        std::vector<int> forced = pins;
        forced[s] = v;
        auto other = find_morphism(pf.frame, rich.frame, MorphismGrade::Possibility,
                                   {}, 20'000'000, &forced);
        if (other && !maps_equal(other->map, gbar.map)) ok = false;
      }
    }

    // filter-descriptive target: the general filter frame of E's algebra
    FilterFrame fd = general_filter_frame(ue.bao);
    auto g2 = find_morphism(F, fd.frame, MorphismGrade::Possibility);
    if (g2) {
      ++sampled;
      FilterFrame gff_f = general_filter_frame(uf.bao);
      MorphismSpec eta = eta_F(F, uf, gff_f);
      MorphismSpec g2bar = reflection_map_filter_descriptive(*g2, uf, gff_f);
      if (!check_morphism(g2bar).ok) ok = false;
      for (int x = 0; x < F.size(); ++x)
        if (g2bar.map[eta.map[x]] != g2->map[x]) ok = false;
      std::vector<int> pins2(gff_f.frame.size(), -1);
      for (int x = 0; x < F.size(); ++x) pins2[eta.map[x]] = g2->map[x];
      for (int s = 0; s < gff_f.frame.size() && ok; ++s) {
        if (pins2[s] >= 0) continue;
        for (int v = 0; v < fd.frame.size() && ok; ++v) {
          if (v == g2bar.map[s]) continue;
          std::vector<int> forced = pins2;
          forced[s] = v;
          auto other = find_morphism(gff_f.frame, fd.frame,
                                     MorphismGrade::Possibility, {}, 20'000'000,
                                     &forced);
          if (other && !maps_equal(other->map, g2bar.map)) ok = false;
        }
      }
    }
  }

  note = std::to_string(sampled) + " sampled morphisms";
  return ok && sampled >= 50;
}

// criterion 8

struct SchemaCase {
  const char* name;
  LSSchema schema;
};

bool full_standard(const PossibilityFrame& f) {
  for (const Relation& r : f.rels)
    if (!check_interplay(f.poset, r, "R-down").ok) return false;
  return true;
}

bool crit8(std::string& note) {
  std::vector<SchemaCase> unimodal = {
      {"D", {{}, {"i"}, {}, {"i"}}},  {"T", {{}, {"i"}, {}, {}}},
      {"4", {{}, {"i"}, {"i", "i"}, {}}}, {"B", {{}, {}, {"i"}, {"i"}}},
      {"5", {{"i"}, {"i"}, {"i"}, {"i"}}},
  };
  bool ok = true;
  long long checked = 0;
  Budget budget(4'000'000'000LL);
  for (const SchemaCase& sc : unimodal) {
    Fml axiom = ls_axiom(sc.schema);
    for (int n = 1; n <= 4 && ok; ++n)
      for_each_full_frame(n, {"i"}, [&](const PossibilityFrame& f) {
        if (!ok || !full_standard(f)) return;
        ++checked;
        bool av = valid_on_frame(f, axiom, &budget).valid;
        bool cond = ls_condition(f, sc.schema, PathKind::Possibility).ok;
        if (av != cond) ok = false;
      });
    if (!ok) {
      note = std::string("divergence on schema ") + sc.name;
      return false;
    }
  }

  // inclusion schema (two indices): exhaustive to three states; the 4-state
  // two-index discrete sweep is out of reach, so 4-state coverage comes from
  // a seeded random sample over valid relation pairs
  {
    LSSchema inclusion{{}, {"i"}, {"j"}, {}};
    Fml axiom = ls_axiom(inclusion);
    for (int n = 1; n <= 3 && ok; ++n)
      for_each_full_frame(n, {"i", "j"}, [&](const PossibilityFrame& f) {
        if (!ok || !full_standard(f)) return;
        ++checked;
        bool av = valid_on_frame(f, axiom, &budget).valid;
        bool cond = ls_condition(f, inclusion, PathKind::Possibility).ok;
        if (av != cond) ok = false;
      });
    std::mt19937_64 rng(808);
    int sampled = 0;
    while (sampled < 4000 && ok) {
      PossibilityFrame f = random_frame(rng(), {4, 2, 0.45, true});
      if (f.indices.size() != 2 || !full_standard(f)) continue;
      ++sampled;
      ++checked;
      bool av = valid_on_frame(f, axiom, &budget).valid;
      bool cond = ls_condition(f, inclusion, PathKind::Possibility).ok;
      if (av != cond) ok = false;
    }
    if (!ok) {
      note = "divergence on inclusion schema";
      return false;
    }
  }

  // shift-reflexivity via composed local correspondents:
  // box(box p -> p) matches  forall x,v (xRv -> forall y<=v forall z<=y
  //                                        exists u<=z: yRu)
  {
    Fml axiom = parse("[i]([i]p1 -> p1)");
    for (int n = 1; n <= 4 && ok; ++n)
      for_each_full_frame(n, {"i"}, [&](const PossibilityFrame& f) {
        if (!ok || !full_standard(f)) return;
        ++checked;
        bool av = valid_on_frame(f, axiom, &budget).valid;
        const Relation& r = f.rels[0];
        bool cond = true;
        for (int x = 0; x < f.size() && cond; ++x)
          for_each_state(r[x], [&](int v) {
            if (!cond) return;
            for_each_state(f.poset.below[v], [&](int y) {
              if (!cond) return;
              for_each_state(f.poset.below[y], [&](int z) {
                if (cond && (f.poset.below[z] & r[y]) == 0) cond = false;
              });
            });
          });
        if (av != cond) ok = false;
      });
    if (!ok) {
      note = "divergence on shift-reflexivity";
      return false;
    }
  }
  note = std::to_string(checked) + " frame-schema checks";
  return ok;
}

// criterion 9

bool crit9(std::string& note) {
  bool ok = true;
  long long frames = 0;
  std::vector<Fml> psis = {top(), var("p2"), neg(var("p2")), box("i", var("p2")),
                           lor(var("p2"), neg(var("p2")))};
  for (int n = 1; n <= 3 && ok; ++n) {
    std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t bits = 0; bits < total && ok; ++bits) {
      KripkeFrame k;
      k.n = n;
      k.indices = {"i"};
      Relation r(n, 0);
      for (int x = 0; x < n; ++x) r[x] = (bits >> (x * n)) & full_set(n);
      k.rels = {r};
      ++frames;
      for (const Fml& psi : psis)
        if (!kripke_split_property(k, var("p2"), psi, "i").ok) ok = false;
    }
  }
  note = std::to_string(frames) + " kripke frames x " + std::to_string(psis.size()) +
         " psi instances";
  return ok;
}

// criterion 10

bool crit10(std::string& note) {
  bool ok = true;
  int baos = 0;
  for (int m = 1; m <= 3 && ok; ++m)
    for (const FiniteBAO& b : enumerate_baos(m, {"i"})) {
      ++baos;
      if (!check_interplay(general_filter_frame(b).frame, "i", "R-refinability+").ok)
        ok = false;
      if (!check_interplay(filter_frame(b).frame, "i", "R-refinability+").ok)
        ok = false;
    }
  if (!ok) {
    note = "R-refinability+ failed on a filter frame";
    return false;
  }

  // the possibilization of w1->w1, w2->w2 violates R-refinability++
  KripkeFrame two;
  two.n = 2;
  two.indices = {"i"};
  two.rels = {Relation{with(0, 0), with(0, 1)}};
  PossibilityFrame pow = powerset_possibilization(two);
  if (check_interplay(pow, "i", "R-refinability++").ok) {
    note = "expected R-refinability++ violation missing";
    return false;
  }

  // disjunction distribution over quasi-functional R-refinability++ frames
  Fml dist = parse("[j]([i]p1 | [i]p2) -> ([j][i]p1 | [j][i]p2)");
  long long dist_frames = 0;
  for (int n = 1; n <= 3 && ok; ++n)
    for_each_full_frame(n, {"i", "j"}, [&](const PossibilityFrame& f) {
      if (!ok) return;
      for (const Relation& r : f.rels) {
        if (!check_interplay(f.poset, r, "R-max").ok) return;
        if (!check_interplay(f.poset, r, "R-refinability++").ok) return;
      }
      ++dist_frames;
      if (!valid_on_frame(f, dist).valid) ok = false;
    });
  note = std::to_string(baos) + " BAOs, " + std::to_string(dist_frames) +
         " quasi-functional frames";
  return ok;
}

// criterion 11

bool crit11(std::string& note) {
  bool ok = true;
  int checks = 0;
  std::vector<LSSchema> schemas = {
      {{}, {"i"}, {}, {"i"}},        // D
      {{}, {"i"}, {}, {}},           // T
      {{}, {"i"}, {"i", "i"}, {}},   // 4
      {{}, {}, {"i"}, {"i"}},        // B
      {{"i"}, {"i"}, {"i"}, {"i"}},  // 5
  };
  for (int m = 1; m <= 3 && ok; ++m)
    for (const FiniteBAO& b : enumerate_baos(m, {"i"}))
      for (const LSSchema& s : schemas) {
        ++checks;
        if (!lemmon_scott_filter_canonicity(b, s.alpha, s.beta, s.delta, s.gamma).ok)
          ok = false;
      }
  note = std::to_string(checks) + " BAO-schema checks";
  return ok;
}

// criterion 12: shells out to the CLI against the corpus

int run_cmd(const std::string& cmd, std::string& output) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  output.clear();
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  return pclose(pipe) / 256;
}

bool crit12(std::string& note) {
  const char* bin = std::getenv("POSSCT_BIN");
  const char* corpus = std::getenv("POSS_CORPUS");
  if (!bin || !corpus) {
    note = "POSSCT_BIN/POSS_CORPUS not set";
    return false;
  }
  std::vector<std::string> docs = {
      "chain2.json",  "fig11.json",     "p3.json",        "fig10.json",
      "fig12.json",   "fig13.json",     "kripke2cycle.json", "singleton.json",
      "discrete2.json", "chain3.json",  "fig11-trivial.json", "extended-chain2.json",
  };
  if (docs.size() < 10) return false;
  bool ok = true;
  for (const std::string& d : docs) {
    std::string path = std::string(corpus) + "/" + d;
    std::string out1, out2;
    int code = run_cmd(std::string(bin) + " validate " + path, out1);
    if (code != 0) { note = d + ": validate exit " + std::to_string(code); return false; }
    // serialization round trip, bit exact: parse, serialize, parse, serialize
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    FrameDocument doc = parse_frame_document(ss.str());
    std::string ser1 = serialize_frame_document(doc);
    FrameDocument doc2 = parse_frame_document(ser1);
    std::string ser2 = serialize_frame_document(doc2);
    if (ser1 != ser2) { note = d + ": round trip not bit-exact"; return false; }
    // DOT determinism
    if (!doc.extended) {
      int c1 = run_cmd(std::string(bin) + " export-dot " + path, out1);
      int c2 = run_cmd(std::string(bin) + " export-dot " + path, out2);
      if (c1 != 0 || c2 != 0 || out1 != out2 || out1.empty()) {
        note = d + ": DOT not deterministic";
        return false;
      }
    }
  }
  // exit code contract
  std::string out;
  int c_valid = run_cmd(std::string(bin) + " valid " + corpus +
                            "/fig11.json \"[i](p1 -> p2) -> ([i]p1 -> [i]p2)\"",
                        out);
  if (c_valid != 0) { note = "K axiom should exit 0"; return false; }
  int c_invalid = run_cmd(std::string(bin) + " valid " + corpus +
                              "/fig11.json \"p1 -> [i]p1\"",
                          out);
  if (c_invalid != 1) { note = "invalid formula should exit 1"; return false; }
  int c_bad = run_cmd(std::string(bin) + " validate " + corpus + "/no-such.json", out);
  if (c_bad != 2) { note = "missing file should exit 2"; return false; }
  note = std::to_string(docs.size()) + " documents";
  return ok;
}

}  // namespace

int main() {
  run(1, "regular open golden values", crit1);
  run(2, "closure characterization sweep", crit2);
  run(3, "ultimate condition and successor-set equivalences", crit3);
  run(4, "box-tightening strong/full/tight and truth sets", crit4);
  run(5, "semantic equivalence battery over random frames", crit5);
  run(6, "duality round trips", crit6);
  run(7, "naturality squares and reflections", crit7);
  run(8, "Lemmon-Scott correspondence sweep", crit8);
  run(9, "split property on Kripke frames", crit9);
  run(10, "filter-frame refinability and disjunction distribution", crit10);
  run(11, "filter canonicity", crit11);
  run(12, "CLI contract", crit12);
  if (failures == 0)
    std::cout << "acceptance: all criteria passed" << std::endl;
  else
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  return failures;
}
