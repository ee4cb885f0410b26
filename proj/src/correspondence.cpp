#include "poss/correspondence.hpp"

#include <sstream>
#include <stdexcept>

namespace poss {

Relation path_relation(const PossibilityFrame& f, const std::vector<std::string>& sigma,
                       PathKind kind) {
  int n = f.size();
  Relation r(n, 0);
  if (sigma.empty()) {
    for (int x = 0; x < n; ++x)
      r[x] = kind == PathKind::Possibility ? f.poset.below[x] : with(0, x);
    return r;
  }
  r = f.rel(sigma[0]);
  for (std::size_t k = 1; k < sigma.size(); ++k) {
    const Relation& step = f.rel(sigma[k]);
    Relation next(n, 0);
    for (int x = 0; x < n; ++x) next[x] = rel_image(step, r[x]);
    r = std::move(next);
  }
  return r;
}

CheckReport ls_condition(const PossibilityFrame& f, const LSSchema& schema,
                         PathKind kind) {
  int n = f.size();
  Relation ra = path_relation(f, schema.alpha, kind);
  Relation rb = path_relation(f, schema.beta, kind);
  Relation rd = path_relation(f, schema.delta, kind);
  Relation rg = path_relation(f, schema.gamma, kind);

  auto meet_exists = [&](int y, int z) {
    return (rg[y] & rb[z]) != 0;  // exists u: yRg u and zRb u
  };

  if (kind == PathKind::Kripke) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!contains(rd[x], y)) continue;
        for (int z = 0; z < n; ++z)
          if (contains(ra[x], z) && !meet_exists(y, z))
            return CheckReport::fail("ls-kripke", {x, y, z});
      }
    return CheckReport::pass("ls-kripke");
  }

  if (schema.alpha.empty()) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (contains(rd[x], y) && !meet_exists(y, x))
          return CheckReport::fail("ls-possibility-empty-alpha", {x, y});
    return CheckReport::pass("ls-possibility-empty-alpha");
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!contains(rd[x], y)) continue;
      bool found = false;
      for_each_state(f.poset.below[x], [&](int xp) {
        if (found) return;
        bool all = true;
        for_each_state(ra[xp], [&](int z) {
          if (all && !meet_exists(y, z)) all = false;
        });
        if (all) found = true;
      });
      if (!found) return CheckReport::fail("ls-possibility", {x, y});
    }
  return CheckReport::pass("ls-possibility");
}

Fml ls_axiom(const LSSchema& schema, const std::string& v) {
  Fml lhs = var(v);
  for (auto it = schema.beta.rbegin(); it != schema.beta.rend(); ++it)
    lhs = box(*it, lhs);
  for (auto it = schema.alpha.rbegin(); it != schema.alpha.rend(); ++it)
    lhs = dia(*it, lhs);
  Fml rhs = var(v);
  for (auto it = schema.gamma.rbegin(); it != schema.gamma.rend(); ++it)
    rhs = dia(*it, rhs);
  for (auto it = schema.delta.rbegin(); it != schema.delta.rend(); ++it)
    rhs = box(*it, rhs);
  return imp(lhs, rhs);
}

CorrespondenceReport verify_correspondence(
    const LSSchema& schema, const std::function<bool(PossibilityFrame&)>& next_frame,
    PathKind kind, bool check_both_directions, Budget* budget) {
  Fml axiom = ls_axiom(schema);
  CorrespondenceReport rep;
  PossibilityFrame f;
  while (next_frame(f)) {
    bool axiom_valid = kind == PathKind::Kripke
                           ? [&] {
                               KripkeFrame kf;
                               kf.n = f.size();
                               kf.indices = f.indices;
                               kf.rels = f.rels;
                               return kripke_valid(kf, axiom, budget).valid;
                             }()
                           : valid_on_frame(f, axiom, budget).valid;
    bool cond = ls_condition(f, schema, kind).ok;
    bool diverged = check_both_directions ? (axiom_valid != cond)
                                          : (cond && !axiom_valid);
    if (diverged) {
      rep.ok = false;
      rep.divergent_frame = static_cast<int>(rep.frames_checked);
      rep.axiom_valid = axiom_valid;
      rep.condition_holds = cond;
      return rep;
    }
    ++rep.frames_checked;
  }
  return rep;
}

namespace {

struct Translator {
  int next_fresh = 0;
  std::ostringstream out;

  std::string fresh() {
    static const char* names[] = {"y", "z", "u", "v", "w"};
    std::string v;
    if (next_fresh < 5)
      v = names[next_fresh];
    else
      v = "y" + std::to_string(next_fresh - 4);
    ++next_fresh;
    return v;
  }

  static std::string pred(const std::string& variable) {
    // p<digits> renders as Q<digits>, anything else as Q_<name>
    if (variable.size() > 1 && variable[0] == 'p' &&
        variable.find_first_not_of("0123456789", 1) == std::string::npos)
      return "Q" + variable.substr(1);
    return "Q_" + variable;
  }

  void tr(const Fml& f, const std::string& x) {
    switch (f->kind) {
      case Formula::Kind::Var:
        out << pred(f->label) << "(" << x << ")";
        return;
      case Formula::Kind::Neg: {
        std::string y = fresh();
        out << "∀" << y << "(" << y << "⊑" << x << " → ¬";
        tr(f->left, y);
        out << ")";
        return;
      }
      case Formula::Kind::And:
        out << "(";
        tr(f->left, x);
        out << " ∧ ";
        tr(f->right, x);
        out << ")";
        return;
      case Formula::Kind::Imp: {
        std::string y = fresh();
        out << "∀" << y << "((" << y << "⊑" << x << " ∧ ";
        tr(f->left, y);
        out << ") → ";
        tr(f->right, y);
        out << ")";
        return;
      }
      case Formula::Kind::Box: {
        std::string y = fresh();
        out << "∀" << y << "(" << x << "R" << f->label << " " << y
            << " → ";
        tr(f->left, y);
        out << ")";
        return;
      }
    }
  }
};

}  // namespace

std::string standard_translation(const Fml& f, const std::string& x) {
  Translator t;
  t.tr(f, x);
  return t.out.str();
}

Fml split_axiom(const Fml& phi, const Fml& psi, const std::string& i) {
  const std::string p = "p1";
  for (const std::string& v : variables(psi))
    if (v == p)
      throw std::invalid_argument("split_axiom: psi must not contain " + p);
  Fml pv = var(p);
  return imp(dia(i, land(pv, psi)),
             land(dia(i, land(pv, phi)), dia(i, land(pv, neg(phi)))));
}

CheckReport kripke_split_property(const KripkeFrame& f, const Fml& phi,
                                  const Fml& psi, const std::string& i,
                                  Budget* budget) {
  Fml split = split_axiom(phi, psi, i);
  Fml nodia = neg(dia(i, psi));
  bool split_valid = kripke_valid(f, split, budget).valid;
  if (!split_valid) return CheckReport::pass("split-property (antecedent fails)");
  bool nodia_valid = kripke_valid(f, nodia, budget).valid;
  if (nodia_valid) return CheckReport::pass("split-property");
  return CheckReport::fail("split-property");
}

}  // namespace poss
