#include "poss/forcing.hpp"

#include <stdexcept>

namespace poss {

namespace {

StateSet lookup(const std::map<std::string, StateSet>& val, const std::string& name) {
  auto it = val.find(name);
  if (it != val.end()) return it->second;
  // #t/#f expand through the reserved variable; their truth sets do not
  // depend on its value, so it defaults to the empty set.
  if (name == kReservedVar) return 0;
  throw std::invalid_argument("unbound variable: " + name);
}

StateSet eval(const PossibilityFrame& fr, const std::map<std::string, StateSet>& val,
              const Fml& f, Budget* budget) {
  if (budget) budget->tick();
  switch (f->kind) {
    case Formula::Kind::Var:
      return lookup(val, f->label);
    case Formula::Kind::Neg:
      return interior(fr.poset,
                      ~eval(fr, val, f->left, budget) & full_set(fr.size()));
    case Formula::Kind::And:
      return eval(fr, val, f->left, budget) & eval(fr, val, f->right, budget);
    case Formula::Kind::Imp:
      return implies_op(fr.poset, eval(fr, val, f->left, budget),
                        eval(fr, val, f->right, budget));
    case Formula::Kind::Box:
      return box_op(fr, f->label, eval(fr, val, f->left, budget));
  }
  return 0;
}

StateSet eval_extended(const PossibilityFrame& fr, int bot,
                       const std::map<std::string, StateSet>& val, const Fml& f) {
  StateSet botmask = with(0, bot);
  switch (f->kind) {
    case Formula::Kind::Var:
      return lookup(val, f->label) | botmask;
    case Formula::Kind::Neg: {
      StateSet body = eval_extended(fr, bot, val, f->left);
      // forced wherever no refinement other than bot forces the body
      StateSet out = 0;
      for (int y = 0; y < fr.size(); ++y)
        if ((fr.poset.below[y] & ~botmask & body) == 0) out = with(out, y);
      return out | botmask;
    }
    case Formula::Kind::And:
      return eval_extended(fr, bot, val, f->left) &
             eval_extended(fr, bot, val, f->right);
    case Formula::Kind::Imp: {
      StateSet a = eval_extended(fr, bot, val, f->left);
      StateSet b = eval_extended(fr, bot, val, f->right);
      StateSet out = 0;
      for (int y = 0; y < fr.size(); ++y)
        if ((fr.poset.below[y] & a & ~b) == 0) out = with(out, y);
      return out | botmask;
    }
    case Formula::Kind::Box:
      return box_op(fr, f->label, eval_extended(fr, bot, val, f->left)) | botmask;
  }
  return 0;
}

}  // namespace

bool forces(const Model& m, int state, const Fml& f, Budget* budget) {
  if (state < 0 || state >= m.frame->size())
    throw std::invalid_argument("state out of range");
  return contains(truth_set(m, f, budget), state);
}

StateSet truth_set(const Model& m, const Fml& f, Budget* budget) {
  return eval(*m.frame, m.valuation, f, budget);
}

bool forces_extended(const Model& m, int bot_state, int state, const Fml& f) {
  return contains(truth_set_extended(m, bot_state, f), state);
}

StateSet truth_set_extended(const Model& m, int bot_state, const Fml& f) {
  return eval_extended(*m.frame, bot_state, m.valuation, f);
}

namespace {

// Sweeps assignments vars -> family in lexicographic order; returns true if
// `body(valuation)` holds for all of them (body returns false to stop).
template <typename Body>
bool sweep_valuations(const std::vector<std::string>& vars, const Family& family,
                      std::map<std::string, StateSet>& val, std::size_t k, Body body) {
  if (k == vars.size()) return body();
  for (StateSet v : family) {
    val[vars[k]] = v;
    if (!sweep_valuations(vars, family, val, k + 1, body)) return false;
  }
  return true;
}

}  // namespace

ValidityReport valid_on_frame(const PossibilityFrame& f, const Fml& fml,
                              Budget* budget) {
  Budget local;
  if (!budget) budget = &local;
  std::vector<std::string> vars = variables(fml);
  // The reserved #t/#f variable never affects truth sets; skip it so #t and
  // #f do not multiply the sweep by |P|.
  std::erase(vars, kReservedVar);
  ValidityReport rep;
  rep.vars = vars;
  std::map<std::string, StateSet> val;
  StateSet all = full_set(f.size());
  sweep_valuations(vars, f.props, val, 0, [&] {
    budget->tick();
    StateSet t = eval(f, val, fml, budget);
    if (t == all) return true;
    rep.valid = false;
    rep.state = first_state(~t & all);
    rep.valuation.clear();
    for (const std::string& v : vars) rep.valuation.push_back(val[v]);
    return false;
  });
  return rep;
}

int KripkeFrame::index_of(const std::string& i) const {
  for (std::size_t k = 0; k < indices.size(); ++k)
    if (indices[k] == i) return static_cast<int>(k);
  throw std::invalid_argument("unknown modal index: " + i);
}

namespace {

StateSet kripke_eval(const KripkeFrame& fr, const std::map<std::string, StateSet>& val,
                     const Fml& f) {
  switch (f->kind) {
    case Formula::Kind::Var:
      return lookup(val, f->label);
    case Formula::Kind::Neg:
      return ~kripke_eval(fr, val, f->left) & full_set(fr.n);
    case Formula::Kind::And:
      return kripke_eval(fr, val, f->left) & kripke_eval(fr, val, f->right);
    case Formula::Kind::Imp:
      return (~kripke_eval(fr, val, f->left) & full_set(fr.n)) |
             kripke_eval(fr, val, f->right);
    case Formula::Kind::Box: {
      const Relation& r = fr.rels[fr.index_of(f->label)];
      StateSet body = kripke_eval(fr, val, f->left);
      StateSet out = 0;
      for (int w = 0; w < fr.n; ++w)
        if (subset(r[w], body)) out = with(out, w);
      return out;
    }
  }
  return 0;
}

}  // namespace

bool kripke_forces(const KripkeModel& m, int world, const Fml& f) {
  if (world < 0 || world >= m.frame->n)
    throw std::invalid_argument("world out of range");
  return contains(kripke_eval(*m.frame, m.valuation, f), world);
}

ValidityReport kripke_valid(const KripkeFrame& f, const Fml& fml, Budget* budget) {
  Budget local;
  if (!budget) budget = &local;
  std::vector<std::string> vars = variables(fml);
  std::erase(vars, kReservedVar);
  Family all_subsets;
  StateSet all = full_set(f.n);
  for (StateSet x = 0;; ++x) {
    all_subsets.push_back(x);
    if (x == all) break;
  }
  ValidityReport rep;
  rep.vars = vars;
  std::map<std::string, StateSet> val;
  sweep_valuations(vars, all_subsets, val, 0, [&] {
    budget->tick();
    StateSet t = kripke_eval(f, val, fml);
    if (t == all) return true;
    rep.valid = false;
    rep.state = first_state(~t & all);
    rep.valuation.clear();
    for (const std::string& v : vars) rep.valuation.push_back(val[v]);
    return false;
  });
  return rep;
}

PossibilityFrame as_possibility(const KripkeFrame& f) {
  PossibilityFrame out;
  out.poset = FinitePoset::discrete(f.n);
  out.indices = f.indices;
  out.rels = f.rels;
  StateSet all = full_set(f.n);
  for (StateSet x = 0;; ++x) {
    out.props.push_back(x);
    if (x == all) break;
  }
  return out;
}

}  // namespace poss
