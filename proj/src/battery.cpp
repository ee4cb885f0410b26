#include "poss/battery.hpp"

#include <map>

namespace poss {

const std::vector<std::string>& formula_battery_text() {
  static const std::vector<std::string> texts = {
      // propositional
      "p1 -> p1",
      "p1 -> ~~p1",
      "~~p1 -> p1",
      "p1 | ~p1",
      "~(p1 & ~p1)",
      "p1 & p2 -> p2",
      "p1 -> p1 | p2",
      "(p1 -> p2) -> (~p2 -> ~p1)",
      "p1 <-> ~~p1",
      "#t",
      "~#f",
      "p1 -> (p2 -> p1)",
      // depth one
      "[i](p1 -> p2) -> ([i]p1 -> [i]p2)",
      "[i](p1 & p2) <-> [i]p1 & [i]p2",
      "[i]#t",
      "[i]p1 -> p1",
      "p1 -> [i]p1",
      "[i]p1 -> <i>p1",
      "<i>p1 -> [i]p1",
      "<i>(p1 | p2) <-> <i>p1 | <i>p2",
      "[i]p1 | [i]p2 -> [i](p1 | p2)",
      "[i](p1 | p2) -> [i]p1 | [i]p2",
      "~<i>#f",
      "<i>#t",
      "p1 & <i>p2 -> <i>(p2 & ~p1)",
      // depth two
      "[i]p1 -> [i][i]p1",
      "[i][i]p1 -> [i]p1",
      "p1 -> [i]<i>p1",
      "<i>[i]p1 -> p1",
      "<i>p1 -> [i]<i>p1",
      "<i>[i]p1 -> [i]<i>p1",
      "[i]<i>p1 -> <i>[i]p1",
      "[i]([i]p1 -> p1)",
      "[i]p1 -> <i>[i]p1",
      "<i><i>p1 -> <i>p1",
      "[i](p1 -> [i]p2) | [i](p2 -> [i]p1)",
      "[i]([i]p1 | p2) -> ([i][i]p1 | [i]p2)",
  };
  return texts;
}

const std::vector<Fml>& formula_battery() {
  static const std::vector<Fml> battery = [] {
    std::vector<Fml> out;
    for (const std::string& t : formula_battery_text()) out.push_back(parse(t));
    return out;
  }();
  return battery;
}

std::vector<Fml> formula_battery(const std::string& index) {
  std::vector<Fml> out;
  for (const Fml& f : formula_battery()) {
    // rename the single battery index by rebuilding
    auto rename = [&](auto&& self, const Fml& g) -> Fml {
      switch (g->kind) {
        case Formula::Kind::Var:
          return g;
        case Formula::Kind::Neg:
          return neg(self(self, g->left));
        case Formula::Kind::And:
          return land(self(self, g->left), self(self, g->right));
        case Formula::Kind::Imp:
          return imp(self(self, g->left), self(self, g->right));
        case Formula::Kind::Box:
          return box(index, self(self, g->left));
      }
      return g;
    };
    out.push_back(rename(rename, f));
  }
  return out;
}

}  // namespace poss
