#ifndef POSS_FORMULA_HPP
#define POSS_FORMULA_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace poss {

// Modal formulas over the primitive signature ~, &, ->, [i]. The derived
// connectives |, <i>, <->, #t, #f expand at construction time, so every
// downstream algorithm handles exactly five node kinds. #t and #f expand
// through the reserved variable name below, which the concrete grammar
// cannot produce, so the expansion never captures a user variable.
inline const std::string kReservedVar = "#v";

struct Formula;
using Fml = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Var, Neg, And, Imp, Box };
  Kind kind;
  std::string label;  // variable name (Var) or modal index (Box)
  Fml left, right;    // Neg/Box use left only
};

Fml var(std::string name);
Fml neg(Fml a);
Fml land(Fml a, Fml b);
Fml imp(Fml a, Fml b);
Fml box(std::string index, Fml a);

// Derived constructors, expanded per the defining abbreviations.
Fml lor(Fml a, Fml b);           // ~(~a & ~b)
Fml dia(std::string i, Fml a);   // ~[i]~a
Fml iff(Fml a, Fml b);           // (a->b) & (b->a)
Fml top();                       // ~(#v & ~#v)
Fml bot();                       // #v & ~#v

bool equal(const Fml& a, const Fml& b);

// Sorted, duplicate-free lists of variable names / modal indices.
std::vector<std::string> variables(const Fml& f);
std::vector<std::string> indices(const Fml& f);

// Simultaneous substitution of formulas for variables.
Fml substitute(const Fml& f, const std::map<std::string, Fml>& s);

// The modal extension of the Godel-Gentzen negative translation: variables
// and boxes get double-negated, the other connectives pass through.
Fml negative_translation(const Fml& f);

struct parse_error : std::runtime_error {
  std::size_t offset;
  std::vector<std::string> expected;
  parse_error(std::string msg, std::size_t off, std::vector<std::string> exp);
};

// Parses the ASCII grammar: ~ & | -> <-> [i] <i> #t #f, variables are `p`
// followed by digits or any identifier, precedence ~,[],<> > & > | > -> > <->
// with -> and <-> right-associative.
Fml parse(const std::string& text);

// Canonical printing; recognizes the derived patterns so `p1 | p2` survives a
// round trip. parse(print(f)) is structurally f.
std::string print(const Fml& f);

}  // namespace poss

#endif
