#include "poss/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace poss {

namespace {
Fml make(Formula::Kind k, std::string label, Fml l, Fml r) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->label = std::move(label);
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}
}  // namespace

Fml var(std::string name) { return make(Formula::Kind::Var, std::move(name), nullptr, nullptr); }
Fml neg(Fml a) { return make(Formula::Kind::Neg, "", std::move(a), nullptr); }
Fml land(Fml a, Fml b) { return make(Formula::Kind::And, "", std::move(a), std::move(b)); }
Fml imp(Fml a, Fml b) { return make(Formula::Kind::Imp, "", std::move(a), std::move(b)); }
Fml box(std::string index, Fml a) { return make(Formula::Kind::Box, std::move(index), std::move(a), nullptr); }

Fml lor(Fml a, Fml b) { return neg(land(neg(std::move(a)), neg(std::move(b)))); }
Fml dia(std::string i, Fml a) { return neg(box(std::move(i), neg(std::move(a)))); }
Fml iff(Fml a, Fml b) { return land(imp(a, b), imp(b, a)); }
Fml bot() { return land(var(kReservedVar), neg(var(kReservedVar))); }
Fml top() { return neg(bot()); }

bool equal(const Fml& a, const Fml& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->label != b->label) return false;
  return equal(a->left, b->left) && equal(a->right, b->right);
}

namespace {
void collect(const Fml& f, std::set<std::string>& vars, std::set<std::string>& idx) {
  if (!f) return;
  if (f->kind == Formula::Kind::Var) vars.insert(f->label);
  if (f->kind == Formula::Kind::Box) idx.insert(f->label);
  collect(f->left, vars, idx);
  collect(f->right, vars, idx);
}
}  // namespace

std::vector<std::string> variables(const Fml& f) {
  std::set<std::string> vars, idx;
  collect(f, vars, idx);
  return {vars.begin(), vars.end()};
}

std::vector<std::string> indices(const Fml& f) {
  std::set<std::string> vars, idx;
  collect(f, vars, idx);
  return {idx.begin(), idx.end()};
}

Fml substitute(const Fml& f, const std::map<std::string, Fml>& s) {
  switch (f->kind) {
    case Formula::Kind::Var: {
      auto it = s.find(f->label);
      return it == s.end() ? f : it->second;
    }
    case Formula::Kind::Neg:
      return neg(substitute(f->left, s));
    case Formula::Kind::And:
      return land(substitute(f->left, s), substitute(f->right, s));
    case Formula::Kind::Imp:
      return imp(substitute(f->left, s), substitute(f->right, s));
    case Formula::Kind::Box:
      return box(f->label, substitute(f->left, s));
  }
  return f;
}

Fml negative_translation(const Fml& f) {
  switch (f->kind) {
    case Formula::Kind::Var:
      return neg(neg(f));
    case Formula::Kind::Neg:
      return neg(negative_translation(f->left));
    case Formula::Kind::And:
      return land(negative_translation(f->left), negative_translation(f->right));
    case Formula::Kind::Imp:
      return imp(negative_translation(f->left), negative_translation(f->right));
    case Formula::Kind::Box:
      return neg(neg(box(f->label, negative_translation(f->left))));
  }
  return f;
}

parse_error::parse_error(std::string msg, std::size_t off, std::vector<std::string> exp)
    : std::runtime_error(std::move(msg)), offset(off), expected(std::move(exp)) {}

namespace {

struct Token {
  enum class Type { Not, And, Or, Imp, Iff, LBrack, RBrack, Less, Greater, LParen, RParen, Top, Bot, Ident, End };
  Type type;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : src_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_.offset = pos_;
    if (pos_ >= src_.size()) {
      tok_.type = Token::Type::End;
      tok_.text = "";
      return;
    }
    char c = src_[pos_];
    auto two = src_.substr(pos_, 2);
    auto three = src_.substr(pos_, 3);
    if (three == "<->") { tok_ = {Token::Type::Iff, "<->", pos_}; pos_ += 3; return; }
    if (two == "->") { tok_ = {Token::Type::Imp, "->", pos_}; pos_ += 2; return; }
    if (two == "#t") { tok_ = {Token::Type::Top, "#t", pos_}; pos_ += 2; return; }
    if (two == "#f") { tok_ = {Token::Type::Bot, "#f", pos_}; pos_ += 2; return; }
    switch (c) {
      case '~': tok_ = {Token::Type::Not, "~", pos_}; ++pos_; return;
      case '&': tok_ = {Token::Type::And, "&", pos_}; ++pos_; return;
      case '|': tok_ = {Token::Type::Or, "|", pos_}; ++pos_; return;
      case '[': tok_ = {Token::Type::LBrack, "[", pos_}; ++pos_; return;
      case ']': tok_ = {Token::Type::RBrack, "]", pos_}; ++pos_; return;
      case '<': tok_ = {Token::Type::Less, "<", pos_}; ++pos_; return;
      case '>': tok_ = {Token::Type::Greater, ">", pos_}; ++pos_; return;
      case '(': tok_ = {Token::Type::LParen, "(", pos_}; ++pos_; return;
      case ')': tok_ = {Token::Type::RParen, ")", pos_}; ++pos_; return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Type::Ident, src_.substr(start, pos_ - start), start};
      return;
    }
    throw parse_error("unexpected character '" + std::string(1, c) + "'", pos_,
                      {"formula"});
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  Fml parse_all() {
    Fml f = parse_iff();
    if (lex_.peek().type != Token::Type::End)
      throw parse_error("trailing input", lex_.peek().offset, {"end of input"});
    return f;
  }

 private:
  [[noreturn]] void expect_fail(std::vector<std::string> exp) {
    throw parse_error("unexpected token '" + lex_.peek().text + "'",
                      lex_.peek().offset, std::move(exp));
  }

  std::string expect_ident(const char* what) {
    if (lex_.peek().type != Token::Type::Ident) expect_fail({what});
    return lex_.take().text;
  }

  void expect(Token::Type t, const char* what) {
    if (lex_.peek().type != t) expect_fail({what});
    lex_.take();
  }

  Fml parse_iff() {
    Fml a = parse_imp();
    if (lex_.peek().type == Token::Type::Iff) {
      lex_.take();
      return iff(a, parse_iff());
    }
    return a;
  }

  Fml parse_imp() {
    Fml a = parse_or();
    if (lex_.peek().type == Token::Type::Imp) {
      lex_.take();
      return imp(a, parse_imp());
    }
    return a;
  }

  Fml parse_or() {
    Fml a = parse_and();
    while (lex_.peek().type == Token::Type::Or) {
      lex_.take();
      a = lor(a, parse_and());
    }
    return a;
  }

  Fml parse_and() {
    Fml a = parse_unary();
    while (lex_.peek().type == Token::Type::And) {
      lex_.take();
      a = land(a, parse_unary());
    }
    return a;
  }

  Fml parse_unary() {
    switch (lex_.peek().type) {
      case Token::Type::Not:
        lex_.take();
        return neg(parse_unary());
      case Token::Type::LBrack: {
        lex_.take();
        std::string i = expect_ident("modal index");
        expect(Token::Type::RBrack, "]");
        return box(i, parse_unary());
      }
      case Token::Type::Less: {
        lex_.take();
        std::string i = expect_ident("modal index");
        expect(Token::Type::Greater, ">");
        return dia(i, parse_unary());
      }
      case Token::Type::LParen: {
        lex_.take();
        Fml f = parse_iff();
        expect(Token::Type::RParen, ")");
        return f;
      }
      case Token::Type::Top:
        lex_.take();
        return top();
      case Token::Type::Bot:
        lex_.take();
        return bot();
      case Token::Type::Ident:
        return var(lex_.take().text);
      default:
        expect_fail({"~", "[", "<", "(", "#t", "#f", "variable"});
    }
  }

  Lexer lex_;
};

// Printing recognizes the derived patterns. Precedence levels:
// 5 atoms and prefixes, 4 &, 3 |, 2 ->, 1 <->.
struct Sugar {
  enum class Kind { Prim, Or, Dia, Iff, Top, Bot };
  Kind kind = Kind::Prim;
  Fml a, b;
  std::string index;
};

bool is_bot(const Fml& f) {
  return f->kind == Formula::Kind::And && f->left->kind == Formula::Kind::Var &&
         f->left->label == kReservedVar && f->right->kind == Formula::Kind::Neg &&
         f->right->left->kind == Formula::Kind::Var &&
         f->right->left->label == kReservedVar;
}

Sugar sugar(const Fml& f) {
  Sugar s;
  if (is_bot(f)) {
    s.kind = Sugar::Kind::Bot;
    return s;
  }
  if (f->kind == Formula::Kind::Neg) {
    const Fml& c = f->left;
    if (is_bot(c)) {
      s.kind = Sugar::Kind::Top;
      return s;
    }
    if (c->kind == Formula::Kind::And && c->left->kind == Formula::Kind::Neg &&
        c->right->kind == Formula::Kind::Neg) {
      s.kind = Sugar::Kind::Or;
      s.a = c->left->left;
      s.b = c->right->left;
      return s;
    }
    if (c->kind == Formula::Kind::Box && c->left->kind == Formula::Kind::Neg) {
      s.kind = Sugar::Kind::Dia;
      s.index = c->label;
      s.a = c->left->left;
      return s;
    }
  }
  if (f->kind == Formula::Kind::And && f->left->kind == Formula::Kind::Imp &&
      f->right->kind == Formula::Kind::Imp && equal(f->left->left, f->right->right) &&
      equal(f->left->right, f->right->left)) {
    s.kind = Sugar::Kind::Iff;
    s.a = f->left->left;
    s.b = f->left->right;
    return s;
  }
  return s;
}

void print_rec(const Fml& f, int parent_level, std::ostringstream& out) {
  Sugar s = sugar(f);
  auto wrap = [&](int level, auto body) {
    bool paren = level < parent_level;
    if (paren) out << '(';
    body();
    if (paren) out << ')';
  };
  switch (s.kind) {
    case Sugar::Kind::Top:
      out << "#t";
      return;
    case Sugar::Kind::Bot:
      out << "#f";
      return;
    case Sugar::Kind::Or:
      wrap(3, [&] {
        print_rec(s.a, 3, out);
        out << " | ";
        print_rec(s.b, 4, out);
      });
      return;
    case Sugar::Kind::Dia:
      out << '<' << s.index << '>';
      print_rec(s.a, 5, out);
      return;
    case Sugar::Kind::Iff:
      wrap(1, [&] {
        print_rec(s.a, 2, out);
        out << " <-> ";
        print_rec(s.b, 1, out);
      });
      return;
    case Sugar::Kind::Prim:
      break;
  }
  switch (f->kind) {
    case Formula::Kind::Var:
      out << f->label;
      return;
    case Formula::Kind::Neg:
      out << '~';
      print_rec(f->left, 5, out);
      return;
    case Formula::Kind::Box:
      out << '[' << f->label << ']';
      print_rec(f->left, 5, out);
      return;
    case Formula::Kind::And:
      wrap(4, [&] {
        print_rec(f->left, 4, out);
        out << " & ";
        print_rec(f->right, 5, out);
      });
      return;
    case Formula::Kind::Imp:
      wrap(2, [&] {
        print_rec(f->left, 3, out);
        out << " -> ";
        print_rec(f->right, 2, out);
      });
      return;
  }
}

}  // namespace

Fml parse(const std::string& text) { return Parser(text).parse_all(); }

std::string print(const Fml& f) {
  std::ostringstream out;
  print_rec(f, 0, out);
  return out.str();
}

}  // namespace poss
