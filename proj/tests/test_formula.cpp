#include <doctest.h>

#include "poss/battery.hpp"
#include "poss/formula.hpp"

using namespace poss;

TEST_CASE("parse builds the stated trees") {
  CHECK(equal(parse("[a]p1 -> <a>p1"), imp(box("a", var("p1")), dia("a", var("p1")))));
  CHECK(equal(parse("~(p1 & ~p1)"), neg(land(var("p1"), neg(var("p1"))))));
  // (p1 | p2) expands to the defining negation pattern
  CHECK(equal(parse("(p1 | p2)"),
              neg(land(neg(var("p1")), neg(var("p2"))))));
  CHECK(equal(parse("#f"), land(var(kReservedVar), neg(var(kReservedVar)))));
  CHECK(equal(parse("#t"), neg(land(var(kReservedVar), neg(var(kReservedVar))))));
  CHECK(equal(parse("p1 <-> p2"),
              land(imp(var("p1"), var("p2")), imp(var("p2"), var("p1")))));
}

TEST_CASE("precedence and associativity") {
  CHECK(equal(parse("~p1 & p2"), land(neg(var("p1")), var("p2"))));
  CHECK(equal(parse("p1 & p2 | p3"), lor(land(var("p1"), var("p2")), var("p3"))));
  CHECK(equal(parse("p1 | p2 -> p3"), imp(lor(var("p1"), var("p2")), var("p3"))));
  CHECK(equal(parse("p1 -> p2 -> p3"), imp(var("p1"), imp(var("p2"), var("p3")))));
  CHECK(equal(parse("[a][b]p1"), box("a", box("b", var("p1")))));
  CHECK(equal(parse("<a>~p1"), dia("a", neg(var("p1")))));
}

TEST_CASE("parse errors carry offsets") {
  CHECK_THROWS_AS(parse("p1 &"), parse_error);
  CHECK_THROWS_AS(parse("(p1"), parse_error);
  CHECK_THROWS_AS(parse("[a p1"), parse_error);
  try {
    parse("p1 & & p2");
  } catch (const parse_error& e) {
    CHECK(e.offset == 5);
    CHECK(!e.expected.empty());
  }
}

TEST_CASE("print and parse round trip") {
  const char* samples[] = {
      "p1",         "~p1",           "p1 & p2",         "p1 | p2",
      "p1 -> p2",   "p1 <-> p2",     "[a]p1 -> <a>p1",  "#t",
      "#f",         "~(p1 & ~p2)",   "<a>(p1 | ~p2) & [b]p1",
      "p1 & p2 & p3", "p1 -> (p2 -> p3)", "(p1 -> p2) -> p3",
  };
  for (const char* s : samples) {
    Fml f = parse(s);
    // parse . print is the identity on trees
    CHECK(equal(parse(print(f)), f));
    // print . parse is idempotent on text
    CHECK(print(parse(print(f))) == print(f));
  }
  for (const std::string& s : formula_battery_text()) {
    Fml f = parse(s);
    CHECK(equal(parse(print(f)), f));
  }
}

TEST_CASE("substitute") {
  CHECK(equal(substitute(box("a", var("p1")), {{"p1", land(var("p1"), var("p2"))}}),
              box("a", land(var("p1"), var("p2")))));
  CHECK(equal(substitute(var("p1"), {}), var("p1")));
  CHECK(equal(substitute(imp(var("p1"), var("p1")), {{"p1", bot()}}),
              imp(bot(), bot())));
  // simultaneous, not sequential
  CHECK(equal(substitute(land(var("p1"), var("p2")),
                         {{"p1", var("p2")}, {"p2", var("p1")}}),
              land(var("p2"), var("p1"))));
  // distributes over the connectives
  Fml a = parse("[a]p1 -> ~p2");
  std::map<std::string, Fml> s = {{"p1", parse("p2 | p3")}, {"p2", parse("~p1")}};
  CHECK(equal(substitute(a, s),
              imp(box("a", substitute(parse("p1"), s)),
                  neg(substitute(parse("p2"), s)))));
}

TEST_CASE("negative translation") {
  CHECK(equal(negative_translation(var("p1")), neg(neg(var("p1")))));
  CHECK(equal(negative_translation(box("a", var("p1"))),
              neg(neg(box("a", neg(neg(var("p1"))))))));
  CHECK(equal(negative_translation(land(var("p1"), var("p2"))),
              land(neg(neg(var("p1"))), neg(neg(var("p2"))))));
  CHECK(equal(negative_translation(neg(var("p1"))), neg(neg(neg(var("p1"))))));
  CHECK(equal(negative_translation(imp(var("p1"), var("p2"))),
              imp(neg(neg(var("p1"))), neg(neg(var("p2"))))));
}

TEST_CASE("variables and indices") {
  CHECK(variables(imp(var("p2"), var("p1"))) == std::vector<std::string>{"p1", "p2"});
  CHECK(indices(box("a", dia("b", var("p1")))) == std::vector<std::string>{"a", "b"});
  CHECK(variables(top()) == std::vector<std::string>{kReservedVar});
  CHECK(indices(var("p1")).empty());
}
