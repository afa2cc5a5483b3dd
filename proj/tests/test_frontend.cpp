#include "doctest.h"

#include "aspfo/frontend.hpp"
#include "test_util.hpp"

using namespace aspfo;
using namespace aspfo::testutil;

TEST_CASE("program parse/print round trip") {
  std::string text = read_file(data_path("hc3.lp"));
  AspProgram p = parse_program(text, "hc3.lp");
  CHECK(p.rules.size() == 12);
  CHECK(p.vocabulary.contains(pred("in", 2)));
  CHECK(p.vocabulary.contains(func("a", 0)));

  std::string once = print_program(p);
  AspProgram p2 = parse_program(once);
  CHECK(print_program(p2) == once);
  CHECK(p2.rules.size() == p.rules.size());
}

TEST_CASE("program rule shapes") {
  AspProgram p = parse_program(
      "{q(X)} :- r(X).\n"
      ":- q(X), q(Y), X != Y.\n"
      "s :- not q(a).\n"
      "r(a). r(b).\n");
  REQUIRE(p.rules.size() == 5);
  CHECK(p.rules[0].kind == AspRuleKind::Choice);
  CHECK(p.rules[1].kind == AspRuleKind::Constraint);
  CHECK_FALSE(p.rules[1].head.has_value());
  CHECK(p.rules[1].diseqs.size() == 1);
  CHECK(p.rules[2].kind == AspRuleKind::Normal);
  CHECK(p.rules[2].neg_body.size() == 1);
  CHECK(p.rules[3].pos_body.empty());
  CHECK(rule_vars(p.rules[1]) == std::set<std::string>{"X", "Y"});
}

TEST_CASE("uppercase identifiers are variables, lowercase are symbols") {
  AspProgram p = parse_program("p(X) :- q(X, a).\n");
  CHECK(p.vocabulary.contains(pred("q", 2)));
  CHECK(p.rules[0].head->args[0]->is_variable());
  CHECK_FALSE(p.rules[0].pos_body[0].args[1]->is_variable());
}

TEST_CASE("theory parse/print round trip") {
  std::string text =
      "herbrand(a/0, b/0).\n"
      "gmodule {\n  {p(X)} <- q(X).\n}\n"
      "dmodule [defined: r/1, s/0] {\n  r(X) <- p(X) & ~q(X).\n}\n"
      "tmodule { !X: (p(X) => ?Y: q(Y)). }\n";
  AspFoTheory t = parse_theory(text);
  REQUIRE(t.modules.size() == 4);
  CHECK(std::holds_alternative<HerbrandModule>(t.modules[0]));
  CHECK(std::holds_alternative<GModule>(t.modules[1]));
  CHECK(std::get<DModule>(t.modules[2]).defined.size() == 2);
  CHECK(std::holds_alternative<TModule>(t.modules[3]));

  std::string once = print_theory(t);
  CHECK(print_theory(parse_theory(once)) == once);
}

TEST_CASE("empty defined list round trips") {
  AspFoTheory t = parse_theory("dmodule [defined:] {}\n");
  REQUIRE(t.modules.size() == 1);
  const auto& d = std::get<DModule>(t.modules[0]);
  CHECK(d.defined.empty());
  CHECK(d.rules.empty());
  std::string once = print_theory(t);
  CHECK(print_theory(parse_theory(once)) == once);
}

TEST_CASE("formula precedence and printing") {
  CHECK(print_formula(parse_formula("p & q | r")) == "p & q | r");
  CHECK(print_formula(parse_formula("(p | q) & r")) == "(p | q) & r");
  CHECK(print_formula(parse_formula("~p & q")) == "~p & q");
  CHECK(print_formula(parse_formula("~(p & q)")) == "~(p & q)");
  // Implication is right associative and binds loosest.
  auto f = parse_formula("p => q => r");
  CHECK(f->kind == FormulaKind::Implies);
  CHECK(f->rhs->kind == FormulaKind::Implies);
  // Quantifier scope extends as far right as possible.
  auto g = parse_formula("!X: p(X) => q");
  CHECK(g->kind == FormulaKind::Forall);
  CHECK(g->lhs->kind == FormulaKind::Implies);
  CHECK(print_formula(parse_formula(print_formula(g))) == print_formula(g));
  CHECK(parse_formula("true")->kind == FormulaKind::True);
  CHECK(parse_formula("colourOf(X) = colourOf(Y)")->kind == FormulaKind::Equal);
}

TEST_CASE("structure parse and round trip") {
  Vocabulary voc;
  voc.add(pred("node", 1));
  voc.add(pred("colour", 1));
  voc.add(pred("edge", 2));
  voc.add(func("colourOf", 1));
  Structure s = parse_structure(read_file(data_path("col.struct")), voc);
  CHECK(s.domain_size() == 5);
  CHECK(s.holds(pred("edge", 2), {s.element("n1"), s.element("n2")}));
  CHECK_FALSE(s.holds(pred("edge", 2), {s.element("n2"), s.element("n1")}));
  CHECK(s.apply(func("colourOf", 1), {s.element("n2")}) == s.element("c2"));
  std::string once = print_structure(s);
  Structure s2 = parse_structure(once, voc);
  CHECK(s2 == s);
}

TEST_CASE("structure parser rejects partial functions") {
  Vocabulary voc;
  voc.add(func("f", 1));
  CHECK_THROWS_AS(parse_structure("domain: a b\nf = { a -> b }\n", voc),
                  ParseError);
}

TEST_CASE("interpretation parse and placeholder validation") {
  IntendedInterpretation i =
      parse_interpretation(read_file(data_path("col.int")));
  CHECK(i.templates.size() == 4);
  CHECK(i.lookup(pred("edge", 2)) == "there is an edge from #1 to #2");
  CHECK_THROWS(i.lookup(pred("missing", 1)));
  // A placeholder out of range is a parse error.
  CHECK_THROWS_AS(parse_interpretation("pred p/1 = \"#2 is wrong\"\n"),
                  ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_program("p :- q(X,\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
    std::string what = e.what();
    CHECK(what.find("<input>:2:") != std::string::npos);
  }
  try {
    parse_theory("tmodule { p(X). }\n");  // free variable in a T-module
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 1);
  }
}

TEST_CASE("parse_formula tolerates a trailing dot") {
  CHECK(formula_equal(parse_formula("p & q."), parse_formula("p & q")));
}
