#include "doctest.h"

#include "aspfo/syntax.hpp"
#include "test_util.hpp"

using namespace aspfo;
using namespace aspfo::testutil;

TEST_CASE("vocabulary rejects clashes") {
  Vocabulary v;
  v.add(pred("p", 1));
  v.add(func("f", 2));
  CHECK(v.contains(pred("p", 1)));
  CHECK_FALSE(v.contains(pred("p", 2)));
  CHECK_THROWS_AS(v.add(pred("p", 2)), std::invalid_argument);   // arity clash
  CHECK_THROWS_AS(v.add(func("p", 1)), std::invalid_argument);   // kind clash
  CHECK_NOTHROW(v.add(pred("p", 1)));                            // idempotent
  CHECK(v.find("f").has_value());
  CHECK(v.find("f")->arity == 2);
  CHECK_FALSE(v.find("missing").has_value());
}

TEST_CASE("vocabulary merge and subset") {
  Vocabulary a, b;
  a.add(pred("p", 1));
  b.add(pred("q", 0));
  b.add(pred("p", 1));
  CHECK(a.subset_of(b));
  CHECK_FALSE(b.subset_of(a));
  Vocabulary m = Vocabulary::merged(a, b);
  CHECK(m.symbols().size() == 2);
  CHECK(m.predicates().size() == 2);
  CHECK(m.functions().empty());
}

TEST_CASE("term helpers") {
  auto x = mk_var("X");
  auto a = mk_const("a");
  auto fa = mk_app(func("f", 1), {a});
  auto fx = mk_app(func("f", 1), {x});
  CHECK(x->is_variable());
  CHECK_FALSE(a->is_variable());
  CHECK(term_equal(fa, mk_app(func("f", 1), {mk_const("a")})));
  CHECK_FALSE(term_equal(fa, fx));
  CHECK(term_is_ground(fa));
  CHECK_FALSE(term_is_ground(fx));
  CHECK(term_depth(a) == 1);
  CHECK(term_depth(fa) == 2);
  std::set<std::string> vars;
  collect_term_vars(fx, vars);
  CHECK(vars == std::set<std::string>{"X"});
  std::set<Symbol> syms;
  collect_term_symbols(fa, syms);
  CHECK(syms.size() == 2);  // f/1 and a/0
}

TEST_CASE("free variables and sentences") {
  auto x = mk_var("X");
  auto y = mk_var("Y");
  auto f = mk_forall("X", mk_and(mk_atom(pred("p", 1), {x}),
                                 mk_atom(pred("q", 1), {y})));
  CHECK(free_vars(f) == std::set<std::string>{"Y"});
  CHECK_FALSE(is_sentence(f));
  CHECK(is_sentence(mk_exists("Y", f)));
}

TEST_CASE("empty conjunction and disjunction are the units") {
  CHECK(mk_conj({})->kind == FormulaKind::True);
  CHECK(mk_disj({})->kind == FormulaKind::False);
  auto p = mk_atom(pred("p", 0));
  CHECK(formula_equal(mk_conj({p}), p));
  CHECK(mk_conj({p, p})->kind == FormulaKind::And);
}

TEST_CASE("polar predicates") {
  auto p = mk_atom(pred("p", 0));
  auto q = mk_atom(pred("q", 0));
  std::set<Symbol> pos, neg;
  polar_predicates(mk_implies(p, q), true, pos, neg);
  CHECK(pos == std::set<Symbol>{pred("q", 0)});
  CHECK(neg == std::set<Symbol>{pred("p", 0)});

  pos.clear();
  neg.clear();
  polar_predicates(mk_iff(p, q), true, pos, neg);
  CHECK(pos.size() == 2);
  CHECK(neg.size() == 2);

  pos.clear();
  neg.clear();
  polar_predicates(mk_not(mk_not(p)), true, pos, neg);
  CHECK(pos == std::set<Symbol>{pred("p", 0)});
  CHECK(neg.empty());
}

TEST_CASE("rule constructors close over free variables in sorted order") {
  auto r = make_define_rule(
      {pred("t", 2), {mk_var("X"), mk_var("Z")}},
      mk_and(mk_atom(pred("t", 2), {mk_var("X"), mk_var("Y")}),
             mk_atom(pred("in", 2), {mk_var("Y"), mk_var("Z")})));
  CHECK(r.universals == std::vector<std::string>{"X", "Y", "Z"});

  auto c = make_choice_rule({pred("in", 2), {mk_var("X"), mk_var("Y")}},
                            mk_atom(pred("edge", 2), {mk_var("X"), mk_var("Y")}));
  CHECK(c.universals == std::vector<std::string>{"X", "Y"});
}

TEST_CASE("make_gmodule validates its rules") {
  auto ok = make_choice_rule({pred("in", 2), {mk_var("X"), mk_var("Y")}},
                             mk_atom(pred("edge", 2), {mk_var("X"), mk_var("Y")}));
  GModule g = make_gmodule({ok});
  CHECK(g.head_predicate == pred("in", 2));
  CHECK(g.rules.size() == 1);

  // Mixed head predicates.
  auto other = make_choice_rule({pred("out", 1), {mk_var("X")}}, mk_true());
  CHECK_THROWS_AS(make_gmodule({ok, other}), std::invalid_argument);

  // Head predicate used in a body.
  auto cyclic = make_choice_rule({pred("in", 2), {mk_var("X"), mk_var("Y")}},
                                 mk_atom(pred("in", 2), {mk_var("Y"), mk_var("X")}));
  CHECK_THROWS_AS(make_gmodule({cyclic}), std::invalid_argument);
}

TEST_CASE("make_dmodule defaults defined to the head predicates") {
  auto r = make_define_rule({pred("p", 1), {mk_var("X")}},
                            mk_atom(pred("r", 1), {mk_var("X")}));
  DModule d = make_dmodule({r});
  CHECK(d.defined == std::set<Symbol>{pred("p", 1)});
  // Declared defined set may strictly contain the heads...
  DModule d2 = make_dmodule({pred("p", 1), pred("s", 0)}, {r});
  CHECK(d2.defined.size() == 2);
  // ...but must contain them.
  CHECK_THROWS_AS(make_dmodule({pred("s", 0)}, {r}), std::invalid_argument);
}

TEST_CASE("make_tmodule requires a sentence") {
  CHECK_NOTHROW(make_tmodule(mk_forall("X", mk_atom(pred("p", 1), {mk_var("X")}))));
  CHECK_THROWS_AS(make_tmodule(mk_atom(pred("p", 1), {mk_var("X")})),
                  std::invalid_argument);
}

TEST_CASE("hd and pars") {
  auto r1 = make_define_rule({pred("p", 1), {mk_var("X")}},
                             mk_not(mk_atom(pred("q", 1), {mk_var("X")})));
  auto r2 = make_define_rule(
      {pred("q", 1), {mk_var("X")}},
      mk_forall("Y", mk_atom(pred("r", 2), {mk_var("Y"), mk_var("X")})));
  CHECK(hd(std::vector<DefineRule>{r1, r2}) ==
        std::set<Symbol>{pred("p", 1), pred("q", 1)});
  DModule d = make_dmodule({r1, r2});
  CHECK(pars(d) == std::set<Symbol>{pred("r", 2)});
}

TEST_CASE("module vocabulary and theory vocabulary") {
  auto r = make_define_rule({pred("p", 1), {mk_var("X")}},
                            mk_atom(pred("r", 1), {mk_var("X")}));
  AspFoTheory t;
  t.modules.push_back(make_dmodule({r}));
  t.modules.push_back(make_tmodule(
      mk_forall("X", mk_atom(pred("s", 1), {mk_var("X")}))));
  t.modules.push_back(HerbrandModule{{func("a", 0), func("b", 0)}});
  Vocabulary v = t.vocabulary();
  CHECK(v.contains(pred("p", 1)));
  CHECK(v.contains(pred("r", 1)));
  CHECK(v.contains(pred("s", 1)));
  CHECK(v.contains(func("a", 0)));
  CHECK(v.contains(func("b", 0)));
}

TEST_CASE("shared specified predicates are reported") {
  auto r = make_define_rule({pred("p", 0), {}}, mk_true());
  auto c = make_choice_rule({pred("p", 0), {}}, mk_true());
  AspFoTheory t;
  t.modules.push_back(make_dmodule({r}));
  t.modules.push_back(make_gmodule({c}));
  CHECK(t.shared_specified_predicates() == std::vector<Symbol>{pred("p", 0)});
  AspFoTheory solo;
  solo.modules.push_back(make_dmodule({r}));
  CHECK(solo.shared_specified_predicates().empty());
}
