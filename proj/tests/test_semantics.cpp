#include "doctest.h"

#include <algorithm>

#include "aspfo/frontend.hpp"
#include "aspfo/semantics.hpp"
#include "test_util.hpp"

using namespace aspfo;
using namespace aspfo::testutil;

namespace {

// dmodule { p(X) <- ~q(X).  q(X) <- !Y: r(Y,X). }
DModule two_level_dmodule() {
  auto r1 = make_define_rule({pred("p", 1), {mk_var("X")}},
                             mk_not(mk_atom(pred("q", 1), {mk_var("X")})));
  auto r2 = make_define_rule(
      {pred("q", 1), {mk_var("X")}},
      mk_forall("Y", mk_atom(pred("r", 2), {mk_var("Y"), mk_var("X")})));
  return make_dmodule({r1, r2});
}

DModule prop_dmodule(std::vector<std::pair<std::string, FormulaPtr>> rules,
                     std::set<std::string> defined) {
  std::vector<DefineRule> rs;
  for (auto& [h, b] : rules) rs.push_back(make_define_rule({pred(h, 0), {}}, b));
  std::set<Symbol> def;
  for (const auto& n : defined) def.insert(pred(n, 0));
  return make_dmodule(def, rs);
}

Structure no_params(const std::vector<std::string>& domain) {
  return Structure(domain, Vocabulary{});
}

}  // namespace

TEST_CASE("sat_gmodule requires every head tuple to be licensed") {
  auto rule = make_choice_rule({pred("in", 2), {mk_var("X"), mk_var("Y")}},
                               mk_atom(pred("edge", 2), {mk_var("X"), mk_var("Y")}));
  GModule g = make_gmodule({rule});
  Vocabulary voc;
  voc.add(pred("in", 2));
  voc.add(pred("edge", 2));
  Structure s({"a", "b"}, voc);
  s.add_pred_tuple(pred("edge", 2), {0, 1});
  CHECK(sat_gmodule(s, g));  // empty in is always fine
  s.add_pred_tuple(pred("in", 2), {0, 1});
  CHECK(sat_gmodule(s, g));
  s.add_pred_tuple(pred("in", 2), {1, 0});  // no edge(b,a)
  CHECK_FALSE(sat_gmodule(s, g));
}

TEST_CASE("gcompl of the edge-licensing module") {
  auto rule = make_choice_rule({pred("in", 2), {mk_var("X"), mk_var("Y")}},
                               mk_atom(pred("edge", 2), {mk_var("X"), mk_var("Y")}));
  GModule g = make_gmodule({rule});
  FormulaPtr c = gcompl(g);
  CHECK(print_formula(c) ==
        "!Y1: !Y2: in(Y1,Y2) => (?X: ?Y: Y1 = X & Y2 = Y & edge(X,Y))");
  // Rule-less G-module completes to a universally false head.
  GModule empty = make_gmodule(pred("h", 1), {});
  CHECK(print_formula(gcompl(empty)) == "!Y1: h(Y1) => false");
}

TEST_CASE("gcompl agrees with G-module satisfaction") {
  Rng rng(11);
  Vocabulary voc;
  voc.add(pred("h", 1));
  voc.add(pred("r", 1));
  voc.add(pred("e", 2));
  for (int i = 0; i < 30; ++i) {
    GModule g = random_gmodule(rng);
    FormulaPtr c = gcompl(g);
    for (int d = 1; d <= 2; ++d) {
      std::vector<std::string> domain;
      for (int k = 0; k < d; ++k) domain.push_back("d" + std::to_string(k));
      all_structures(domain, voc, [&](const Structure& s) {
        REQUIRE(sat_gmodule(s, g) == sat(s, c));
        return true;
      });
    }
  }
}

TEST_CASE("least fixpoint of the two-level definition") {
  DModule d = two_level_dmodule();
  Vocabulary pv;
  pv.add(pred("r", 2));
  Structure params({"d1", "d2"}, pv);
  params.add_pred_tuple(pred("r", 2), {0, 1});
  params.add_pred_tuple(pred("r", 2), {1, 1});

  // The definition is stratified, so any m gives the same closed form:
  // q = {x | !y r(y,x)}, p = complement of q.
  Structure m = all_false_structure({"d1", "d2"}, d.defined);
  auto res = least_fixpoint_chain(d, params, m);
  REQUIRE(res.stable.has_value());
  // Chain is increasing.
  for (size_t i = 0; i + 1 < res.witness_chain.size(); ++i)
    CHECK(le_t(res.witness_chain[i], res.witness_chain[i + 1]));
  CHECK(res.witness_chain.back() == *res.stable);

  CHECK(res.stable->holds(pred("q", 1), {1}));
  CHECK_FALSE(res.stable->holds(pred("q", 1), {0}));
  // With m all-false, ~q(X) reads as true, so p covers everything.
  CHECK(res.stable->pred_table(pred("p", 1)).size() == 2);

  auto stables = stable_models(d, params);
  REQUIRE(stables.size() == 1);
  CHECK(stables[0].holds(pred("p", 1), {0}));
  CHECK_FALSE(stables[0].holds(pred("p", 1), {1}));
  CHECK(stables[0].holds(pred("q", 1), {1}));

  auto wf = well_founded(d, params);
  CHECK(wf.total);
  CHECK(wf.ps.lower() == stables[0]);
}

TEST_CASE("closed form of the two-level definition over all small params") {
  DModule d = two_level_dmodule();
  Vocabulary pv;
  pv.add(pred("r", 2));
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> domain;
    for (int k = 0; k < n; ++k) domain.push_back("d" + std::to_string(k));
    all_structures(domain, pv, [&](const Structure& params) {
      auto stables = stable_models(d, params);
      REQUIRE(stables.size() == 1);
      const Structure& m = stables[0];
      for (Elem x = 0; x < Elem(n); ++x) {
        bool q = true;
        for (Elem y = 0; y < Elem(n); ++y)
          q = q && params.holds(pred("r", 2), {y, x});
        REQUIRE(m.holds(pred("q", 1), {x}) == q);
        REQUIRE(m.holds(pred("p", 1), {x}) == !q);
      }
      auto wf = well_founded(d, params);
      REQUIRE(wf.total);
      REQUIRE(wf.ps.lower() == m);
      return true;
    });
  }
}

TEST_CASE("stable and well-founded models of three propositional modules") {
  auto p = mk_atom(pred("p", 0));

  // p <- true: unique stable model {p}, total.
  DModule d1 = prop_dmodule({{"p", mk_true()}}, {"p"});
  auto s1 = stable_models(d1, no_params({"o"}));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].holds(pred("p", 0), {}));
  CHECK(well_founded(d1, no_params({"o"})).total);

  // p <- p | ~p: no stable model, not total.
  DModule d2 = prop_dmodule({{"p", mk_or(p, mk_not(p))}}, {"p"});
  CHECK(stable_models(d2, no_params({"o"})).empty());
  auto wf2 = well_founded(d2, no_params({"o"}));
  CHECK_FALSE(wf2.total);
  CHECK(wf2.ps.atom_value(pred("p", 0), {}) == TruthValue3::Unknown);

  // f <- ~f & b.  a <- ~b.  b <- ~a: unique stable model {a}, not total.
  auto a = mk_atom(pred("a", 0));
  auto b = mk_atom(pred("b", 0));
  DModule d3 = prop_dmodule({{"f", mk_and(mk_not(mk_atom(pred("f", 0))), b)},
                             {"a", mk_not(b)},
                             {"b", mk_not(a)}},
                            {"f", "a", "b"});
  auto s3 = stable_models(d3, no_params({"o"}));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].holds(pred("a", 0), {}));
  CHECK_FALSE(s3[0].holds(pred("b", 0), {}));
  CHECK_FALSE(s3[0].holds(pred("f", 0), {}));
  CHECK_FALSE(well_founded(d3, no_params({"o"})).total);
}

TEST_CASE("a total well-founded model is the unique stable model") {
  Rng rng(23);
  Vocabulary pv;
  pv.add(pred("r", 1));
  pv.add(pred("e", 2));
  int totals = 0;
  for (int i = 0; i < 60; ++i) {
    DModule d = random_dmodule(rng);
    Structure params = random_structure(rng, {"d0", "d1"}, pv);
    auto wf = well_founded(d, params);
    auto stables = stable_models(d, params);
    if (wf.total) {
      ++totals;
      REQUIRE(stables.size() == 1);
      REQUIRE(stables[0] == wf.ps.lower());
    } else {
      // Every stable model sits between the well-founded bounds.
      for (const auto& m : stables) {
        REQUIRE(le_t(wf.ps.lower(), m));
        REQUIRE(le_t(m, wf.ps.upper()));
      }
    }
  }
  CHECK(totals > 0);  // the property was exercised
}

TEST_CASE("sat_module and sat_theory") {
  DModule d = two_level_dmodule();
  Vocabulary voc;
  voc.add(pred("p", 1));
  voc.add(pred("q", 1));
  voc.add(pred("r", 2));
  Structure s({"d1", "d2"}, voc);
  s.add_pred_tuple(pred("r", 2), {0, 1});
  s.add_pred_tuple(pred("r", 2), {1, 1});
  s.add_pred_tuple(pred("q", 1), {1});
  s.add_pred_tuple(pred("p", 1), {0});
  CHECK(sat_module(s, Module{d}));
  s.add_pred_tuple(pred("p", 1), {1});  // p must be exactly the complement of q
  CHECK_FALSE(sat_module(s, Module{d}));

  AspFoTheory t;
  t.modules.push_back(d);
  t.modules.push_back(make_tmodule(
      mk_exists("X", mk_atom(pred("p", 1), {mk_var("X")}))));
  Structure ok({"d1", "d2"}, voc);
  ok.add_pred_tuple(pred("r", 2), {0, 1});
  ok.add_pred_tuple(pred("r", 2), {1, 1});
  ok.add_pred_tuple(pred("q", 1), {1});
  ok.add_pred_tuple(pred("p", 1), {0});
  CHECK(sat_theory(ok, t));
}

TEST_CASE("herbrand module satisfaction forces distinct constants") {
  HerbrandModule h{{func("a", 0), func("b", 0)}};
  Vocabulary voc;
  voc.add(func("a", 0));
  voc.add(func("b", 0));
  Structure two({"x", "y"}, voc);
  two.set_func_table(func("a", 0), {{{}, 0}});
  two.set_func_table(func("b", 0), {{{}, 1}});
  CHECK(sat_module(two, Module{h}));
  Structure collapsed({"x", "y"}, voc);
  collapsed.set_func_table(func("a", 0), {{{}, 0}});
  collapsed.set_func_table(func("b", 0), {{{}, 0}});
  CHECK_FALSE(sat_module(collapsed, Module{h}));
  // Wrong domain size also fails.
  Structure one({"x"}, voc);
  one.set_func_table(func("a", 0), {{{}, 0}});
  one.set_func_table(func("b", 0), {{{}, 0}});
  CHECK_FALSE(sat_module(one, Module{h}));
}

TEST_CASE("conflicting herbrand modules are rejected") {
  AspFoTheory t;
  t.modules.push_back(HerbrandModule{{func("a", 0)}});
  t.modules.push_back(HerbrandModule{{func("a", 0), func("b", 0)}});
  Vocabulary voc = t.vocabulary();
  Structure s({"a", "b"}, voc);
  s.set_func_table(func("a", 0), {{{}, 0}});
  s.set_func_table(func("b", 0), {{{}, 1}});
  CHECK_THROWS_AS(sat_theory(s, t), std::invalid_argument);
}

TEST_CASE("model enumeration matches brute-force satisfaction") {
  // A theory exercising all module kinds.
  AspFoTheory t = parse_theory(
      "herbrand(a/0, b/0).\n"
      "gmodule { {s(X)} <- p(X). }\n"
      "dmodule { q(X) <- ~s(X). }\n"
      "tmodule { ?X: p(X). }\n");
  std::vector<Structure> pipeline;
  models_herbrand(t, [&](const Structure& s) {
    pipeline.push_back(s);
    return true;
  });
  std::vector<Structure> brute;
  herbrand_structures(t.vocabulary(), [&](const Structure& s) {
    if (sat_theory(s, t)) brute.push_back(s);
    return true;
  });
  CHECK(pipeline.size() == brute.size());
  for (const auto& m : pipeline)
    CHECK(std::count(brute.begin(), brute.end(), m) == 1);
}

TEST_CASE("enumeration falls back when a predicate has two definitions") {
  auto mk_prop_rule = [](const char* h, FormulaPtr b) {
    return make_define_rule({pred(h, 0), {}}, std::move(b));
  };
  AspFoTheory t;
  t.modules.push_back(make_dmodule({mk_prop_rule("p", mk_true())}));
  t.modules.push_back(make_dmodule({mk_prop_rule("p", mk_atom(pred("r", 0)))}));
  Vocabulary voc = t.vocabulary();
  Structure carrier({"o"}, Vocabulary{});
  std::vector<Structure> got;
  models_over_carrier(t, carrier, [&](const Structure& s) {
    got.push_back(s);
    return true;
  });
  std::vector<Structure> brute;
  all_structures({"o"}, voc, [&](const Structure& s) {
    if (sat_theory(s, t)) brute.push_back(s);
    return true;
  });
  CHECK(got.size() == brute.size());
  // Both definitions must agree: p iff true and p iff r, so r must hold.
  for (const auto& m : got) {
    CHECK(m.holds(pred("p", 0), {}));
    CHECK(m.holds(pred("r", 0), {}));
  }
}

TEST_CASE("herbrand emulation characterizes herbrand-like structures") {
  HerbrandModule h{{func("a", 0), func("b", 0)}};
  HerbrandEmulation em = herbrand_emulation(h);
  CHECK(em.universe_pred.arity == 1);
  CHECK(em.dmodule.defined == std::set<Symbol>{em.universe_pred});
  REQUIRE(em.una.size() == 1);

  Vocabulary voc;
  voc.add(func("a", 0));
  voc.add(func("b", 0));
  voc.add(em.universe_pred);
  auto satisfies_emulation = [&](const Structure& s) {
    if (!sat_module(s, Module{em.dmodule})) return false;
    if (!sat_module(s, Module{em.tmodule})) return false;
    for (const auto& f : em.una)
      if (!sat(s, f)) return false;
    return true;
  };
  size_t good = 0, total = 0;
  all_structures({"x", "y"}, voc, [&](const Structure& s) {
    ++total;
    if (satisfies_emulation(s)) {
      ++good;
      // Constants are distinct and the universe predicate is the closure.
      CHECK(s.apply(func("a", 0), {}) != s.apply(func("b", 0), {}));
      CHECK(s.pred_table(em.universe_pred).size() == 2);
    }
    return true;
  });
  CHECK(total == 16);  // 2 maps for a, 2 for b, 4 tables for u
  CHECK(good == 2);    // a,b distinct (2 ways), u forced
}

TEST_CASE("predicate_vocabulary and all_false_structure helpers") {
  auto v = predicate_vocabulary({pred("p", 1), pred("q", 0)});
  CHECK(v.predicates().size() == 2);
  auto s = all_false_structure({"a", "b"}, {pred("p", 1)});
  CHECK(s.pred_table(pred("p", 1)).empty());
}
