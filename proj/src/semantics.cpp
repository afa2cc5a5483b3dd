#include "aspfo/semantics.hpp"

#include <algorithm>

namespace aspfo {

bool sat_tmodule(const Structure& s, const TModule& t) {
  return sat(s, t.sentence);
}

bool sat_gmodule(const Structure& s, const GModule& g) {
  const Symbol& p = g.head_predicate;
  for (const Tuple& tuple : s.pred_table(p)) {
    bool licensed = false;
    for (const auto& r : g.rules) {
      for (const Tuple& asg :
           all_tuples(s.domain_size(), static_cast<int>(r.universals.size()))) {
        Environment env;
        for (size_t i = 0; i < r.universals.size(); ++i)
          env.bindings[r.universals[i]] = asg[i];
        Tuple head;
        for (const auto& t : r.head.args) head.push_back(eval_term(t, s, env));
        if (head == tuple && sat(s, r.body, env)) {
          licensed = true;
          break;
        }
      }
      if (licensed) break;
    }
    if (!licensed) return false;
  }
  return true;
}

FormulaPtr gcompl(const GModule& g) {
  int n = g.head_predicate.arity;
  std::set<std::string> used;
  for (const auto& r : g.rules)
    used.insert(r.universals.begin(), r.universals.end());
  std::vector<std::string> ys;
  for (int i = 1; static_cast<int>(ys.size()) < n; ++i) {
    std::string y = "Y" + std::to_string(i);
    if (!used.count(y)) ys.push_back(y);
  }
  std::vector<FormulaPtr> disjuncts;
  for (const auto& r : g.rules) {
    std::vector<FormulaPtr> conj;
    for (int i = 0; i < n; ++i)
      conj.push_back(mk_equal(mk_var(ys[i]), r.head.args[i]));
    conj.push_back(r.body);
    FormulaPtr body = mk_conj(conj);
    for (auto it = r.universals.rbegin(); it != r.universals.rend(); ++it)
      body = mk_exists(*it, body);
    disjuncts.push_back(body);
  }
  std::vector<TermPtr> yargs;
  for (const auto& y : ys) yargs.push_back(mk_var(y));
  FormulaPtr f =
      mk_implies(mk_atom(g.head_predicate, yargs), mk_disj(disjuncts));
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) f = mk_forall(*it, f);
  return f;
}

Vocabulary predicate_vocabulary(const std::set<Symbol>& preds) {
  Vocabulary v;
  for (const auto& p : preds) v.add(p);
  return v;
}

Structure all_false_structure(const std::vector<std::string>& domain,
                              const std::set<Symbol>& preds) {
  return Structure(domain, predicate_vocabulary(preds));
}

StableResult least_fixpoint_chain(const DModule& d, const Structure& params,
                                  const Structure& m) {
  if (params.domain() != m.domain())
    throw std::invalid_argument("least_fixpoint requires a shared domain");
  Structure a = all_false_structure(params.domain(), d.defined);
  Structure ref = compose(params, m);
  StableResult result;
  result.witness_chain.push_back(a);
  bool changed = true;
  while (changed) {
    changed = false;
    Structure cur = compose(params, a);
    for (const auto& r : d.rules) {
      for (const Tuple& asg : all_tuples(
               params.domain_size(), static_cast<int>(r.universals.size()))) {
        Environment env;
        for (size_t i = 0; i < r.universals.size(); ++i)
          env.bindings[r.universals[i]] = asg[i];
        if (!pair_sat(cur, ref, r.body, env)) continue;
        Tuple head;
        for (const auto& t : r.head.args)
          head.push_back(eval_term(t, cur, env));
        if (!a.holds(r.head.pred, head)) {
          a.add_pred_tuple(r.head.pred, head);
          changed = true;
        }
      }
    }
    if (changed) result.witness_chain.push_back(a);
  }
  result.stable = a;
  return result;
}

Structure least_fixpoint(const DModule& d, const Structure& params,
                         const Structure& m) {
  return *least_fixpoint_chain(d, params, m).stable;
}

std::vector<Structure> stable_models(const DModule& d, const Structure& params,
                                     uint64_t cap) {
  std::vector<Structure> out;
  all_structures(params.domain(), predicate_vocabulary(d.defined),
                 [&](const Structure& m) {
                   if (least_fixpoint(d, params, m) == m) out.push_back(m);
                   return true;
                 },
                 cap);
  return out;
}

WellFoundedResult well_founded(const DModule& d, const Structure& params) {
  auto gamma = [&](const Structure& m) { return least_fixpoint(d, params, m); };
  Structure lower = all_false_structure(params.domain(), d.defined);
  while (true) {
    Structure next = gamma(gamma(lower));
    if (next == lower) break;
    lower = std::move(next);
  }
  Structure upper = gamma(lower);
  bool total = lower == upper;
  return WellFoundedResult{PartialStructure(std::move(lower), std::move(upper)),
                           total};
}

namespace {

bool sat_herbrand(const Structure& s, const HerbrandModule& h) {
  std::vector<Symbol> consts;
  for (const auto& f : h.functions) {
    if (f.arity > 0) return false;  // finite structure, infinite universe
    consts.push_back(f);
  }
  if (s.domain_size() != consts.size()) return false;
  std::set<Elem> seen;
  for (const auto& c : consts) seen.insert(s.apply(c, {}));
  return seen.size() == consts.size();
}

}  // namespace

bool sat_module(const Structure& s, const Module& m) {
  if (const auto* t = std::get_if<TModule>(&m)) return sat_tmodule(s, *t);
  if (const auto* g = std::get_if<GModule>(&m)) return sat_gmodule(s, *g);
  if (const auto* h = std::get_if<HerbrandModule>(&m))
    return sat_herbrand(s, *h);
  const auto& d = std::get<DModule>(m);
  Vocabulary parvoc;
  for (const auto& sym : pars(d)) parvoc.add(sym);
  Structure params = project(s, parvoc);
  Structure model = project(s, predicate_vocabulary(d.defined));
  return least_fixpoint(d, params, model) == model;
}

bool sat_theory(const Structure& s, const AspFoTheory& t) {
  const HerbrandModule* prev = nullptr;
  for (const auto& m : t.modules) {
    if (const auto* h = std::get_if<HerbrandModule>(&m)) {
      if (prev && prev->functions != h->functions)
        throw std::invalid_argument("conflicting herbrand modules");
      prev = h;
    }
  }
  for (const auto& m : t.modules)
    if (!sat_module(s, m)) return false;
  return true;
}

namespace {

// D-modules can be pipelined when each predicate is defined by at most one
// module and the parameter dependencies between modules are acyclic: the
// open (non-defined) predicates are enumerated, then each module's stable
// expansions are computed in topological order. Falls back to brute-force
// expansion otherwise.
struct DPipeline {
  std::vector<const DModule*> order;
  // checks[k]: non-D modules whose vocabulary is fully interpreted once the
  // first k pipelined modules are computed; checked as early as possible.
  std::vector<std::vector<const Module*>> checks;
  bool usable = false;
};

// Rough work estimate used to schedule cheap modules (facts) before
// expensive ones (recursive definitions), so early checks prune more.
size_t dmodule_cost(const DModule& d) {
  size_t c = 0;
  for (const auto& r : d.rules) c += r.universals.size();
  return c;
}

DPipeline plan_pipeline(const AspFoTheory& t, const std::set<Symbol>& base) {
  DPipeline out;
  std::vector<const DModule*> dmods;
  std::map<Symbol, size_t> owner;
  for (const auto& m : t.modules)
    if (const auto* d = std::get_if<DModule>(&m)) {
      for (const auto& p : d->defined)
        if (!owner.emplace(p, dmods.size()).second) return out;
      dmods.push_back(d);
    }
  // Edges: module depends on the module defining one of its parameters.
  std::vector<std::set<size_t>> deps(dmods.size());
  for (size_t i = 0; i < dmods.size(); ++i)
    for (const auto& p : pars(*dmods[i])) {
      auto it = owner.find(p);
      if (it != owner.end() && it->second != i) deps[i].insert(it->second);
    }
  std::vector<bool> done(dmods.size(), false);
  while (out.order.size() < dmods.size()) {
    size_t best = dmods.size();
    for (size_t i = 0; i < dmods.size(); ++i) {
      if (done[i]) continue;
      bool ready = true;
      for (size_t j : deps[i])
        if (!done[j]) {
          ready = false;
          break;
        }
      if (ready &&
          (best == dmods.size() ||
           dmodule_cost(*dmods[i]) < dmodule_cost(*dmods[best])))
        best = i;
    }
    if (best == dmods.size()) return out;  // cyclic parameter dependency
    out.order.push_back(dmods[best]);
    done[best] = true;
  }

  // Stage each remaining module at the first point its symbols exist.
  out.checks.assign(out.order.size() + 1, {});
  std::vector<std::set<Symbol>> avail(out.order.size() + 1);
  avail[0] = base;
  for (size_t k = 0; k < out.order.size(); ++k) {
    avail[k + 1] = avail[k];
    avail[k + 1].insert(out.order[k]->defined.begin(),
                        out.order[k]->defined.end());
  }
  for (const auto& m : t.modules) {
    if (std::holds_alternative<DModule>(m)) continue;
    std::set<Symbol> need = module_vocabulary(m).symbols();
    size_t stage = out.order.size();
    for (size_t k = 0; k <= out.order.size(); ++k) {
      if (std::includes(avail[k].begin(), avail[k].end(), need.begin(),
                        need.end())) {
        stage = k;
        break;
      }
    }
    out.checks[stage].push_back(&m);
  }
  out.usable = true;
  return out;
}

// Extends s by stable expansions of the pipelined D-modules, checking the
// remaining modules as soon as their symbols are interpreted.
bool extend_and_check(const DPipeline& pipe, size_t k, const Structure& s,
                      const StructureSink& sink, uint64_t cap) {
  for (const Module* m : pipe.checks[k])
    if (!sat_module(s, *m)) return true;
  if (k == pipe.order.size()) return sink(s);
  const DModule& d = *pipe.order[k];
  Vocabulary parvoc;
  for (const auto& sym : pars(d)) parvoc.add(sym);
  Structure params = project(s, parvoc);
  WellFoundedResult wf = well_founded(d, params);
  if (wf.total) {
    // A total well-founded model is the unique stable model.
    return extend_and_check(pipe, k + 1, compose(s, wf.ps.lower()), sink, cap);
  }
  for (const auto& m : stable_models(d, params, cap))
    if (!extend_and_check(pipe, k + 1, compose(s, m), sink, cap))
      return false;
  return true;
}

}  // namespace

void models_over_carrier(const AspFoTheory& t, const Structure& carrier,
                         const StructureSink& sink, uint64_t cap) {
  Vocabulary voc = t.vocabulary();
  for (const auto& f : voc.functions())
    if (!carrier.vocabulary().contains(f))
      throw std::invalid_argument("carrier does not interpret " + to_string(f));
  const HerbrandModule* prev = nullptr;
  for (const auto& m : t.modules)
    if (const auto* h = std::get_if<HerbrandModule>(&m)) {
      if (prev && prev->functions != h->functions)
        throw std::invalid_argument("conflicting herbrand modules");
      prev = h;
    }

  std::set<Symbol> defined;
  for (const auto& m : t.modules)
    if (const auto* d = std::get_if<DModule>(&m))
      defined.insert(d->defined.begin(), d->defined.end());

  std::set<Symbol> base;
  Vocabulary open;
  for (const auto& sym : carrier.vocabulary().symbols()) base.insert(sym);
  for (const auto& p : voc.predicates())
    if (!carrier.vocabulary().contains(p) && !defined.count(p)) {
      open.add(p);
      base.insert(p);
    }

  DPipeline pipe = plan_pipeline(t, base);
  if (!pipe.usable) {
    Vocabulary all_preds;
    for (const auto& p : voc.predicates())
      if (!carrier.vocabulary().contains(p)) all_preds.add(p);
    expansions(carrier, all_preds, [&](const Structure& s) {
      if (!sat_theory(s, t)) return true;
      return sink(s);
    }, cap);
    return;
  }
  expansions(carrier, open, [&](const Structure& s) {
    return extend_and_check(pipe, 0, s, sink, cap);
  }, cap);
}

void models_herbrand(const AspFoTheory& t, const StructureSink& sink,
                     uint64_t cap) {
  models_over_carrier(t, herbrand_carrier(t.vocabulary()), sink, cap);
}

HerbrandEmulation herbrand_emulation(const HerbrandModule& h) {
  std::string uname = "u";
  auto clashes = [&](const std::string& n) {
    for (const auto& f : h.functions)
      if (f.name == n) return true;
    return false;
  };
  while (clashes(uname)) uname += "_";
  Symbol u{uname, 1, SymbolKind::Predicate};

  HerbrandEmulation out;
  out.universe_pred = u;
  std::vector<DefineRule> rules;
  for (const auto& f : h.functions) {
    std::vector<TermPtr> xs;
    std::vector<FormulaPtr> body;
    for (int i = 1; i <= f.arity; ++i) {
      TermPtr x = mk_var("X" + std::to_string(i));
      xs.push_back(x);
      body.push_back(mk_atom(u, {x}));
    }
    rules.push_back(
        make_define_rule(AtomRef{u, {mk_app(f, xs)}}, mk_conj(body)));
  }
  out.dmodule = make_dmodule({u}, std::move(rules));
  out.tmodule = make_tmodule(mk_forall("X", mk_atom(u, {mk_var("X")})));

  std::vector<Symbol> fs(h.functions.begin(), h.functions.end());
  for (size_t i = 0; i < fs.size(); ++i) {
    for (size_t j = i + 1; j < fs.size(); ++j) {
      // distinct symbols never build equal terms
      std::vector<TermPtr> xs, ys;
      std::vector<std::string> vars;
      for (int k = 1; k <= fs[i].arity; ++k) {
        xs.push_back(mk_var("X" + std::to_string(k)));
        vars.push_back("X" + std::to_string(k));
      }
      for (int k = 1; k <= fs[j].arity; ++k) {
        ys.push_back(mk_var("Y" + std::to_string(k)));
        vars.push_back("Y" + std::to_string(k));
      }
      FormulaPtr f =
          mk_not(mk_equal(mk_app(fs[i], xs), mk_app(fs[j], ys)));
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        f = mk_forall(*it, f);
      out.una.push_back(f);
    }
    if (fs[i].arity > 0) {
      // injectivity
      std::vector<TermPtr> xs, ys;
      std::vector<std::string> vars;
      std::vector<FormulaPtr> eqs;
      for (int k = 1; k <= fs[i].arity; ++k) {
        xs.push_back(mk_var("X" + std::to_string(k)));
        ys.push_back(mk_var("Y" + std::to_string(k)));
        vars.push_back("X" + std::to_string(k));
        vars.push_back("Y" + std::to_string(k));
        eqs.push_back(mk_equal(xs.back(), ys.back()));
      }
      FormulaPtr f = mk_implies(
          mk_equal(mk_app(fs[i], xs), mk_app(fs[i], ys)), mk_conj(eqs));
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        f = mk_forall(*it, f);
      out.una.push_back(f);
    }
  }
  return out;
}

}  // namespace aspfo
