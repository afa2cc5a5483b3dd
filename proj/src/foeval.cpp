#include "aspfo/foeval.hpp"

namespace aspfo {

Elem eval_term(const TermPtr& t, const Structure& s, const Environment& env) {
  if (t->is_variable()) return env.lookup(t->var);
  Tuple args;
  for (const auto& a : t->args) args.push_back(eval_term(a, s, env));
  return s.apply(*t->func, args);
}

bool sat(const Structure& s, const FormulaPtr& f, const Environment& env) {
  switch (f->kind) {
    case FormulaKind::True: return true;
    case FormulaKind::False: return false;
    case FormulaKind::Atom: {
      Tuple args;
      for (const auto& a : f->args) args.push_back(eval_term(a, s, env));
      return s.holds(*f->pred, args);
    }
    case FormulaKind::Equal:
      return eval_term(f->args[0], s, env) == eval_term(f->args[1], s, env);
    case FormulaKind::Not: return !sat(s, f->lhs, env);
    case FormulaKind::And: return sat(s, f->lhs, env) && sat(s, f->rhs, env);
    case FormulaKind::Or: return sat(s, f->lhs, env) || sat(s, f->rhs, env);
    case FormulaKind::Implies:
      return !sat(s, f->lhs, env) || sat(s, f->rhs, env);
    case FormulaKind::Iff: return sat(s, f->lhs, env) == sat(s, f->rhs, env);
    case FormulaKind::Exists:
      for (Elem d = 0; d < s.domain_size(); ++d)
        if (sat(s, f->lhs, env.bind(f->var, d))) return true;
      return false;
    case FormulaKind::Forall:
      for (Elem d = 0; d < s.domain_size(); ++d)
        if (!sat(s, f->lhs, env.bind(f->var, d))) return false;
      return true;
  }
  return false;
}

bool pair_sat(const Structure& a, const Structure& b, const FormulaPtr& f,
              const Environment& env) {
  if (!a.same_carrier(b))
    throw std::invalid_argument("pair_sat requires a shared carrier");
  switch (f->kind) {
    case FormulaKind::True: return true;
    case FormulaKind::False: return false;
    case FormulaKind::Atom: {
      Tuple args;
      for (const auto& t : f->args) args.push_back(eval_term(t, a, env));
      return a.holds(*f->pred, args);
    }
    case FormulaKind::Equal:
      return eval_term(f->args[0], a, env) == eval_term(f->args[1], a, env);
    case FormulaKind::Not: return !pair_sat(b, a, f->lhs, env);
    case FormulaKind::And:
      return pair_sat(a, b, f->lhs, env) && pair_sat(a, b, f->rhs, env);
    case FormulaKind::Or:
      return pair_sat(a, b, f->lhs, env) || pair_sat(a, b, f->rhs, env);
    case FormulaKind::Implies:  // ~lhs | rhs
      return !pair_sat(b, a, f->lhs, env) || pair_sat(a, b, f->rhs, env);
    case FormulaKind::Iff:  // (lhs & rhs) | (~lhs & ~rhs)
      return (pair_sat(a, b, f->lhs, env) && pair_sat(a, b, f->rhs, env)) ||
             (!pair_sat(b, a, f->lhs, env) && !pair_sat(b, a, f->rhs, env));
    case FormulaKind::Exists:
      for (Elem d = 0; d < a.domain_size(); ++d)
        if (pair_sat(a, b, f->lhs, env.bind(f->var, d))) return true;
      return false;
    case FormulaKind::Forall:
      for (Elem d = 0; d < a.domain_size(); ++d)
        if (!pair_sat(a, b, f->lhs, env.bind(f->var, d))) return false;
      return true;
  }
  return false;
}

TruthValue3 eval3(const PartialStructure& ps, const FormulaPtr& f,
                  const Environment& env) {
  const Structure& funcs = ps.lower();
  switch (f->kind) {
    case FormulaKind::True: return TruthValue3::True;
    case FormulaKind::False: return TruthValue3::False;
    case FormulaKind::Atom: {
      Tuple args;
      for (const auto& t : f->args) args.push_back(eval_term(t, funcs, env));
      return ps.atom_value(*f->pred, args);
    }
    case FormulaKind::Equal:
      return eval_term(f->args[0], funcs, env) ==
                     eval_term(f->args[1], funcs, env)
                 ? TruthValue3::True
                 : TruthValue3::False;
    case FormulaKind::Not: return tv3_not(eval3(ps, f->lhs, env));
    case FormulaKind::And:
      return tv3_min(eval3(ps, f->lhs, env), eval3(ps, f->rhs, env));
    case FormulaKind::Or:
      return tv3_max(eval3(ps, f->lhs, env), eval3(ps, f->rhs, env));
    case FormulaKind::Implies:  // ~lhs | rhs
      return tv3_max(tv3_not(eval3(ps, f->lhs, env)), eval3(ps, f->rhs, env));
    case FormulaKind::Iff: {  // (lhs & rhs) | (~lhs & ~rhs)
      TruthValue3 l = eval3(ps, f->lhs, env);
      TruthValue3 r = eval3(ps, f->rhs, env);
      return tv3_max(tv3_min(l, r), tv3_min(tv3_not(l), tv3_not(r)));
    }
    case FormulaKind::Exists: {
      TruthValue3 acc = TruthValue3::False;
      for (Elem d = 0; d < funcs.domain_size(); ++d)
        acc = tv3_max(acc, eval3(ps, f->lhs, env.bind(f->var, d)));
      return acc;
    }
    case FormulaKind::Forall: {
      TruthValue3 acc = TruthValue3::True;
      for (Elem d = 0; d < funcs.domain_size(); ++d)
        acc = tv3_min(acc, eval3(ps, f->lhs, env.bind(f->var, d)));
      return acc;
    }
  }
  return TruthValue3::Unknown;
}

void all_partial_structures(int domain_size, const Vocabulary& voc,
                            const PartialSink& sink, uint64_t cap) {
  std::vector<std::string> domain;
  for (int i = 1; i <= domain_size; ++i) domain.push_back("d" + std::to_string(i));
  Vocabulary funcs_voc, preds_voc;
  for (const auto& s : voc.functions()) funcs_voc.add(s);
  for (const auto& p : voc.predicates()) preds_voc.add(p);

  // Per function-table choice, enumerate all three-valued predicate
  // assignments by a base-3 counter over ground atoms.
  struct Slot {
    Symbol sym;
    std::vector<Tuple> tuples;
    std::vector<int> vals;  // 0=f, 1=u, 2=t
  };
  uint64_t count = 0;
  bool stopped = false;
  all_structures(domain, funcs_voc, [&](const Structure& fs) {
    std::vector<Slot> slots;
    for (const auto& p : preds_voc.symbols())
      slots.push_back({p, all_tuples(domain.size(), p.arity), {}});
    for (auto& sl : slots) sl.vals.assign(sl.tuples.size(), 0);
    while (true) {
      if (++count > cap) throw EnumerationCapExceeded(cap);
      Structure lower(domain, Vocabulary::merged(funcs_voc, preds_voc));
      Structure upper = lower;
      for (const auto& f : funcs_voc.symbols()) {
        lower.set_func_table(f, fs.func_table(f));
        upper.set_func_table(f, fs.func_table(f));
      }
      for (const auto& sl : slots) {
        std::set<Tuple> lo, up;
        for (size_t i = 0; i < sl.tuples.size(); ++i) {
          if (sl.vals[i] == 2) lo.insert(sl.tuples[i]);
          if (sl.vals[i] >= 1) up.insert(sl.tuples[i]);
        }
        lower.set_pred_table(sl.sym, std::move(lo));
        upper.set_pred_table(sl.sym, std::move(up));
      }
      if (!sink(PartialStructure(std::move(lower), std::move(upper)))) {
        stopped = true;
        return false;
      }
      bool carried = true;
      for (auto& sl : slots) {
        if (!carried) break;
        for (size_t i = 0; i < sl.vals.size() && carried; ++i) {
          if (++sl.vals[i] < 3) carried = false;
          else sl.vals[i] = 0;
        }
      }
      if (carried) return true;
    }
  });
  (void)stopped;
}

Equiv3Result equiv3(const FormulaPtr& f, const FormulaPtr& g, int max_domain,
                    uint64_t cap) {
  Vocabulary voc;
  for (const auto& s : formula_symbols(f)) voc.add(s);
  for (const auto& s : formula_symbols(g))
    if (!voc.contains(s)) voc.add(s);
  std::set<std::string> fv = free_vars(f);
  for (const auto& v : free_vars(g)) fv.insert(v);
  std::vector<std::string> vars(fv.begin(), fv.end());

  Equiv3Result result;
  result.max_domain = max_domain;
  for (int n = 1; n <= max_domain && result.equivalent; ++n) {
    all_partial_structures(n, voc, [&](const PartialStructure& ps) {
      for (const auto& assignment : all_tuples(n, static_cast<int>(vars.size()))) {
        Environment env;
        for (size_t i = 0; i < vars.size(); ++i)
          env.bindings[vars[i]] = assignment[i];
        TruthValue3 lv = eval3(ps, f, env);
        TruthValue3 rv = eval3(ps, g, env);
        if (lv != rv) {
          result.equivalent = false;
          result.witness = ps;
          result.env = env;
          result.lhs_value = lv;
          result.rhs_value = rv;
          return false;
        }
      }
      return true;
    }, cap);
  }
  return result;
}

}  // namespace aspfo
