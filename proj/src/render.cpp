#include "aspfo/render.hpp"

#include <algorithm>

namespace aspfo {

namespace {

std::string instantiate(const std::string& tmpl,
                        const std::vector<std::string>& args) {
  std::string out;
  for (size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '#' || i + 1 >= tmpl.size() || !isdigit(tmpl[i + 1])) {
      out += tmpl[i];
      continue;
    }
    size_t j = i + 1;
    while (j < tmpl.size() && isdigit(tmpl[j])) ++j;
    size_t k = std::stoul(tmpl.substr(i + 1, j - i - 1));
    if (k == 0 || k > args.size())
      throw RenderError("placeholder #" + std::to_string(k) +
                        " out of range in template: " + tmpl);
    out += args[k - 1];
    i = j - 1;
  }
  return out;
}

const std::string& tmpl_for(const IntendedInterpretation& i, const Symbol& s) {
  auto it = i.templates.find(s);
  if (it == i.templates.end())
    throw RenderError("no template for symbol " + to_string(s));
  return it->second;
}

std::string render_term(const TermPtr& t, const IntendedInterpretation& i) {
  if (t->is_variable()) return t->var;
  // Constants without a template read as their own name; compound terms
  // need one.
  auto it = i.templates.find(*t->func);
  if (it == i.templates.end()) {
    if (t->func->arity == 0) return t->func->name;
    throw RenderError("no template for symbol " + to_string(*t->func));
  }
  std::vector<std::string> args;
  for (const auto& a : t->args) args.push_back(render_term(a, i));
  return instantiate(it->second, args);
}

std::string render_atom(const Symbol& pred, const std::vector<TermPtr>& args,
                        const IntendedInterpretation& i) {
  std::vector<std::string> rendered;
  for (const auto& a : args) rendered.push_back(render_term(a, i));
  return instantiate(tmpl_for(i, pred), rendered);
}

// Capitalize and close a top-level sentence.
std::string sentence(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(toupper(s[0]));
  if (!s.empty() && s.back() != '.' && s.back() != '?' && s.back() != '!')
    s += '.';
  return s;
}

std::string fo_clause(const FormulaPtr& f, const IntendedInterpretation& i) {
  switch (f->kind) {
    case FormulaKind::Atom:
      return render_atom(*f->pred, f->args, i);
    case FormulaKind::Equal:
      return render_term(f->args[0], i) + " and " + render_term(f->args[1], i) +
             " are the same";
    case FormulaKind::Not:
      return "it is not the case that " + fo_clause(f->lhs, i);
    case FormulaKind::And:
      return fo_clause(f->lhs, i) + " and " + fo_clause(f->rhs, i);
    case FormulaKind::Or:
      return fo_clause(f->lhs, i) + " or " + fo_clause(f->rhs, i) +
             " (or both)";
    case FormulaKind::Implies:
      return "if " + fo_clause(f->lhs, i) + ", then " + fo_clause(f->rhs, i);
    case FormulaKind::Iff:
      return fo_clause(f->lhs, i) + " if and only if " + fo_clause(f->rhs, i);
    case FormulaKind::Exists:
      return "there exists an " + f->var +
             " in the universe of discourse such that " + fo_clause(f->lhs, i);
    case FormulaKind::Forall:
      return "for all " + f->var + " in the universe of discourse, " +
             fo_clause(f->lhs, i);
    case FormulaKind::True:
      return "it is true";
    case FormulaKind::False:
      return "it is false";
  }
  throw RenderError("unreachable formula kind");
}

// The negated reading has no rows for the defined connectives.
FormulaPtr desugar(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Not:
      return mk_not(desugar(f->lhs));
    case FormulaKind::And:
      return mk_and(desugar(f->lhs), desugar(f->rhs));
    case FormulaKind::Or:
      return mk_or(desugar(f->lhs), desugar(f->rhs));
    case FormulaKind::Implies:
      return mk_or(mk_not(desugar(f->lhs)), desugar(f->rhs));
    case FormulaKind::Iff: {
      FormulaPtr a = desugar(f->lhs), b = desugar(f->rhs);
      return mk_or(mk_and(a, b), mk_and(mk_not(a), mk_not(b)));
    }
    case FormulaKind::Exists:
      return mk_exists(f->var, desugar(f->lhs));
    case FormulaKind::Forall:
      return mk_forall(f->var, desugar(f->lhs));
  }
  throw RenderError("unreachable formula kind");
}

std::string foneg_clause(const FormulaPtr& f, const IntendedInterpretation& i) {
  switch (f->kind) {
    case FormulaKind::Atom:
      return "it is not the case that " + render_atom(*f->pred, f->args, i);
    case FormulaKind::Equal:
      return render_term(f->args[0], i) + " and " + render_term(f->args[1], i) +
             " are not the same";
    case FormulaKind::Not:
      return "it is not the case that " + foneg_clause(f->lhs, i);
    case FormulaKind::And:
      return foneg_clause(f->lhs, i) + ", or " + foneg_clause(f->rhs, i);
    case FormulaKind::Or:
      return foneg_clause(f->lhs, i) + ", and " + foneg_clause(f->rhs, i);
    case FormulaKind::Exists:
      return "for all " + f->var + " in the universe of discourse, " +
             foneg_clause(f->lhs, i);
    case FormulaKind::Forall:
      return "there exists an " + f->var +
             " in the universe of discourse such that " + foneg_clause(f->lhs, i);
    case FormulaKind::True:
      return "it is false";
    case FormulaKind::False:
      return "it is true";
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      break;  // removed by desugar
  }
  throw RenderError("unreachable formula kind");
}

}  // namespace

Rendering render_fo(const FormulaPtr& f, const IntendedInterpretation& i) {
  return {sentence(fo_clause(f, i)), Regime::Fo};
}

Rendering render_fo_nonstandard(const FormulaPtr& f,
                                const IntendedInterpretation& i) {
  return {sentence(foneg_clause(desugar(f), i)), Regime::FoNonstandard};
}

namespace {

std::string module_fo_sentence(const Module& m, const IntendedInterpretation& i,
                               bool negated) {
  const auto* t = std::get_if<TModule>(&m);
  if (!t)
    throw RenderError(
        "only T-modules have a first-order reading; use the modular regime");
  return negated ? render_fo_nonstandard(t->sentence, i).text
                 : render_fo(t->sentence, i).text;
}

std::string join_sentences(const std::vector<std::string>& parts,
                           const std::string& word) {
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) out += "\n" + word + "\n";
    out += parts[k];
  }
  return out;
}

}  // namespace

Rendering render_fo(const AspFoTheory& t, const IntendedInterpretation& i) {
  std::vector<std::string> parts;
  for (const auto& m : t.modules) parts.push_back(module_fo_sentence(m, i, false));
  return {join_sentences(parts, "and"), Regime::Fo};
}

Rendering render_fo_nonstandard(const AspFoTheory& t,
                                const IntendedInterpretation& i) {
  std::vector<std::string> parts;
  for (const auto& m : t.modules) parts.push_back(module_fo_sentence(m, i, true));
  return {join_sentences(parts, "or"), Regime::FoNonstandard};
}

// ---------------------------------------------------------------------------
// Epistemic readings

namespace {

std::string gl_atom(const GroundAtom& a, const IntendedInterpretation& i) {
  return instantiate(tmpl_for(i, a.pred), a.args);
}

std::string gl_literal(const GroundLiteral& l, const IntendedInterpretation& i) {
  std::string a = gl_atom(l.atom, i);
  return l.positive ? a : "it is not the case that " + a;
}

std::string gl_body(const std::vector<std::string>& items) {
  std::string out;
  for (size_t k = 0; k < items.size(); ++k) {
    if (k) out += " and ";
    out += items[k];
  }
  return out;
}

std::string gl_rule_clause(const GroundRule& r, const IntendedInterpretation& i) {
  std::vector<std::string> body;
  for (const auto& l : r.pos_body) body.push_back(gl_literal(l, i));
  for (const auto& l : r.neg_body)
    body.push_back("the agent does not know that " + gl_literal(l, i));
  switch (r.head_kind) {
    case GroundHead::Literal: {
      std::string h = gl_literal(*r.head, i);
      return body.empty() ? h : h + " if " + gl_body(body);
    }
    case GroundHead::Choice: {
      std::string h = "it might be that " + gl_literal(*r.head, i);
      return body.empty() ? h : h + " if " + gl_body(body);
    }
    case GroundHead::None:
      return "it cannot be the case that " + gl_body(body);
  }
  throw RenderError("unreachable rule head kind");
}

std::string gl_atomref(const AtomRef& a, const IntendedInterpretation& i) {
  std::vector<std::string> args;
  for (const auto& t : a.args) args.push_back(render_term(t, i));
  return instantiate(tmpl_for(i, a.pred), args);
}

// Schematic clause; rule-level variables are prefixed "for every x,".
std::string gl_rule_clause(const AspRule& r, const IntendedInterpretation& i) {
  std::vector<std::string> body;
  for (const auto& a : r.pos_body) body.push_back(gl_atomref(a, i));
  for (const auto& [l, rgt] : r.diseqs)
    body.push_back(render_term(l, i) + " and " + render_term(rgt, i) +
                   " are not the same");
  for (const auto& a : r.neg_body)
    body.push_back("the agent does not know that " + gl_atomref(a, i));
  std::string core;
  switch (r.kind) {
    case AspRuleKind::Normal:
      core = gl_atomref(*r.head, i);
      if (!body.empty()) core += " if " + gl_body(body);
      break;
    case AspRuleKind::Choice:
      core = "it might be that " + gl_atomref(*r.head, i);
      if (!body.empty()) core += " if " + gl_body(body);
      break;
    case AspRuleKind::Constraint:
      core = "it cannot be the case that " + gl_body(body);
      break;
  }
  std::string prefix;
  for (const auto& v : rule_vars(r)) prefix += "for every " + v + ", ";
  return prefix + core;
}

template <typename Rule>
std::string gl_program_text(const std::vector<Rule>& rules,
                            const IntendedInterpretation& i) {
  std::string out = "All the agent knows is:";
  for (size_t k = 0; k < rules.size(); ++k) {
    out += "\n- " + gl_rule_clause(rules[k], i);
    out += (k + 1 < rules.size()) ? ", and" : ".";
  }
  return out;
}

}  // namespace

Rendering render_gl(const GroundRule& r, const IntendedInterpretation& i) {
  return {sentence(gl_rule_clause(r, i)), Regime::Gl};
}

Rendering render_gl(const std::vector<GroundRule>& program,
                    const IntendedInterpretation& i) {
  return {gl_program_text(program, i), Regime::Gl};
}

Rendering render_gl(const AspRule& r, const IntendedInterpretation& i) {
  std::string text = sentence(gl_rule_clause(r, i));
  if (!rule_vars(r).empty()) text += " (schematic reading)";
  return {text, Regime::Gl};
}

Rendering render_gl(const AspProgram& p, const IntendedInterpretation& i) {
  std::string text = gl_program_text(p.rules, i);
  for (const auto& r : p.rules)
    if (!rule_vars(r).empty()) {
      text += "\n(schematic reading)";
      break;
    }
  return {text, Regime::Gl};
}

std::string render_belief(const GroundAtom& a, const BelievedLiteralSet& x,
                          const IntendedInterpretation& i) {
  std::string reading = gl_atom(a, i);
  if (x.contains({a, true}))
    return sentence("B has the belief that " + reading + " is true");
  if (x.contains({a, false}))
    return sentence("B has the belief that " + reading + " is false");
  return sentence("B does not have the belief that " + reading +
                  " is true and B does not have the belief that " + reading +
                  " is false");
}

Rendering render_gl(const BelievedLiteralSet& x,
                    const IntendedInterpretation& i) {
  std::string out;
  for (const auto& l : x.literals()) {
    if (!out.empty()) out += "\n";
    out += sentence("B has the belief that " + gl_atom(l.atom, i) +
                    (l.positive ? " is true" : " is false"));
  }
  return {out, Regime::Gl};
}

// ---------------------------------------------------------------------------
// Modular readings

namespace {

std::vector<std::string> gmodule_lead_vars(const GModule& g) {
  // Reuse the rules' head variables when they agree and are distinct;
  // otherwise fall back to generic names.
  int n = g.head_predicate.arity;
  std::vector<std::string> shared;
  bool usable = !g.rules.empty();
  for (const auto& r : g.rules) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& t : r.head.args) {
      if (!t->is_variable() || !seen.insert(t->var).second) {
        usable = false;
        break;
      }
      names.push_back(t->var);
    }
    if (!usable) break;
    if (shared.empty())
      shared = names;
    else if (shared != names)
      usable = false;
  }
  if (usable && static_cast<int>(shared.size()) == n) return shared;
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k) out.push_back("x" + std::to_string(k));
  return out;
}

std::string tarskian_gmodule(const GModule& g, const IntendedInterpretation& i) {
  std::vector<std::string> vars = gmodule_lead_vars(g);
  std::vector<TermPtr> args;
  for (const auto& v : vars) args.push_back(mk_var(v));
  std::string lead = "In general, ";
  if (!vars.empty()) {
    lead += "for each ";
    for (size_t k = 0; k < vars.size(); ++k) {
      if (k) lead += ", ";
      lead += vars[k];
    }
    lead += ", ";
  }
  lead += render_atom(g.head_predicate, args, i) + " is false.";
  std::string out = lead +
      " However, there are exceptions as expressed by the following rules:";
  for (const auto& r : g.rules) {
    std::string head = render_atom(r.head.pred, r.head.args, i);
    if (r.body->kind == FormulaKind::True)
      out += "\n- " + sentence("it might be that " + head);
    else
      out += "\n- " + sentence("if " + fo_clause(r.body, i) +
                               ", then it might be that " + head);
  }
  out += "\n- There are no other exceptions.";
  return out;
}

bool dmodule_recursive(const DModule& d) {
  // Head predicate reachable from itself through rule bodies (positive or
  // negative occurrences alike).
  std::set<std::pair<Symbol, Symbol>> edges;
  for (const auto& r : d.rules)
    for (const auto& q : formula_predicates(r.body))
      edges.emplace(r.head.pred, q);
  for (const auto& p : d.defined) {
    std::set<Symbol> seen;
    std::vector<Symbol> queue{p};
    while (!queue.empty()) {
      Symbol cur = queue.back();
      queue.pop_back();
      for (const auto& [a, b] : edges)
        if (a == cur && seen.insert(b).second) queue.push_back(b);
    }
    if (seen.count(p)) return true;
  }
  return false;
}

std::string name_list(const std::set<Symbol>& syms) {
  std::string out;
  for (const auto& s : syms) {
    if (!out.empty()) out += ", ";
    out += s.name;
  }
  return out;
}

std::string tarskian_dmodule(const DModule& d, const IntendedInterpretation& i) {
  std::set<Symbol> parameters = pars(d);
  std::string out = "We define " + name_list(d.defined);
  if (!parameters.empty()) out += " in terms of " + name_list(parameters);
  if (dmodule_recursive(d))
    out += d.defined.size() > 1 ? " by the following simultaneous induction"
                                : " by the following induction";
  else
    out += " by the following rules";
  out += ":";
  for (const auto& r : d.rules) {
    std::string prefix;
    for (const auto& v : r.universals) prefix += "for every " + v + ", ";
    std::string head = render_atom(r.head.pred, r.head.args, i);
    std::string clause = r.body->kind == FormulaKind::True
                             ? prefix + head
                             : prefix + head + " if " + fo_clause(r.body, i);
    out += "\n- " + sentence(clause);
  }
  out += "\n- In no other cases, " + name_list(d.defined) +
         (d.defined.size() > 1 ? " hold." : " holds.");
  return out;
}

std::string tarskian_herbrand(const HerbrandModule& h) {
  std::string sigma;
  for (const auto& f : h.functions) {
    if (!sigma.empty()) sigma += ", ";
    sigma += f.name;
    if (f.arity > 0) sigma += "/" + std::to_string(f.arity);
  }
  return "The domain of discourse is the set of terms built from " + sigma +
         ", and each such term denotes itself.";
}

}  // namespace

Rendering render_tarskian(const Module& m, const IntendedInterpretation& i) {
  if (const auto* t = std::get_if<TModule>(&m))
    return {render_fo(t->sentence, i).text, Regime::Tarskian};
  if (const auto* g = std::get_if<GModule>(&m))
    return {tarskian_gmodule(*g, i), Regime::Tarskian};
  if (const auto* d = std::get_if<DModule>(&m))
    return {tarskian_dmodule(*d, i), Regime::Tarskian};
  return {tarskian_herbrand(std::get<HerbrandModule>(m)), Regime::Tarskian};
}

Rendering render_tarskian(const AspFoTheory& t,
                          const IntendedInterpretation& i) {
  std::vector<std::string> parts;
  for (const auto& m : t.modules) parts.push_back(render_tarskian(m, i).text);
  return {join_sentences(parts, "and"), Regime::Tarskian};
}

// ---------------------------------------------------------------------------
// Claims and structure summaries

std::string render_sat_claim(const std::string& theory_name,
                             const std::string& structure_name) {
  return theory_name + " holds in the state-of-affairs " + structure_name + ".";
}

std::string render_unsat_claim_nonstandard(const std::string& theory_name,
                                           const std::string& structure_name) {
  return theory_name + " does not hold in the state-of-affairs " +
         structure_name + ".";
}

std::string render_stable_claim(const std::string& set_name,
                                const std::string& program_name) {
  return "Given that all the agent knows is " + program_name + ", " + set_name +
         " could be the set of literals the agent believes.";
}

std::string render_structure_summary(const Structure& s,
                                     const IntendedInterpretation& i) {
  std::string out = "A state of affairs with domain {";
  for (size_t k = 0; k < s.domain().size(); ++k) {
    if (k) out += ", ";
    out += s.domain()[k];
  }
  out += "}:";
  for (const auto& p : s.vocabulary().predicates()) {
    out += "\n- \"" + tmpl_for(i, p) + "\"";
    if (p.arity == 0) {
      out += s.holds(p, {}) ? " holds" : " does not hold";
      continue;
    }
    out += " holds of exactly:";
    bool first = true;
    for (const auto& t : s.pred_table(p)) {
      out += first ? " " : ", ";
      first = false;
      if (t.size() == 1) {
        out += s.domain()[t[0]];
      } else {
        out += "(";
        for (size_t k = 0; k < t.size(); ++k) {
          if (k) out += ", ";
          out += s.domain()[t[k]];
        }
        out += ")";
      }
    }
    if (first) out += " nothing";
  }
  for (const auto& f : s.vocabulary().functions()) {
    out += "\n- \"" + tmpl_for(i, f) + "\" maps:";
    bool first = true;
    for (const auto& [t, v] : s.func_table(f)) {
      out += first ? " " : ", ";
      first = false;
      if (t.empty()) {
        out += s.domain()[v];
        continue;
      }
      out += "(";
      for (size_t k = 0; k < t.size(); ++k) {
        if (k) out += ", ";
        out += s.domain()[t[k]];
      }
      out += ") -> " + s.domain()[v];
    }
  }
  return out;
}

}  // namespace aspfo
