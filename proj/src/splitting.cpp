#include "aspfo/splitting.hpp"

#include <algorithm>
#include <map>

#include "aspfo/frontend.hpp"
#include "aspfo/semantics.hpp"

namespace aspfo {

DependencyGraph dep_graph(const AspProgram& p) {
  DependencyGraph g;
  for (const auto& s : p.vocabulary.predicates()) g.nodes.insert(s);
  for (const auto& r : p.rules) {
    if (!r.head) continue;
    for (const auto& b : r.pos_body) g.edges.emplace(r.head->pred, b.pred);
  }
  return g;
}

bool positively_depends(const DependencyGraph& g, const Symbol& a,
                        const Symbol& b) {
  // BFS over at least one edge.
  std::set<Symbol> seen;
  std::vector<Symbol> queue;
  for (const auto& [u, v] : g.edges)
    if (u == a && seen.insert(v).second) queue.push_back(v);
  while (!queue.empty()) {
    Symbol cur = queue.back();
    queue.pop_back();
    if (cur == b) return true;
    for (const auto& [u, v] : g.edges)
      if (u == cur && seen.insert(v).second) queue.push_back(v);
  }
  return seen.count(b) > 0;
}

namespace {

bool head_in_own_bodies(const AspProgram& p, const Symbol& h,
                        const std::vector<size_t>& idxs) {
  for (size_t i : idxs) {
    for (const auto& a : p.rules[i].pos_body)
      if (a.pred == h) return true;
    for (const auto& a : p.rules[i].neg_body)
      if (a.pred == h) return true;
  }
  return false;
}

// Tarjan SCC over the predicate dependency graph.
struct SccFinder {
  const DependencyGraph& g;
  std::map<Symbol, int> index, low, comp;
  std::vector<Symbol> stack;
  std::set<Symbol> on_stack;
  int counter = 0, ncomp = 0;

  explicit SccFinder(const DependencyGraph& graph) : g(graph) {
    for (const auto& n : g.nodes)
      if (!index.count(n)) visit(n);
  }

  void visit(const Symbol& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (const auto& [a, b] : g.edges) {
      if (!(a == v)) continue;
      if (!index.count(b)) {
        visit(b);
        low[v] = std::min(low[v], low[b]);
      } else if (on_stack.count(b)) {
        low[v] = std::min(low[v], index[b]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        Symbol w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  }
};

}  // namespace

SplittingResult finest_proper_splitting(const AspProgram& p) {
  DependencyGraph g = dep_graph(p);
  SccFinder scc(g);

  // Group non-constraint rules by the SCC of their head predicate.
  std::map<int, std::vector<size_t>> groups;
  std::vector<SplitPart> constraint_parts;
  for (size_t i = 0; i < p.rules.size(); ++i) {
    const auto& r = p.rules[i];
    if (r.kind == AspRuleKind::Constraint)
      constraint_parts.push_back({PartKind::Constraint, {i}});
    else
      groups[scc.comp.at(r.head->pred)].push_back(i);
  }

  ProperSplitting sp;
  for (const auto& [_, idxs] : groups) {
    bool has_choice = false, has_normal = false;
    std::set<Symbol> heads;
    for (size_t i : idxs) {
      heads.insert(p.rules[i].head->pred);
      (p.rules[i].kind == AspRuleKind::Choice ? has_choice : has_normal) = true;
    }
    if (has_choice) {
      if (has_normal)
        return {std::nullopt,
                "a part mixes choice and normal rules for predicate '" +
                    heads.begin()->name + "'"};
      const Symbol& h = *heads.begin();
      if (heads.size() > 1 || positively_depends(g, h, h) ||
          head_in_own_bodies(p, h, idxs))
        return {std::nullopt,
                "head predicate of a choice module occurs in its own rule "
                "bodies: '" + h.name + "'"};
      sp.parts.push_back({PartKind::Choice, idxs});
    } else {
      sp.parts.push_back({PartKind::Define, idxs});
    }
  }
  sp.parts.insert(sp.parts.end(), constraint_parts.begin(),
                  constraint_parts.end());
  return {std::move(sp), ""};
}

std::vector<std::string> splitting_violations(const AspProgram& p,
                                              const ProperSplitting& sp) {
  std::vector<std::string> out;
  DependencyGraph g = dep_graph(p);

  // Partition check.
  std::vector<int> owner(p.rules.size(), -1);
  for (size_t pi = 0; pi < sp.parts.size(); ++pi) {
    for (size_t i : sp.parts[pi].rule_indices) {
      if (i >= p.rules.size() || owner[i] != -1) {
        out.push_back("parts do not partition the rule list");
        continue;
      }
      owner[i] = static_cast<int>(pi);
    }
  }
  for (size_t i = 0; i < p.rules.size(); ++i)
    if (owner[i] == -1) out.push_back("rule " + std::to_string(i) +
                                      " belongs to no part");

  std::map<Symbol, int> head_part;
  for (size_t pi = 0; pi < sp.parts.size(); ++pi) {
    const auto& part = sp.parts[pi];
    bool has_constraint = false, has_choice = false, has_normal = false;
    std::set<Symbol> heads;
    for (size_t i : part.rule_indices) {
      const auto& r = p.rules[i];
      if (r.kind == AspRuleKind::Constraint) has_constraint = true;
      if (r.kind == AspRuleKind::Choice) has_choice = true;
      if (r.kind == AspRuleKind::Normal) has_normal = true;
      if (r.head) heads.insert(r.head->pred);
    }
    if (has_constraint && part.rule_indices.size() != 1)
      out.push_back("a part containing a constraint is not a singleton");
    for (const auto& h : heads) {
      auto [it, fresh] = head_part.emplace(h, static_cast<int>(pi));
      if (!fresh && it->second != static_cast<int>(pi))
        out.push_back("rules with head predicate '" + h.name +
                      "' span multiple parts");
    }
    if (has_choice && has_normal)
      out.push_back("a part mixes choice and normal rules");
    if (has_choice && heads.size() > 1)
      out.push_back("a choice part has more than one head predicate");
    if (has_choice)
      for (const auto& h : heads)
        if (positively_depends(g, h, h) ||
            head_in_own_bodies(p, h, part.rule_indices))
          out.push_back("choice head predicate '" + h.name +
                        "' occurs in its own rule bodies");
  }

  // Mutually positively dependent head predicates must share a part.
  std::vector<Symbol> heads;
  for (const auto& [h, _] : head_part) heads.push_back(h);
  for (const auto& a : heads)
    for (const auto& b : heads)
      if (!(a == b) && positively_depends(g, a, b) &&
          positively_depends(g, b, a) && head_part[a] != head_part[b])
        out.push_back("mutually dependent predicates '" + a.name + "' and '" +
                      b.name + "' are in different parts");
  return out;
}

namespace {

FormulaPtr rule_body_formula(const AspRule& r) {
  std::vector<FormulaPtr> conj;
  for (const auto& a : r.pos_body) conj.push_back(atom_formula(a));
  for (const auto& [l, rgt] : r.diseqs)
    conj.push_back(mk_not(mk_equal(l, rgt)));
  for (const auto& a : r.neg_body) conj.push_back(mk_not(atom_formula(a)));
  return mk_conj(conj);
}

}  // namespace

AspFoTheory to_aspfo(const AspProgram& p, const ProperSplitting& sp) {
  AspFoTheory theory;
  HerbrandModule her;
  her.functions = p.vocabulary.functions();
  theory.modules.push_back(her);
  for (const auto& part : sp.parts) {
    switch (part.kind) {
      case PartKind::Choice: {
        std::vector<ChoiceRule> rules;
        for (size_t i : part.rule_indices)
          rules.push_back(make_choice_rule(*p.rules[i].head,
                                           rule_body_formula(p.rules[i])));
        theory.modules.push_back(make_gmodule(std::move(rules)));
        break;
      }
      case PartKind::Define: {
        std::vector<DefineRule> rules;
        for (size_t i : part.rule_indices)
          rules.push_back(make_define_rule(*p.rules[i].head,
                                           rule_body_formula(p.rules[i])));
        theory.modules.push_back(make_dmodule(std::move(rules)));
        break;
      }
      case PartKind::Constraint: {
        const auto& r = p.rules[part.rule_indices[0]];
        FormulaPtr f = mk_not(rule_body_formula(r));
        std::set<std::string> vs = rule_vars(r);
        for (auto it = vs.rbegin(); it != vs.rend(); ++it)
          f = mk_forall(*it, f);
        theory.modules.push_back(make_tmodule(f));
        break;
      }
    }
  }
  // Predicates that head no rule get an empty D-module, pinning them false.
  std::set<Symbol> unheaded = p.vocabulary.predicates();
  for (const auto& h : hd(p.rules)) unheaded.erase(h);
  theory.modules.push_back(make_dmodule(std::move(unheaded), {}));
  return theory;
}

VerifyReport verify_split(const AspProgram& p, uint64_t cap) {
  VerifyReport rep;
  SplittingResult sr = finest_proper_splitting(p);
  if (!sr.splitting) {
    rep.failure = sr.failure;
    return rep;
  }
  rep.proper = true;
  AspFoTheory theory = to_aspfo(p, *sr.splitting);

  std::vector<Structure> asp = answer_sets(p, cap);
  std::vector<Structure> fo;
  models_herbrand(theory, [&](const Structure& s) {
    fo.push_back(s);
    return true;
  }, cap);
  rep.answer_set_count = asp.size();
  rep.model_count = fo.size();

  auto contains = [](const std::vector<Structure>& v, const Structure& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  rep.equal = true;
  for (const auto& s : asp)
    if (!contains(fo, s)) {
      rep.equal = false;
      rep.witness = s;
      break;
    }
  if (rep.equal)
    for (const auto& s : fo)
      if (!contains(asp, s)) {
        rep.equal = false;
        rep.witness = s;
        break;
      }
  return rep;
}

std::string VerifyReport::to_lines() const {
  std::string out;
  if (!proper) {
    out += "RESULT: IMPROPER\n";
    out += "REASON: " + failure + "\n";
    return out;
  }
  out += std::string("RESULT: ") + (equal ? "EQUAL" : "UNEQUAL") + "\n";
  out += "ANSWER_SETS: " + std::to_string(answer_set_count) + "\n";
  out += "MODELS: " + std::to_string(model_count) + "\n";
  if (witness) out += "WITNESS:\n" + print_structure(*witness);
  return out;
}

std::string VerifyReport::to_text() const {
  if (!proper) return "no proper splitting: " + failure + "\n";
  std::string out = equal ? "answer sets and models agree"
                          : "answer sets and models DIFFER";
  out += " (" + std::to_string(answer_set_count) + " answer sets, " +
         std::to_string(model_count) + " models)\n";
  if (witness)
    out += "witness present on one side only:\n" + print_structure(*witness);
  return out;
}

}  // namespace aspfo
