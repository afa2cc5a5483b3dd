#include "aspfo/groundelp.hpp"

#include <algorithm>

namespace aspfo {

std::string to_string(const GroundAtom& a) {
  std::string out = a.pred.name;
  if (!a.args.empty()) {
    out += "(";
    for (size_t i = 0; i < a.args.size(); ++i) {
      if (i) out += ",";
      out += a.args[i];
    }
    out += ")";
  }
  return out;
}

std::string to_string(const GroundLiteral& l) {
  return l.positive ? to_string(l.atom) : "-" + to_string(l.atom);
}

bool BelievedLiteralSet::consistent(const std::set<GroundLiteral>& ls) {
  for (const auto& l : ls)
    if (ls.count(l.complement())) return false;
  return true;
}

BelievedLiteralSet::BelievedLiteralSet(std::set<GroundLiteral> literals)
    : literals_(std::move(literals)) {
  if (!consistent(literals_))
    throw std::invalid_argument("inconsistent believed literal set");
}

bool BelievedLiteralSet::operator<(const BelievedLiteralSet& o) const {
  if (literals_.size() != o.literals_.size())
    return literals_.size() < o.literals_.size();
  return literals_ < o.literals_;
}

namespace {

std::string subst_name(const TermPtr& t,
                       const std::map<std::string, std::string>& asg) {
  if (t->is_variable()) {
    auto it = asg.find(t->var);
    if (it == asg.end())
      throw std::invalid_argument("unbound variable in grounding: " + t->var);
    return it->second;
  }
  if (!t->args.empty())
    throw std::invalid_argument("non-constant term in core ASP grounding");
  return t->func->name;
}

GroundAtom subst_atom(const AtomRef& a,
                      const std::map<std::string, std::string>& asg) {
  GroundAtom out{a.pred, {}};
  for (const auto& t : a.args) out.args.push_back(subst_name(t, asg));
  return out;
}

}  // namespace

std::vector<GroundRule> ground(const AspProgram& p,
                               const std::vector<TermPtr>& universe) {
  std::vector<std::string> consts;
  for (const auto& t : universe) {
    if (t->is_variable() || !t->args.empty())
      throw std::invalid_argument("universe must consist of constants");
    consts.push_back(t->func->name);
  }
  std::vector<GroundRule> out;
  for (const auto& r : p.rules) {
    std::set<std::string> vs = rule_vars(r);
    std::vector<std::string> vars(vs.begin(), vs.end());
    if (!vars.empty() && consts.empty())
      throw std::invalid_argument("cannot ground variables over empty universe");
    for (const Tuple& idx :
         all_tuples(std::max<size_t>(consts.size(), 1),
                    static_cast<int>(vars.size()))) {
      std::map<std::string, std::string> asg;
      for (size_t i = 0; i < vars.size(); ++i) asg[vars[i]] = consts[idx[i]];
      bool dropped = false;
      for (const auto& [l, rgt] : r.diseqs) {
        if (subst_name(l, asg) == subst_name(rgt, asg)) {
          dropped = true;  // t != t can never fire
          break;
        }
      }
      if (dropped) continue;
      GroundRule g;
      switch (r.kind) {
        case AspRuleKind::Normal: g.head_kind = GroundHead::Literal; break;
        case AspRuleKind::Choice: g.head_kind = GroundHead::Choice; break;
        case AspRuleKind::Constraint: g.head_kind = GroundHead::None; break;
      }
      if (r.head) g.head = GroundLiteral{subst_atom(*r.head, asg), true};
      for (const auto& a : r.pos_body)
        g.pos_body.push_back({subst_atom(a, asg), true});
      for (const auto& a : r.neg_body)
        g.neg_body.push_back({subst_atom(a, asg), true});
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<GroundRule> reduct(const std::vector<GroundRule>& rules,
                               const BelievedLiteralSet& x) {
  std::vector<GroundRule> out;
  for (const auto& r : rules) {
    bool blocked = false;
    for (const auto& l : r.neg_body)
      if (x.contains(l)) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    if (r.head_kind == GroundHead::Choice && !x.contains(*r.head)) continue;
    GroundRule g;
    g.head_kind =
        r.head_kind == GroundHead::None ? GroundHead::None : GroundHead::Literal;
    g.head = r.head;
    g.pos_body = r.pos_body;
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

// Subset-least model of the definite (headed) rules of a reduct; nullopt if
// closure is inconsistent. Constraints are ignored here.
std::optional<std::set<GroundLiteral>> least_model(
    const std::vector<GroundRule>& definite) {
  std::set<GroundLiteral> m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : definite) {
      if (r.head_kind == GroundHead::None) continue;
      bool fires = true;
      for (const auto& l : r.pos_body)
        if (!m.count(l)) {
          fires = false;
          break;
        }
      if (fires && m.insert(*r.head).second) changed = true;
    }
  }
  if (!BelievedLiteralSet::consistent(m)) return std::nullopt;
  return m;
}

bool violates_constraint(const std::vector<GroundRule>& red,
                         const std::set<GroundLiteral>& m) {
  for (const auto& r : red) {
    if (r.head_kind != GroundHead::None) continue;
    bool fires = true;
    for (const auto& l : r.pos_body)
      if (!m.count(l)) {
        fires = false;
        break;
      }
    if (fires) return true;
  }
  return false;
}

}  // namespace

std::vector<BelievedLiteralSet> stable_sets(
    const std::vector<GroundRule>& rules, uint64_t cap) {
  // Upper bound on any stable set: close under all headed rules, ignoring
  // negative bodies (choice heads count as derivable).
  std::set<GroundLiteral> upper;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (!r.head || upper.count(*r.head)) continue;
      bool fires = true;
      for (const auto& l : r.pos_body)
        if (!upper.count(l)) {
          fires = false;
          break;
        }
      if (fires) {
        upper.insert(*r.head);
        changed = true;
      }
    }
  }

  // Rules whose positive body falls outside the bound can never fire.
  std::vector<GroundRule> active;
  for (const auto& r : rules) {
    bool live = true;
    for (const auto& l : r.pos_body)
      if (!upper.count(l)) {
        live = false;
        break;
      }
    if (live) active.push_back(r);
  }

  // The reduct depends only on membership of choice heads and negative-body
  // literals, so it suffices to guess those.
  std::set<GroundLiteral> relevant;
  for (const auto& r : active) {
    if (r.head_kind == GroundHead::Choice) relevant.insert(*r.head);
    for (const auto& l : r.neg_body)
      if (upper.count(l)) relevant.insert(l);
  }
  std::vector<GroundLiteral> rel(relevant.begin(), relevant.end());
  if (rel.size() >= 63 || (uint64_t(1) << rel.size()) > cap)
    throw EnumerationCapExceeded(cap);

  std::vector<BelievedLiteralSet> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << rel.size()); ++mask) {
    std::set<GroundLiteral> guess;
    for (size_t i = 0; i < rel.size(); ++i)
      if (mask & (uint64_t(1) << i)) guess.insert(rel[i]);
    if (!BelievedLiteralSet::consistent(guess)) continue;
    auto red = reduct(active, BelievedLiteralSet(guess));
    auto lm = least_model(red);
    if (!lm) continue;
    // The guess must reproduce itself in the least model.
    bool matches = true;
    for (const auto& l : rel)
      if ((guess.count(l) > 0) != (lm->count(l) > 0)) {
        matches = false;
        break;
      }
    if (!matches) continue;
    if (violates_constraint(red, *lm)) continue;
    out.emplace_back(std::move(*lm));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Structure> answer_sets(const AspProgram& p, uint64_t cap) {
  std::vector<std::string> consts;
  for (const auto& f : p.vocabulary.functions()) {
    if (f.arity > 0)
      throw std::invalid_argument(
          "answer sets require a constants-only program");
    consts.push_back(f.name);
  }
  std::sort(consts.begin(), consts.end());
  std::vector<TermPtr> universe;
  for (const auto& c : consts) universe.push_back(mk_const(c));
  std::vector<std::string> domain =
      consts.empty() ? std::vector<std::string>{"o"} : consts;
  std::vector<TermPtr> ground_universe = universe;
  if (universe.empty()) ground_universe.push_back(mk_const("o"));

  auto rules = ground(p, ground_universe);
  auto sets = stable_sets(rules, cap);

  std::vector<Structure> out;
  for (const auto& x : sets) {
    Structure s(domain, p.vocabulary);
    for (const auto& c : consts)
      s.set_func_table(Symbol{c, 0, SymbolKind::Function},
                       {{{}, s.element(c)}});
    for (const auto& l : x.literals()) {
      Tuple t;
      for (const auto& a : l.atom.args) t.push_back(s.element(a));
      s.add_pred_tuple(l.atom.pred, t);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace aspfo
