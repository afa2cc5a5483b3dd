#include "aspfo/syntax.hpp"

#include <algorithm>

namespace aspfo {

std::string to_string(const Symbol& s) {
  return s.name + "/" + std::to_string(s.arity);
}

void Vocabulary::add(const Symbol& s) {
  if (s.arity < 0) throw std::invalid_argument("negative arity for " + s.name);
  for (const auto& t : symbols_) {
    if (t.name != s.name) continue;
    if (t.kind != s.kind)
      throw std::invalid_argument("symbol '" + s.name +
                                  "' used as both predicate and function");
    if (t.arity != s.arity)
      throw std::invalid_argument("arity clash for symbol '" + s.name + "': " +
                                  std::to_string(t.arity) + " vs " +
                                  std::to_string(s.arity));
  }
  symbols_.insert(s);
}

std::optional<Symbol> Vocabulary::find(const std::string& name) const {
  for (const auto& s : symbols_)
    if (s.name == name) return s;
  return std::nullopt;
}

std::set<Symbol> Vocabulary::predicates() const {
  std::set<Symbol> out;
  for (const auto& s : symbols_)
    if (s.kind == SymbolKind::Predicate) out.insert(s);
  return out;
}

std::set<Symbol> Vocabulary::functions() const {
  std::set<Symbol> out;
  for (const auto& s : symbols_)
    if (s.kind == SymbolKind::Function) out.insert(s);
  return out;
}

bool Vocabulary::subset_of(const Vocabulary& other) const {
  return std::includes(other.symbols_.begin(), other.symbols_.end(),
                       symbols_.begin(), symbols_.end());
}

Vocabulary Vocabulary::merged(const Vocabulary& a, const Vocabulary& b) {
  Vocabulary v = a;
  for (const auto& s : b.symbols()) v.add(s);
  return v;
}

// ---------------------------------------------------------------------------

TermPtr mk_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->var = std::move(name);
  return t;
}

TermPtr mk_app(Symbol f, std::vector<TermPtr> args) {
  if (f.kind != SymbolKind::Function)
    throw std::invalid_argument("term head must be a function symbol");
  if (static_cast<int>(args.size()) != f.arity)
    throw std::invalid_argument("arity mismatch applying " + to_string(f));
  auto t = std::make_shared<Term>();
  t->func = std::move(f);
  t->args = std::move(args);
  return t;
}

TermPtr mk_const(const std::string& name) {
  return mk_app(Symbol{name, 0, SymbolKind::Function});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->is_variable() != b->is_variable()) return false;
  if (a->is_variable()) return a->var == b->var;
  if (*a->func != *b->func) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!term_equal(a->args[i], b->args[i])) return false;
  return true;
}

bool term_less(const TermPtr& a, const TermPtr& b) {
  if (a->is_variable() != b->is_variable()) return a->is_variable();
  if (a->is_variable()) return a->var < b->var;
  if (*a->func != *b->func) return *a->func < *b->func;
  for (size_t i = 0; i < a->args.size(); ++i) {
    if (term_less(a->args[i], b->args[i])) return true;
    if (term_less(b->args[i], a->args[i])) return false;
  }
  return false;
}

bool term_is_ground(const TermPtr& t) {
  if (t->is_variable()) return false;
  for (const auto& a : t->args)
    if (!term_is_ground(a)) return false;
  return true;
}

int term_depth(const TermPtr& t) {
  if (t->is_variable()) return 0;
  int d = 0;
  for (const auto& a : t->args) d = std::max(d, term_depth(a));
  return d + 1;
}

void collect_term_vars(const TermPtr& t, std::set<std::string>& out) {
  if (t->is_variable()) {
    out.insert(t->var);
    return;
  }
  for (const auto& a : t->args) collect_term_vars(a, out);
}

void collect_term_symbols(const TermPtr& t, std::set<Symbol>& out) {
  if (t->is_variable()) return;
  out.insert(*t->func);
  for (const auto& a : t->args) collect_term_symbols(a, out);
}

// ---------------------------------------------------------------------------

FormulaPtr mk_atom(Symbol p, std::vector<TermPtr> args) {
  if (p.kind != SymbolKind::Predicate)
    throw std::invalid_argument("atom head must be a predicate symbol");
  if (static_cast<int>(args.size()) != p.arity)
    throw std::invalid_argument("arity mismatch for atom " + to_string(p));
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Atom;
  f->pred = std::move(p);
  f->args = std::move(args);
  return f;
}

FormulaPtr mk_equal(TermPtr a, TermPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Equal;
  f->args = {std::move(a), std::move(b)};
  return f;
}

static FormulaPtr unary(FormulaKind k, FormulaPtr x) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(x);
  return f;
}

static FormulaPtr binary(FormulaKind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

FormulaPtr mk_not(FormulaPtr f) { return unary(FormulaKind::Not, std::move(f)); }
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::And, std::move(a), std::move(b));
}
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Or, std::move(a), std::move(b));
}
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Implies, std::move(a), std::move(b));
}
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Iff, std::move(a), std::move(b));
}

static FormulaPtr quant(FormulaKind k, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->var = std::move(var);
  f->lhs = std::move(body);
  return f;
}

FormulaPtr mk_exists(std::string var, FormulaPtr f) {
  return quant(FormulaKind::Exists, std::move(var), std::move(f));
}
FormulaPtr mk_forall(std::string var, FormulaPtr f) {
  return quant(FormulaKind::Forall, std::move(var), std::move(f));
}

FormulaPtr mk_true() {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::True;
  return f;
}

FormulaPtr mk_false() {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::False;
  return f;
}

FormulaPtr mk_conj(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return mk_true();
  FormulaPtr acc = fs.front();
  for (size_t i = 1; i < fs.size(); ++i) acc = mk_and(acc, fs[i]);
  return acc;
}

FormulaPtr mk_disj(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return mk_false();
  FormulaPtr acc = fs.front();
  for (size_t i = 1; i < fs.size(); ++i) acc = mk_or(acc, fs[i]);
  return acc;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return true;
    case FormulaKind::Atom:
      if (*a->pred != *b->pred) return false;
      [[fallthrough]];
    case FormulaKind::Equal:
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
      return true;
    case FormulaKind::Not:
      return formula_equal(a->lhs, b->lhs);
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return a->var == b->var && formula_equal(a->lhs, b->lhs);
    default:
      return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
  }
}

static void free_vars_rec(const FormulaPtr& f, std::set<std::string> bound,
                          std::set<std::string>& out) {
  switch (f->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Equal: {
      std::set<std::string> vs;
      for (const auto& t : f->args) collect_term_vars(t, vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      break;
    }
    case FormulaKind::Not:
      free_vars_rec(f->lhs, bound, out);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      bound.insert(f->var);
      free_vars_rec(f->lhs, bound, out);
      break;
    case FormulaKind::True:
    case FormulaKind::False:
      break;
    default:
      free_vars_rec(f->lhs, bound, out);
      free_vars_rec(f->rhs, bound, out);
  }
}

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  free_vars_rec(f, {}, out);
  return out;
}

void collect_formula_symbols(const FormulaPtr& f, std::set<Symbol>& out) {
  switch (f->kind) {
    case FormulaKind::Atom:
      out.insert(*f->pred);
      [[fallthrough]];
    case FormulaKind::Equal:
      for (const auto& t : f->args) collect_term_symbols(t, out);
      break;
    case FormulaKind::Not:
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      collect_formula_symbols(f->lhs, out);
      break;
    case FormulaKind::True:
    case FormulaKind::False:
      break;
    default:
      collect_formula_symbols(f->lhs, out);
      collect_formula_symbols(f->rhs, out);
  }
}

std::set<Symbol> formula_symbols(const FormulaPtr& f) {
  std::set<Symbol> out;
  collect_formula_symbols(f, out);
  return out;
}

std::set<Symbol> formula_predicates(const FormulaPtr& f) {
  std::set<Symbol> out;
  for (const auto& s : formula_symbols(f))
    if (s.kind == SymbolKind::Predicate) out.insert(s);
  return out;
}

bool is_sentence(const FormulaPtr& f) { return free_vars(f).empty(); }

void polar_predicates(const FormulaPtr& f, bool positive, std::set<Symbol>& pos,
                      std::set<Symbol>& neg) {
  switch (f->kind) {
    case FormulaKind::Atom:
      (positive ? pos : neg).insert(*f->pred);
      break;
    case FormulaKind::Not:
      polar_predicates(f->lhs, !positive, pos, neg);
      break;
    case FormulaKind::Implies:
      polar_predicates(f->lhs, !positive, pos, neg);
      polar_predicates(f->rhs, positive, pos, neg);
      break;
    case FormulaKind::Iff:
      polar_predicates(f->lhs, positive, pos, neg);
      polar_predicates(f->lhs, !positive, pos, neg);
      polar_predicates(f->rhs, positive, pos, neg);
      polar_predicates(f->rhs, !positive, pos, neg);
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
      polar_predicates(f->lhs, positive, pos, neg);
      polar_predicates(f->rhs, positive, pos, neg);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      polar_predicates(f->lhs, positive, pos, neg);
      break;
    default:
      break;
  }
}

// ---------------------------------------------------------------------------

FormulaPtr atom_formula(const AtomRef& a) { return mk_atom(a.pred, a.args); }

static std::vector<std::string> closure_universals(const AtomRef& head,
                                                   const FormulaPtr& body) {
  std::set<std::string> vs;
  for (const auto& t : head.args) collect_term_vars(t, vs);
  for (const auto& v : free_vars(body)) vs.insert(v);
  return {vs.begin(), vs.end()};
}

DefineRule make_define_rule(AtomRef head, FormulaPtr body) {
  DefineRule r;
  r.universals = closure_universals(head, body);
  r.head = std::move(head);
  r.body = std::move(body);
  return r;
}

ChoiceRule make_choice_rule(AtomRef head, FormulaPtr body) {
  ChoiceRule r;
  r.universals = closure_universals(head, body);
  r.head = std::move(head);
  r.body = std::move(body);
  return r;
}

std::set<std::string> rule_vars(const AspRule& r) {
  std::set<std::string> vs;
  if (r.head)
    for (const auto& t : r.head->args) collect_term_vars(t, vs);
  for (const auto& a : r.pos_body)
    for (const auto& t : a.args) collect_term_vars(t, vs);
  for (const auto& a : r.neg_body)
    for (const auto& t : a.args) collect_term_vars(t, vs);
  for (const auto& [l, rr] : r.diseqs) {
    collect_term_vars(l, vs);
    collect_term_vars(rr, vs);
  }
  return vs;
}

// ---------------------------------------------------------------------------

GModule make_gmodule(std::vector<ChoiceRule> rules) {
  if (rules.empty())
    throw std::invalid_argument("cannot infer head predicate of empty gmodule");
  Symbol head = rules.front().head.pred;
  return make_gmodule(std::move(head), std::move(rules));
}

GModule make_gmodule(Symbol head, std::vector<ChoiceRule> rules) {
  for (const auto& r : rules) {
    if (r.head.pred != head)
      throw std::invalid_argument(
          "gmodule mixes head predicates: " + to_string(head) + " and " +
          to_string(r.head.pred));
    if (formula_predicates(r.body).count(head))
      throw std::invalid_argument("gmodule head predicate " + to_string(head) +
                                  " occurs in a rule body");
  }
  return GModule{std::move(head), std::move(rules)};
}

DModule make_dmodule(std::vector<DefineRule> rules) {
  std::set<Symbol> defined = hd(rules);
  return DModule{std::move(defined), std::move(rules)};
}

DModule make_dmodule(std::set<Symbol> defined, std::vector<DefineRule> rules) {
  for (const auto& r : rules)
    if (!defined.count(r.head.pred))
      throw std::invalid_argument("dmodule rule head " + to_string(r.head.pred) +
                                  " not in declared defined set");
  return DModule{std::move(defined), std::move(rules)};
}

TModule make_tmodule(FormulaPtr sentence) {
  if (!is_sentence(sentence))
    throw std::invalid_argument("tmodule sentence has free variables");
  return TModule{std::move(sentence)};
}

std::set<Symbol> hd(const std::vector<DefineRule>& rules) {
  std::set<Symbol> out;
  for (const auto& r : rules) out.insert(r.head.pred);
  return out;
}

std::set<Symbol> hd(const std::vector<AspRule>& rules) {
  std::set<Symbol> out;
  for (const auto& r : rules)
    if (r.head) out.insert(r.head->pred);
  return out;
}

std::set<Symbol> pars(const DModule& d) {
  std::set<Symbol> out;
  for (const auto& r : d.rules) {
    for (const auto& t : r.head.args) collect_term_symbols(t, out);
    collect_formula_symbols(r.body, out);
  }
  for (const auto& p : d.defined) out.erase(p);
  return out;
}

Vocabulary module_vocabulary(const Module& m) {
  Vocabulary v;
  if (const auto* g = std::get_if<GModule>(&m)) {
    v.add(g->head_predicate);
    for (const auto& r : g->rules) {
      for (const auto& t : r.head.args) {
        std::set<Symbol> ss;
        collect_term_symbols(t, ss);
        for (const auto& s : ss) v.add(s);
      }
      for (const auto& s : formula_symbols(r.body)) v.add(s);
    }
  } else if (const auto* d = std::get_if<DModule>(&m)) {
    for (const auto& s : d->defined) v.add(s);
    for (const auto& s : pars(*d)) v.add(s);
  } else if (const auto* t = std::get_if<TModule>(&m)) {
    for (const auto& s : formula_symbols(t->sentence)) v.add(s);
  } else if (const auto* h = std::get_if<HerbrandModule>(&m)) {
    for (const auto& s : h->functions) v.add(s);
  }
  return v;
}

std::vector<Symbol> AspFoTheory::shared_specified_predicates() const {
  std::map<Symbol, int> counts;
  for (const auto& m : modules) {
    if (const auto* g = std::get_if<GModule>(&m)) {
      counts[g->head_predicate]++;
    } else if (const auto* d = std::get_if<DModule>(&m)) {
      for (const auto& p : d->defined) counts[p]++;
    }
  }
  std::vector<Symbol> out;
  for (const auto& [s, n] : counts)
    if (n > 1) out.push_back(s);
  return out;
}

Vocabulary AspFoTheory::vocabulary() const {
  Vocabulary v;
  for (const auto& m : modules) v = Vocabulary::merged(v, module_vocabulary(m));
  return v;
}

}  // namespace aspfo
