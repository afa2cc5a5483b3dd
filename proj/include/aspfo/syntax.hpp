// Abstract syntax for terms, FO formulas, rules, ASP programs and ASP-FO theories.

#ifndef ASPFO_SYNTAX_HPP
#define ASPFO_SYNTAX_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace aspfo {

enum class SymbolKind { Predicate, Function };

struct Symbol {
  std::string name;
  int arity = 0;
  SymbolKind kind = SymbolKind::Predicate;

  auto operator<=>(const Symbol&) const = default;
};

std::string to_string(const Symbol& s);

// A name may not denote both a predicate and a function, and a (name, kind)
// pair has a single arity.
class Vocabulary {
public:
  Vocabulary() = default;

  // Throws std::invalid_argument on a name/arity clash.
  void add(const Symbol& s);

  bool contains(const Symbol& s) const { return symbols_.count(s) > 0; }
  std::optional<Symbol> find(const std::string& name) const;

  const std::set<Symbol>& symbols() const { return symbols_; }
  std::set<Symbol> predicates() const;
  std::set<Symbol> functions() const;

  bool subset_of(const Vocabulary& other) const;
  static Vocabulary merged(const Vocabulary& a, const Vocabulary& b);

private:
  std::set<Symbol> symbols_;
};

// ---------------------------------------------------------------------------
// Terms

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  // Variable when func is absent; otherwise an application (constants are
  // 0-ary applications).
  std::string var;
  std::optional<Symbol> func;
  std::vector<TermPtr> args;

  bool is_variable() const { return !func.has_value(); }
};

TermPtr mk_var(std::string name);
TermPtr mk_app(Symbol f, std::vector<TermPtr> args = {});
TermPtr mk_const(const std::string& name);

bool term_equal(const TermPtr& a, const TermPtr& b);
bool term_less(const TermPtr& a, const TermPtr& b);
bool term_is_ground(const TermPtr& t);
int term_depth(const TermPtr& t);
void collect_term_vars(const TermPtr& t, std::set<std::string>& out);
void collect_term_symbols(const TermPtr& t, std::set<Symbol>& out);

// ---------------------------------------------------------------------------
// Formulas

enum class FormulaKind {
  Atom,
  Equal,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Exists,
  Forall,
  True,
  False,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  // Atom
  std::optional<Symbol> pred;
  std::vector<TermPtr> args;  // Atom arguments or the two Equal sides
  // Connectives
  FormulaPtr lhs;
  FormulaPtr rhs;
  // Quantifiers
  std::string var;
};

FormulaPtr mk_atom(Symbol p, std::vector<TermPtr> args = {});
FormulaPtr mk_equal(TermPtr a, TermPtr b);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_exists(std::string var, FormulaPtr f);
FormulaPtr mk_forall(std::string var, FormulaPtr f);
FormulaPtr mk_true();
FormulaPtr mk_false();

// Conjunction / disjunction of a list; empty list gives the unit.
FormulaPtr mk_conj(const std::vector<FormulaPtr>& fs);
FormulaPtr mk_disj(const std::vector<FormulaPtr>& fs);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
std::set<std::string> free_vars(const FormulaPtr& f);
void collect_formula_symbols(const FormulaPtr& f, std::set<Symbol>& out);
std::set<Symbol> formula_symbols(const FormulaPtr& f);
std::set<Symbol> formula_predicates(const FormulaPtr& f);
bool is_sentence(const FormulaPtr& f);

// Predicates with at least one occurrence under an odd / even number of
// negations (Implies counts its antecedent as negative, Iff makes every
// occurrence both).
void polar_predicates(const FormulaPtr& f, bool positive, std::set<Symbol>& pos,
                      std::set<Symbol>& neg);

// ---------------------------------------------------------------------------
// Rules

struct AtomRef {
  Symbol pred;
  std::vector<TermPtr> args;
};

FormulaPtr atom_formula(const AtomRef& a);

// forall universals (head <- body); universals cover all free variables.
struct DefineRule {
  std::vector<std::string> universals;
  AtomRef head;
  FormulaPtr body;
};

struct ChoiceRule {
  std::vector<std::string> universals;
  AtomRef head;
  FormulaPtr body;
};

DefineRule make_define_rule(AtomRef head, FormulaPtr body);
ChoiceRule make_choice_rule(AtomRef head, FormulaPtr body);

// ---------------------------------------------------------------------------
// Core ASP

enum class AspRuleKind { Normal, Choice, Constraint };

struct AspRule {
  AspRuleKind kind = AspRuleKind::Normal;
  std::optional<AtomRef> head;  // absent for constraints
  std::vector<AtomRef> pos_body;
  std::vector<AtomRef> neg_body;
  // X != Y body conditions, sugar for ~(X = Y) after translation
  std::vector<std::pair<TermPtr, TermPtr>> diseqs;
};

struct AspProgram {
  std::vector<AspRule> rules;
  Vocabulary vocabulary;
};

std::set<std::string> rule_vars(const AspRule& r);

// ---------------------------------------------------------------------------
// ASP-FO modules

struct GModule {
  Symbol head_predicate;
  std::vector<ChoiceRule> rules;
};

// Throws std::invalid_argument if rules mix head predicates or the head
// predicate occurs in a body.
GModule make_gmodule(std::vector<ChoiceRule> rules);
GModule make_gmodule(Symbol head, std::vector<ChoiceRule> rules);

struct DModule {
  std::set<Symbol> defined;
  std::vector<DefineRule> rules;
};

// defined defaults to hd(rules); may strictly contain it.
DModule make_dmodule(std::vector<DefineRule> rules);
DModule make_dmodule(std::set<Symbol> defined, std::vector<DefineRule> rules);

struct TModule {
  FormulaPtr sentence;  // closed
};

TModule make_tmodule(FormulaPtr sentence);

struct HerbrandModule {
  std::set<Symbol> functions;
};

using Module = std::variant<GModule, DModule, TModule, HerbrandModule>;

struct AspFoTheory {
  std::vector<Module> modules;

  // Predicates specified by more than one G/D module (advisory, not an error).
  std::vector<Symbol> shared_specified_predicates() const;
  Vocabulary vocabulary() const;
};

// hd: head predicates of a rule list.
std::set<Symbol> hd(const std::vector<DefineRule>& rules);
std::set<Symbol> hd(const std::vector<AspRule>& rules);

// Parameter symbols: all symbols in the rules other than the defined predicates.
std::set<Symbol> pars(const DModule& d);

Vocabulary module_vocabulary(const Module& m);

}  // namespace aspfo

#endif
