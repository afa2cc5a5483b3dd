// Ground extended logic programs: believed literal sets, reduct, stable
// models; grounding of core ASP programs and an answer-set oracle.

#ifndef ASPFO_GROUNDELP_HPP
#define ASPFO_GROUNDELP_HPP

#include <compare>
#include <optional>

#include "aspfo/structure.hpp"
#include "aspfo/syntax.hpp"

namespace aspfo {

struct GroundAtom {
  Symbol pred;
  std::vector<std::string> args;  // constant names

  auto operator<=>(const GroundAtom&) const = default;
};

std::string to_string(const GroundAtom& a);

// positive: A; negative: strong negation ¬A (written -A).
struct GroundLiteral {
  GroundAtom atom;
  bool positive = true;

  auto operator<=>(const GroundLiteral&) const = default;
  GroundLiteral complement() const { return {atom, !positive}; }
};

std::string to_string(const GroundLiteral& l);

enum class GroundHead { Literal, Choice, None };

struct GroundRule {
  GroundHead head_kind = GroundHead::Literal;
  std::optional<GroundLiteral> head;  // present unless None; Choice: positive
  std::vector<GroundLiteral> pos_body;
  std::vector<GroundLiteral> neg_body;  // under default negation `not`
};

class BelievedLiteralSet {
public:
  BelievedLiteralSet() = default;
  explicit BelievedLiteralSet(std::set<GroundLiteral> literals);

  const std::set<GroundLiteral>& literals() const { return literals_; }
  bool contains(const GroundLiteral& l) const { return literals_.count(l); }
  bool operator==(const BelievedLiteralSet&) const = default;
  bool operator<(const BelievedLiteralSet& o) const;  // cardinality, then lex

  static bool consistent(const std::set<GroundLiteral>& ls);

private:
  std::set<GroundLiteral> literals_;
};

// Instantiates every rule over all assignments of its variables to the
// universe (constant terms). `!=` conditions with syntactically equal
// instances drop the rule instance; distinct instances drop the condition.
std::vector<GroundRule> ground(const AspProgram& p,
                               const std::vector<TermPtr>& universe);

// Gelfond-Lifschitz reduct: rules with a default-negated literal in x are
// dropped; choice rules additionally require their head in x. Constraints
// are kept (headless) for later checking.
std::vector<GroundRule> reduct(const std::vector<GroundRule>& rules,
                               const BelievedLiteralSet& x);

// All consistent X that are subset-least models of their reduct and violate
// no constraint; ordered by cardinality then lexicographically.
std::vector<BelievedLiteralSet> stable_sets(
    const std::vector<GroundRule>& rules,
    uint64_t cap = kDefaultEnumerationCap);

// Answer sets of a constants-only core ASP program, as Herbrand structures.
// A program without constants is grounded over the dummy element "o".
std::vector<Structure> answer_sets(const AspProgram& p,
                                   uint64_t cap = kDefaultEnumerationCap);

}  // namespace aspfo

#endif
