// Positive predicate dependency graph, (proper) splittings, the ASP-FO
// translation, and the dual-enumeration equivalence checker.

#ifndef ASPFO_SPLITTING_HPP
#define ASPFO_SPLITTING_HPP

#include <optional>

#include "aspfo/groundelp.hpp"
#include "aspfo/structure.hpp"
#include "aspfo/syntax.hpp"

namespace aspfo {

struct DependencyGraph {
  std::set<Symbol> nodes;
  std::set<std::pair<Symbol, Symbol>> edges;  // head -> non-negated body
};

DependencyGraph dep_graph(const AspProgram& p);

// Non-zero-length path from a to b.
bool positively_depends(const DependencyGraph& g, const Symbol& a,
                        const Symbol& b);

enum class PartKind { Choice, Define, Constraint };

struct SplitPart {
  PartKind kind;
  std::vector<size_t> rule_indices;  // into the program's rule list
};

struct ProperSplitting {
  std::vector<SplitPart> parts;
};

struct SplittingResult {
  std::optional<ProperSplitting> splitting;
  std::string failure;  // violated clause when no proper splitting exists
};

// Finest partition: constraints are singletons; rules grouped by the SCC of
// their head predicate in the positive dependency graph.
SplittingResult finest_proper_splitting(const AspProgram& p);

// Clause-by-clause checker; empty result means sp is a proper splitting.
std::vector<std::string> splitting_violations(const AspProgram& p,
                                              const ProperSplitting& sp);

// Theorem-5 translation: Herbrand module over the program's function
// symbols, one module per part, plus an empty D-module defining the
// predicates that head no rule.
AspFoTheory to_aspfo(const AspProgram& p, const ProperSplitting& sp);

struct VerifyReport {
  bool proper = false;
  std::string failure;
  bool equal = false;
  size_t answer_set_count = 0;
  size_t model_count = 0;
  std::optional<Structure> witness;  // structure on one side only

  std::string to_lines() const;  // machine-readable KEY: value records
  std::string to_text() const;
};

// Compares the ground-elp answer sets of p with the Herbrand models of its
// ASP-FO translation.
VerifyReport verify_split(const AspProgram& p,
                          uint64_t cap = kDefaultEnumerationCap);

}  // namespace aspfo

#endif
