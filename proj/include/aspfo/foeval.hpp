// FO evaluation: two-valued satisfaction, pair satisfaction, Kleene
// three-valued evaluation and bounded-exhaustive 3-equivalence checking.

#ifndef ASPFO_FOEVAL_HPP
#define ASPFO_FOEVAL_HPP

#include <optional>

#include "aspfo/structure.hpp"
#include "aspfo/syntax.hpp"

namespace aspfo {

Elem eval_term(const TermPtr& t, const Structure& s, const Environment& env);

bool sat(const Structure& s, const FormulaPtr& f, const Environment& env = {});

// Positive atom occurrences read in a, negative ones in b; negation swaps
// the pair. Implication and equivalence are desugared to ~,&,| first.
bool pair_sat(const Structure& a, const Structure& b, const FormulaPtr& f,
              const Environment& env = {});

TruthValue3 eval3(const PartialStructure& ps, const FormulaPtr& f,
                  const Environment& env = {});

struct Equiv3Result {
  bool equivalent = true;
  int max_domain = 0;
  // Counterexample, present iff !equivalent.
  std::optional<PartialStructure> witness;
  Environment env;
  TruthValue3 lhs_value = TruthValue3::Unknown;
  TruthValue3 rhs_value = TruthValue3::Unknown;
};

// Exhaustive over all three-valued structures with domains of size
// 1..max_domain and all assignments to shared free variables.
Equiv3Result equiv3(const FormulaPtr& f, const FormulaPtr& g, int max_domain,
                    uint64_t cap = kDefaultEnumerationCap);

// All three-valued structures (lower <= upper pairs) over voc and a domain
// {d1..dn}; used by equiv3 and the test suites.
using PartialSink = std::function<bool(const PartialStructure&)>;
void all_partial_structures(int domain_size, const Vocabulary& voc,
                            const PartialSink& sink,
                            uint64_t cap = kDefaultEnumerationCap);

}  // namespace aspfo

#endif
