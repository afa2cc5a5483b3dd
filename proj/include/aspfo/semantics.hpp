// Module and theory semantics: G/D/T/Herbrand satisfaction, completion,
// parameterized stable and well-founded models, model enumeration.

#ifndef ASPFO_SEMANTICS_HPP
#define ASPFO_SEMANTICS_HPP

#include <optional>

#include "aspfo/foeval.hpp"
#include "aspfo/structure.hpp"
#include "aspfo/syntax.hpp"

namespace aspfo {

bool sat_tmodule(const Structure& s, const TModule& t);

// Every true head tuple must be licensed by some rule instance whose body
// holds in s.
bool sat_gmodule(const Structure& s, const GModule& g);

// Completion of a G-module into a single FO sentence
// !Y1..Yn: (P(Y1..Yn) => disjunction of per-rule existential bodies);
// the empty disjunction is false.
FormulaPtr gcompl(const GModule& g);

struct StableResult {
  std::optional<Structure> stable;            // over Def(d)
  std::vector<Structure> witness_chain;       // increasing fixpoint iterates
};

// The least structure A over the defined predicates such that the pair
// (params o A, params o m) satisfies every rule; computed by monotone
// iteration from all-false. The chain of iterates is recorded.
StableResult least_fixpoint_chain(const DModule& d, const Structure& params,
                                  const Structure& m);
Structure least_fixpoint(const DModule& d, const Structure& params,
                         const Structure& m);

// All M over Def(d) with M = least_fixpoint(d, params, M), in deterministic
// enumeration order.
std::vector<Structure> stable_models(const DModule& d, const Structure& params,
                                     uint64_t cap = kDefaultEnumerationCap);

struct WellFoundedResult {
  PartialStructure ps;  // over Def(d)
  bool total = false;
};

// Alternating fixpoint of Gamma(m) = least_fixpoint(d, params, m):
// lower = lfp(Gamma o Gamma), upper = Gamma(lower).
WellFoundedResult well_founded(const DModule& d, const Structure& params);

bool sat_module(const Structure& s, const Module& m);
bool sat_theory(const Structure& s, const AspFoTheory& t);

// All models of the theory among the expansions of carrier (which must
// interpret exactly the function symbols of the theory's vocabulary).
void models_over_carrier(const AspFoTheory& t, const Structure& carrier,
                         const StructureSink& sink,
                         uint64_t cap = kDefaultEnumerationCap);

// All Herbrand models (constants-only vocabulary).
void models_herbrand(const AspFoTheory& t, const StructureSink& sink,
                     uint64_t cap = kDefaultEnumerationCap);

struct HerbrandEmulation {
  Symbol universe_pred;          // fresh unary predicate
  DModule dmodule;               // closure rules for the universe predicate
  TModule tmodule;               // everything is in the universe
  std::vector<FormulaPtr> una;   // unique-names sentences
};

HerbrandEmulation herbrand_emulation(const HerbrandModule& h);

// Helpers shared with other modules.
Vocabulary predicate_vocabulary(const std::set<Symbol>& preds);
Structure all_false_structure(const std::vector<std::string>& domain,
                              const std::set<Symbol>& preds);

}  // namespace aspfo

#endif
