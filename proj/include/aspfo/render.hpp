// Natural-language readings of formal objects under an intended
// interpretation, in four regimes: standard FO, the non-standard (negated)
// FO reading, the epistemic reading of ground programs, and the modular
// reading of theories.

#ifndef ASPFO_RENDER_HPP
#define ASPFO_RENDER_HPP

#include "aspfo/frontend.hpp"
#include "aspfo/groundelp.hpp"
#include "aspfo/structure.hpp"
#include "aspfo/syntax.hpp"

namespace aspfo {

enum class Regime { Fo, FoNonstandard, Gl, Tarskian };

struct Rendering {
  std::string text;
  Regime regime;
};

struct RenderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standard reading: "and", "or ... (or both)", "it is not the case that",
// "if ..., then ...", "for all x in the universe of discourse, ...".
Rendering render_fo(const FormulaPtr& f, const IntendedInterpretation& i);
Rendering render_fo(const AspFoTheory& t, const IntendedInterpretation& i);

// Negated reading: atoms denied, "and"/"or" and the quantifiers swapped,
// equality read as "are not the same", theories joined by "or".
Rendering render_fo_nonstandard(const FormulaPtr& f,
                                const IntendedInterpretation& i);
Rendering render_fo_nonstandard(const AspFoTheory& t,
                                const IntendedInterpretation& i);

// Epistemic reading of ground rules and programs: "the agent does not know
// that ...", "All the agent knows is:". Non-ground rules are rendered
// schematically with a "for every x," prefix and flagged as such.
Rendering render_gl(const GroundRule& r, const IntendedInterpretation& i);
Rendering render_gl(const std::vector<GroundRule>& program,
                    const IntendedInterpretation& i);
Rendering render_gl(const AspRule& r, const IntendedInterpretation& i);
Rendering render_gl(const AspProgram& p, const IntendedInterpretation& i);
// One belief sentence per literal in the set.
Rendering render_gl(const BelievedLiteralSet& x,
                    const IntendedInterpretation& i);
// Belief status of a single atom relative to a believed literal set.
std::string render_belief(const GroundAtom& a, const BelievedLiteralSet& x,
                          const IntendedInterpretation& i);

// Modular reading of theories: T-modules via the standard reading, G-modules
// via the exceptions idiom, D-modules as (inductive) definitions, theories
// joined by "and".
Rendering render_tarskian(const Module& m, const IntendedInterpretation& i);
Rendering render_tarskian(const AspFoTheory& t,
                          const IntendedInterpretation& i);

// One-line satisfaction-claim sentences.
std::string render_sat_claim(const std::string& theory_name,
                             const std::string& structure_name);
std::string render_unsat_claim_nonstandard(const std::string& theory_name,
                                           const std::string& structure_name);
std::string render_stable_claim(const std::string& set_name,
                                const std::string& program_name);

// Stylized structure summary: one line per predicate listing the tuples the
// template holds of.
std::string render_structure_summary(const Structure& s,
                                     const IntendedInterpretation& i);

}  // namespace aspfo

#endif
