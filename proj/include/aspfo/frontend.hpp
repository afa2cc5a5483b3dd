// Concrete syntax: parsers and serializers for ASP programs, ASP-FO theories,
// finite structures and intended interpretations.

#ifndef ASPFO_FRONTEND_HPP
#define ASPFO_FRONTEND_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "aspfo/structure.hpp"
#include "aspfo/syntax.hpp"

namespace aspfo {

struct SourceSpan {
  std::string file;
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 0;
};

class ParseError : public std::runtime_error {
public:
  ParseError(SourceSpan span, std::string message,
             std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

// Natural-language templates keyed by symbol; placeholders #1..#arity.
struct IntendedInterpretation {
  std::map<Symbol, std::string> templates;

  const std::string& lookup(const Symbol& s) const;  // throws if missing
};

AspProgram parse_program(const std::string& text,
                         const std::string& file = "<input>");
AspFoTheory parse_theory(const std::string& text,
                         const std::string& file = "<input>");
Structure parse_structure(const std::string& text, const Vocabulary& voc,
                          const std::string& file = "<input>");
IntendedInterpretation parse_interpretation(const std::string& text,
                                            const std::string& file = "<input>");

std::string print_term(const TermPtr& t);
std::string print_formula(const FormulaPtr& f);
std::string print_program(const AspProgram& p);
std::string print_theory(const AspFoTheory& t);
std::string print_structure(const Structure& s);
std::string print_interpretation(const IntendedInterpretation& i);

// Convenience for tests and the CLI: parse a bare FO formula (may have free
// variables) in the theory syntax.
FormulaPtr parse_formula(const std::string& text,
                         const std::string& file = "<input>");

}  // namespace aspfo

#endif
