// Python bindings for the core operations: parsing, model enumeration,
// stable/well-founded models, splitting verification, three-valued
// equivalence and natural-language rendering.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aspfo/foeval.hpp"
#include "aspfo/frontend.hpp"
#include "aspfo/groundelp.hpp"
#include "aspfo/render.hpp"
#include "aspfo/semantics.hpp"
#include "aspfo/splitting.hpp"

namespace py = pybind11;
using namespace aspfo;

namespace {

const DModule& only_dmodule(const AspFoTheory& t) {
  const DModule* found = nullptr;
  for (const auto& m : t.modules)
    if (auto* d = std::get_if<DModule>(&m)) {
      if (found) throw std::invalid_argument("theory has several D-modules");
      found = d;
    }
  if (!found) throw std::invalid_argument("theory has no D-module");
  return *found;
}

Structure params_for(const DModule& d, const std::string& text) {
  Vocabulary voc;
  for (const auto& s : pars(d)) voc.add(s);
  return parse_structure(text, voc);
}

std::vector<Structure> collect_models(const AspFoTheory& t, uint64_t cap) {
  std::vector<Structure> out;
  models_herbrand(t, [&](const Structure& s) {
    out.push_back(s);
    return true;
  }, cap);
  return out;
}

std::string render_text(const std::string& regime,
                        const IntendedInterpretation& interp,
                        const std::string& input) {
  auto as_formula_or_theory = [&](auto fo, auto th) {
    try {
      AspFoTheory t = parse_theory(input);
      return th(t);
    } catch (const ParseError&) {
      return fo(parse_formula(input));
    }
  };
  if (regime == "fo")
    return as_formula_or_theory(
        [&](const FormulaPtr& f) { return render_fo(f, interp).text; },
        [&](const AspFoTheory& t) { return render_fo(t, interp).text; });
  if (regime == "fo-neg")
    return as_formula_or_theory(
        [&](const FormulaPtr& f) {
          return render_fo_nonstandard(f, interp).text;
        },
        [&](const AspFoTheory& t) {
          return render_fo_nonstandard(t, interp).text;
        });
  if (regime == "gl") return render_gl(parse_program(input), interp).text;
  if (regime == "tarskian")
    return render_tarskian(parse_theory(input), interp).text;
  throw std::invalid_argument("unknown regime '" + regime +
                              "' (expected fo, fo-neg, gl or tarskian)");
}

}  // namespace

PYBIND11_MODULE(pyaspfo, m) {
  m.doc() = "ASP-FO theories: parsing, semantics and readings";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<RenderError>(m, "RenderError");

  py::class_<Structure>(m, "Structure")
      .def_property_readonly("domain", &Structure::domain)
      .def("__eq__", [](const Structure& a, const Structure& b) { return a == b; })
      .def("__str__", [](const Structure& s) { return print_structure(s); })
      .def("__repr__", [](const Structure& s) {
        return "<Structure over {" + std::to_string(s.domain_size()) +
               " elements}>";
      });

  py::class_<AspProgram>(m, "Program")
      .def("__str__", [](const AspProgram& p) { return print_program(p); })
      .def_property_readonly("rule_count",
                             [](const AspProgram& p) { return p.rules.size(); });

  py::class_<AspFoTheory>(m, "Theory")
      .def("__str__", [](const AspFoTheory& t) { return print_theory(t); })
      .def_property_readonly("module_count", [](const AspFoTheory& t) {
        return t.modules.size();
      });

  py::class_<IntendedInterpretation>(m, "Interpretation")
      .def("__str__", [](const IntendedInterpretation& i) {
        return print_interpretation(i);
      });

  m.def("parse_program",
        [](const std::string& text) { return parse_program(text); },
        py::arg("text"));
  m.def("parse_theory",
        [](const std::string& text) { return parse_theory(text); },
        py::arg("text"));
  m.def("parse_interpretation",
        [](const std::string& text) { return parse_interpretation(text); },
        py::arg("text"));
  m.def("parse_structure",
        [](const std::string& text, const AspFoTheory& t) {
          return parse_structure(text, t.vocabulary());
        },
        py::arg("text"), py::arg("theory"));

  m.def("answer_sets",
        [](const AspProgram& p, uint64_t cap) { return answer_sets(p, cap); },
        py::arg("program"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("herbrand_models", &collect_models, py::arg("theory"),
        py::arg("cap") = kDefaultEnumerationCap);

  m.def("stable_models",
        [](const AspFoTheory& t, const std::string& params, uint64_t cap) {
          const DModule& d = only_dmodule(t);
          return stable_models(d, params_for(d, params), cap);
        },
        py::arg("theory"), py::arg("params"),
        py::arg("cap") = kDefaultEnumerationCap,
        "Stable models of the theory's single D-module for the parameter "
        "structure given in the structure syntax.");
  m.def("well_founded",
        [](const AspFoTheory& t, const std::string& params) {
          const DModule& d = only_dmodule(t);
          auto wf = well_founded(d, params_for(d, params));
          return py::make_tuple(wf.total, wf.ps.lower(), wf.ps.upper());
        },
        py::arg("theory"), py::arg("params"),
        "Returns (total, lower, upper).");

  m.def("verify_split",
        [](const AspProgram& p, uint64_t cap) {
          VerifyReport r = verify_split(p, cap);
          py::dict out;
          out["proper"] = r.proper;
          out["equal"] = r.equal;
          out["failure"] = r.failure;
          out["answer_sets"] = r.answer_set_count;
          out["models"] = r.model_count;
          out["report"] = r.to_lines();
          return out;
        },
        py::arg("program"), py::arg("cap") = kDefaultEnumerationCap);

  m.def("equiv3",
        [](const std::string& lhs, const std::string& rhs, int max_domain,
           uint64_t cap) {
          auto r = equiv3(parse_formula(lhs), parse_formula(rhs), max_domain,
                          cap);
          return py::make_tuple(r.equivalent, to_string(r.lhs_value),
                                to_string(r.rhs_value));
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("max_domain") = 2,
        py::arg("cap") = kDefaultEnumerationCap,
        "Bounded-exhaustive three-valued equivalence; returns "
        "(equivalent, lhs_value, rhs_value) with the values taken from the "
        "first counterexample when not equivalent.");

  m.def("render", &render_text, py::arg("regime"), py::arg("interpretation"),
        py::arg("input"),
        "Natural-language reading of a formula, theory or program. Regime "
        "is one of 'fo', 'fo-neg', 'gl', 'tarskian'.");

  m.def("structure_summary",
        [](const Structure& s, const IntendedInterpretation& i) {
          return render_structure_summary(s, i);
        },
        py::arg("structure"), py::arg("interpretation"));
}
