// aspfo: batch command-line surface over the library.
//
// Exit codes: 0 success, 1 domain failure (unsatisfied check, no proper
// splitting, enumeration cap exceeded), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "aspfo/foeval.hpp"
#include "aspfo/frontend.hpp"
#include "aspfo/groundelp.hpp"
#include "aspfo/render.hpp"
#include "aspfo/semantics.hpp"
#include "aspfo/splitting.hpp"
#include "aspfo/structure.hpp"

namespace {

using namespace aspfo;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  uint64_t cap = kDefaultEnumerationCap;
  std::string format = "text";
  bool lines() const { return format == "lines"; }
};

int stdin_uses = 0;

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    if (++stdin_uses > 1)
      throw UsageError("'-' (standard input) may be used for only one input");
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  os << in.rdbuf();
  return os.str();
}

Vocabulary symbols_vocabulary(const std::set<Symbol>& syms) {
  Vocabulary v;
  for (const auto& s : syms) v.add(s);
  return v;
}

// The unique D-module of a theory file, with its parameter structure.
struct DModuleInput {
  DModule d;
  Structure params;
};

DModuleInput load_dmodule(const std::string& dfile, const std::string& pfile) {
  AspFoTheory t = parse_theory(read_input(dfile), dfile);
  const DModule* found = nullptr;
  for (const auto& m : t.modules)
    if (const auto* d = std::get_if<DModule>(&m)) {
      if (found) throw DomainFailure("theory file has more than one D-module");
      found = d;
    }
  if (!found) throw DomainFailure("theory file has no D-module");
  Vocabulary pvoc = symbols_vocabulary(pars(*found));
  Structure params = parse_structure(read_input(pfile), pvoc, pfile);
  return {*found, std::move(params)};
}

void print_structures(const std::vector<Structure>& ss, const Options& opt,
                      const std::string& key) {
  if (opt.lines()) {
    std::cout << key << "S: " << ss.size() << "\n";
    for (size_t i = 0; i < ss.size(); ++i)
      std::cout << key << " " << i + 1 << ":\n" << print_structure(ss[i]);
  } else {
    std::cout << ss.size() << " " << (ss.size() == 1 ? "result" : "results")
              << "\n";
    for (const auto& s : ss) std::cout << "----\n" << print_structure(s);
  }
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_parse(const Options&, const std::string& program,
              const std::string& theory, const std::string& structure,
              const std::string& interp) {
  int given = !program.empty() + !theory.empty() + !interp.empty();
  if (structure.empty() ? given != 1 : (given != 1 || !interp.empty()))
    throw UsageError(
        "parse needs exactly one of --program/--theory/--interp, or "
        "--structure with --program or --theory for the vocabulary");
  if (!structure.empty()) {
    Vocabulary voc = !theory.empty()
                         ? parse_theory(read_input(theory), theory).vocabulary()
                         : parse_program(read_input(program), program).vocabulary;
    std::cout << print_structure(
        parse_structure(read_input(structure), voc, structure));
  } else if (!program.empty()) {
    std::cout << print_program(parse_program(read_input(program), program));
  } else if (!theory.empty()) {
    std::cout << print_theory(parse_theory(read_input(theory), theory));
  } else {
    std::cout << print_interpretation(
        parse_interpretation(read_input(interp), interp));
  }
  return 0;
}

int cmd_models(const Options& opt, const std::string& theory_file,
               bool herbrand, const std::string& structure_file) {
  if (herbrand == !structure_file.empty())
    throw UsageError("models needs exactly one of --herbrand / --structure");
  AspFoTheory t = parse_theory(read_input(theory_file), theory_file);
  std::vector<Structure> out;
  auto sink = [&](const Structure& s) {
    out.push_back(s);
    return true;
  };
  if (herbrand) {
    models_herbrand(t, sink, opt.cap);
  } else {
    Vocabulary carrier_voc = symbols_vocabulary(t.vocabulary().functions());
    Structure carrier =
        parse_structure(read_input(structure_file), carrier_voc, structure_file);
    models_over_carrier(t, carrier, sink, opt.cap);
  }
  print_structures(out, opt, "MODEL");
  return 0;
}

int cmd_stable(const Options& opt, const std::string& dfile,
               const std::string& pfile) {
  DModuleInput in = load_dmodule(dfile, pfile);
  print_structures(stable_models(in.d, in.params, opt.cap), opt,
                   "STABLE_MODEL");
  return 0;
}

int cmd_wellfounded(const Options& opt, const std::string& dfile,
                    const std::string& pfile) {
  DModuleInput in = load_dmodule(dfile, pfile);
  WellFoundedResult wf = well_founded(in.d, in.params);
  if (opt.lines()) {
    std::cout << "TOTAL: " << (wf.total ? "yes" : "no") << "\n";
    std::cout << "LOWER:\n" << print_structure(wf.ps.lower());
    std::cout << "UPPER:\n" << print_structure(wf.ps.upper());
  } else {
    std::cout << "well-founded model is "
              << (wf.total ? "total" : "not total") << "\n";
    std::cout << "lower bound:\n" << print_structure(wf.ps.lower());
    if (!wf.total)
      std::cout << "upper bound:\n" << print_structure(wf.ps.upper());
  }
  return 0;
}

int cmd_totality(const Options&, const std::string& dfile,
                 const std::string& pfile) {
  DModuleInput in = load_dmodule(dfile, pfile);
  WellFoundedResult wf = well_founded(in.d, in.params);
  std::cout << (wf.total ? "TOTAL" : "NOT TOTAL") << "\n";
  return wf.total ? 0 : 1;
}

const char* part_kind_name(PartKind k) {
  switch (k) {
    case PartKind::Choice: return "choice";
    case PartKind::Define: return "define";
    case PartKind::Constraint: return "constraint";
  }
  return "?";
}

int cmd_split(const Options& opt, const std::string& pfile) {
  AspProgram p = parse_program(read_input(pfile), pfile);
  SplittingResult sr = finest_proper_splitting(p);
  if (!sr.splitting) {
    if (opt.lines())
      std::cout << "RESULT: IMPROPER\nREASON: " << sr.failure << "\n";
    else
      std::cout << "no proper splitting: " << sr.failure << "\n";
    return 1;
  }
  if (opt.lines()) std::cout << "RESULT: PROPER\n";
  const auto& parts = sr.splitting->parts;
  for (size_t i = 0; i < parts.size(); ++i) {
    std::cout << (opt.lines() ? "PART " + std::to_string(i + 1) + ": "
                              : "part " + std::to_string(i + 1) + " (")
              << part_kind_name(parts[i].kind) << (opt.lines() ? "" : ")");
    for (size_t r : parts[i].rule_indices) std::cout << " " << r + 1;
    std::cout << "\n";
  }
  return 0;
}

int cmd_translate(const Options&, const std::string& pfile) {
  AspProgram p = parse_program(read_input(pfile), pfile);
  SplittingResult sr = finest_proper_splitting(p);
  if (!sr.splitting)
    throw DomainFailure("no proper splitting: " + sr.failure);
  std::cout << print_theory(to_aspfo(p, *sr.splitting));
  return 0;
}

int cmd_verify_split(const Options& opt, const std::string& pfile,
                     int max_atoms) {
  AspProgram p = parse_program(read_input(pfile), pfile);
  uint64_t cap = opt.cap;
  if (max_atoms >= 0 && max_atoms < 63)
    cap = std::min<uint64_t>(cap, uint64_t(1) << max_atoms);
  VerifyReport rep = verify_split(p, cap);
  std::cout << (opt.lines() ? rep.to_lines() : rep.to_text());
  return rep.proper && rep.equal ? 0 : 1;
}

int cmd_answer_sets(const Options& opt, const std::string& pfile) {
  AspProgram p = parse_program(read_input(pfile), pfile);
  print_structures(answer_sets(p, opt.cap), opt, "ANSWER_SET");
  return 0;
}

int cmd_equiv3(const Options& opt, const std::string& lhs,
               const std::string& rhs, int max_domain) {
  FormulaPtr l = parse_formula(lhs, "<lhs>");
  FormulaPtr r = parse_formula(rhs, "<rhs>");
  Equiv3Result res = equiv3(l, r, max_domain, opt.cap);
  if (res.equivalent) {
    std::cout << "RESULT: EQUIVALENT (bounded)\n";
    if (opt.lines()) std::cout << "MAX_DOMAIN: " << max_domain << "\n";
    return 0;
  }
  std::cout << "RESULT: NOT EQUIVALENT\n";
  std::cout << "LHS: " << to_string(res.lhs_value)
            << "\nRHS: " << to_string(res.rhs_value) << "\n";
  for (const auto& [v, e] : res.env.bindings)
    std::cout << "BINDING: " << v << " = "
              << res.witness->lower().element_name(e) << "\n";
  std::cout << "WITNESS LOWER:\n" << print_structure(res.witness->lower());
  std::cout << "WITNESS UPPER:\n" << print_structure(res.witness->upper());
  return 1;
}

int cmd_render(const Options&, const std::string& regime,
               const std::string& interp_file, const std::string& input_file) {
  IntendedInterpretation interp =
      parse_interpretation(read_input(interp_file), interp_file);
  std::string text = read_input(input_file);
  Rendering out;
  if (regime == "gl") {
    out = render_gl(parse_program(text, input_file), interp);
  } else if (regime == "tarskian") {
    out = render_tarskian(parse_theory(text, input_file), interp);
  } else if (regime == "fo" || regime == "fo-neg") {
    AspFoTheory theory;
    bool is_theory = true;
    try {
      theory = parse_theory(text, input_file);
    } catch (const ParseError&) {
      is_theory = false;
    }
    if (is_theory) {
      out = regime == "fo" ? render_fo(theory, interp)
                           : render_fo_nonstandard(theory, interp);
    } else {
      FormulaPtr f = parse_formula(text, input_file);
      out = regime == "fo" ? render_fo(f, interp)
                           : render_fo_nonstandard(f, interp);
    }
  } else {
    throw UsageError("unknown regime: " + regime);
  }
  std::cout << out.text << "\n";
  return 0;
}

int cmd_gcompl(const Options&, const std::string& theory_file) {
  AspFoTheory t = parse_theory(read_input(theory_file), theory_file);
  bool any = false;
  for (const auto& m : t.modules)
    if (const auto* g = std::get_if<GModule>(&m)) {
      std::cout << print_formula(gcompl(*g)) << "\n";
      any = true;
    }
  if (!any) throw DomainFailure("theory has no G-module");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ASP-FO toolkit: models, stable semantics, splitting, "
               "three-valued equivalence and natural-language readings"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--cap", opt.cap, "enumeration cap (structures/candidates)");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "lines"}));

  std::string program, theory, structure, interp, dmodule, params;
  std::string lhs, rhs, regime, input;
  bool herbrand = false;
  int max_domain = 2, max_atoms = -1;
  std::function<int()> run;

  auto* parse = app.add_subcommand("parse", "parse and reprint an input");
  parse->add_option("--program", program);
  parse->add_option("--theory", theory);
  parse->add_option("--structure", structure);
  parse->add_option("--interp", interp);
  parse->callback([&] {
    run = [&] { return cmd_parse(opt, program, theory, structure, interp); };
  });

  auto* models = app.add_subcommand("models", "enumerate models of a theory");
  models->add_option("--theory", theory)->required();
  models->add_flag("--herbrand", herbrand, "enumerate Herbrand models");
  models->add_option("--structure", structure, "carrier structure file");
  models->callback([&] {
    run = [&] { return cmd_models(opt, theory, herbrand, structure); };
  });

  auto* stable = app.add_subcommand(
      "stable", "stable models of a D-module relative to parameters");
  stable->add_option("--dmodule", dmodule)->required();
  stable->add_option("--params", params)->required();
  stable->callback([&] { run = [&] { return cmd_stable(opt, dmodule, params); }; });

  auto* wf = app.add_subcommand("wellfounded",
                                "well-founded model of a D-module");
  wf->add_option("--dmodule", dmodule)->required();
  wf->add_option("--params", params)->required();
  wf->callback([&] {
    run = [&] { return cmd_wellfounded(opt, dmodule, params); };
  });

  auto* tot = app.add_subcommand("totality",
                                 "exit 0 iff the well-founded model is total");
  tot->add_option("--dmodule", dmodule)->required();
  tot->add_option("--params", params)->required();
  tot->callback([&] { run = [&] { return cmd_totality(opt, dmodule, params); }; });

  auto* split = app.add_subcommand("split", "finest proper splitting");
  split->add_option("--program", program)->required();
  split->callback([&] { run = [&] { return cmd_split(opt, program); }; });

  auto* translate =
      app.add_subcommand("translate", "translate a program to a theory");
  translate->add_option("--program", program)->required();
  translate->callback([&] { run = [&] { return cmd_translate(opt, program); }; });

  auto* verify = app.add_subcommand(
      "verify-split", "compare answer sets with models of the translation");
  verify->add_option("--program", program)->required();
  verify->add_option("--max-atoms", max_atoms,
                     "cap candidate sets at 2^N");
  verify->callback([&] {
    run = [&] { return cmd_verify_split(opt, program, max_atoms); };
  });

  auto* as = app.add_subcommand("answer-sets",
                                "answer sets of a constants-only program");
  as->add_option("--program", program)->required();
  as->callback([&] { run = [&] { return cmd_answer_sets(opt, program); }; });

  auto* eq = app.add_subcommand("equiv3",
                                "bounded three-valued equivalence check");
  eq->add_option("--lhs", lhs)->required();
  eq->add_option("--rhs", rhs)->required();
  eq->add_option("--max-domain", max_domain);
  eq->callback([&] { run = [&] { return cmd_equiv3(opt, lhs, rhs, max_domain); }; });

  auto* render = app.add_subcommand("render", "natural-language reading");
  render->add_option("--regime", regime)
      ->required()
      ->check(CLI::IsMember({"fo", "fo-neg", "gl", "tarskian"}));
  render->add_option("--interp", interp)->required();
  render->add_option("--input", input)->required();
  render->callback([&] {
    run = [&] { return cmd_render(opt, regime, interp, input); };
  });

  auto* gc = app.add_subcommand("gcompl", "completion of each G-module");
  gc->add_option("--theory", theory)->required();
  gc->callback([&] { run = [&] { return cmd_gcompl(opt, theory); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run();
  } catch (const aspfo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const aspfo::EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
