// Finite FO structures, partial structures, projections, expansions and
// enumeration over a finite domain.

#ifndef ASPFO_STRUCTURE_HPP
#define ASPFO_STRUCTURE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aspfo/syntax.hpp"

namespace aspfo {

using Elem = uint32_t;
using Tuple = std::vector<Elem>;

struct EnumerationCapExceeded : std::runtime_error {
  explicit EnumerationCapExceeded(uint64_t cap)
      : std::runtime_error("enumeration cap of " + std::to_string(cap) +
                           " structures exceeded") {}
};

// Default guard against accidental blowup; override per call.
inline constexpr uint64_t kDefaultEnumerationCap = uint64_t(1) << 20;

class Structure {
public:
  Structure() = default;
  Structure(std::vector<std::string> domain, Vocabulary voc);

  const std::vector<std::string>& domain() const { return domain_; }
  size_t domain_size() const { return domain_.size(); }
  const Vocabulary& vocabulary() const { return voc_; }

  Elem element(const std::string& name) const;  // throws on unknown name
  const std::string& element_name(Elem e) const { return domain_.at(e); }

  // Tables. Missing symbols throw; setters validate arity and range.
  const std::set<Tuple>& pred_table(const Symbol& p) const;
  void set_pred_table(const Symbol& p, std::set<Tuple> table);
  void add_pred_tuple(const Symbol& p, const Tuple& t);
  bool holds(const Symbol& p, const Tuple& t) const;

  const std::map<Tuple, Elem>& func_table(const Symbol& f) const;
  void set_func_table(const Symbol& f, std::map<Tuple, Elem> table);
  Elem apply(const Symbol& f, const Tuple& t) const;

  // Totality over domain^arity for every function symbol; throws otherwise.
  void check_total() const;

  bool same_carrier(const Structure& other) const;  // domain + functions
  bool operator==(const Structure& other) const;

private:
  std::vector<std::string> domain_;
  Vocabulary voc_;
  std::map<Symbol, std::set<Tuple>> pred_tables_;
  std::map<Symbol, std::map<Tuple, Elem>> func_tables_;
};

struct Environment {
  std::map<std::string, Elem> bindings;

  Elem lookup(const std::string& var) const;
  Environment bind(const std::string& var, Elem e) const;
};

enum class TruthValue3 { False, Unknown, True };

TruthValue3 tv3_not(TruthValue3 v);
TruthValue3 tv3_min(TruthValue3 a, TruthValue3 b);
TruthValue3 tv3_max(TruthValue3 a, TruthValue3 b);
std::string to_string(TruthValue3 v);

// Three-valued structure as a lower/upper pair with lower <=_t upper.
class PartialStructure {
public:
  PartialStructure(Structure lower, Structure upper);

  const Structure& lower() const { return lower_; }
  const Structure& upper() const { return upper_; }
  bool two_valued() const { return lower_ == upper_; }

  TruthValue3 atom_value(const Symbol& p, const Tuple& t) const;

private:
  Structure lower_;
  Structure upper_;
};

// 𝔄|_Σ′ — same domain, tables restricted to sub.
Structure project(const Structure& s, const Vocabulary& sub);

// 𝔄∘𝔅 — same domain, disjoint vocabularies.
Structure compose(const Structure& a, const Structure& b);

// Pointwise predicate-table inclusion over a shared carrier.
bool le_t(const Structure& a, const Structure& b);

// All ground terms over funcs, ordered by depth then lexicographically.
// Without a depth bound any arity >= 1 symbol is an error.
std::vector<TermPtr> herbrand_universe(const std::set<Symbol>& funcs,
                                       std::optional<int> depth_bound = {});

// Deterministic printable form of a ground term, used as element name.
std::string ground_term_name(const TermPtr& t);

// Callback-driven streams; return false from the callback to stop early.
using StructureSink = std::function<bool(const Structure&)>;

// All structures over voc with domain = Herbrand universe of voc's constants
// and every constant interpreted as itself.
void herbrand_structures(const Vocabulary& voc, const StructureSink& sink,
                         uint64_t cap = kDefaultEnumerationCap);

// All expansions of base by the symbols of extra.
void expansions(const Structure& base, const Vocabulary& extra,
                const StructureSink& sink,
                uint64_t cap = kDefaultEnumerationCap);

// All structures with the given domain and vocabulary (all predicate subsets,
// all total function maps).
void all_structures(const std::vector<std::string>& domain,
                    const Vocabulary& voc, const StructureSink& sink,
                    uint64_t cap = kDefaultEnumerationCap);

// The structure over the given carrier with every predicate table empty;
// function tables must be supplied via funcs (a structure interpreting all
// function symbols of voc on the same domain).
Structure empty_predicates_structure(const Structure& funcs,
                                     const Vocabulary& voc);

// The Herbrand carrier for a constants-only vocabulary: domain = constants,
// each constant denoting itself, no predicates.
Structure herbrand_carrier(const Vocabulary& voc);

std::vector<Tuple> all_tuples(size_t domain_size, int arity);

}  // namespace aspfo

#endif
