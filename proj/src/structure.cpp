#include "aspfo/structure.hpp"

#include <algorithm>

namespace aspfo {

Structure::Structure(std::vector<std::string> domain, Vocabulary voc)
    : domain_(std::move(domain)), voc_(std::move(voc)) {
  if (domain_.empty()) throw std::invalid_argument("domain must be non-empty");
  std::set<std::string> seen;
  for (const auto& d : domain_)
    if (!seen.insert(d).second)
      throw std::invalid_argument("duplicate domain element: " + d);
  for (const auto& s : voc_.symbols()) {
    if (s.kind == SymbolKind::Predicate)
      pred_tables_[s] = {};
    else
      func_tables_[s] = {};
  }
}

Elem Structure::element(const std::string& name) const {
  for (size_t i = 0; i < domain_.size(); ++i)
    if (domain_[i] == name) return static_cast<Elem>(i);
  throw std::invalid_argument("unknown domain element: " + name);
}

static void check_tuple(const std::vector<std::string>& dom, const Symbol& s,
                        const Tuple& t) {
  if (static_cast<int>(t.size()) != s.arity)
    throw std::invalid_argument("tuple arity mismatch for " + to_string(s));
  for (Elem e : t)
    if (e >= dom.size())
      throw std::invalid_argument("element out of range for " + to_string(s));
}

const std::set<Tuple>& Structure::pred_table(const Symbol& p) const {
  auto it = pred_tables_.find(p);
  if (it == pred_tables_.end())
    throw std::invalid_argument("uninterpreted predicate: " + to_string(p));
  return it->second;
}

void Structure::set_pred_table(const Symbol& p, std::set<Tuple> table) {
  if (!pred_tables_.count(p))
    throw std::invalid_argument("uninterpreted predicate: " + to_string(p));
  for (const auto& t : table) check_tuple(domain_, p, t);
  pred_tables_[p] = std::move(table);
}

void Structure::add_pred_tuple(const Symbol& p, const Tuple& t) {
  if (!pred_tables_.count(p))
    throw std::invalid_argument("uninterpreted predicate: " + to_string(p));
  check_tuple(domain_, p, t);
  pred_tables_[p].insert(t);
}

bool Structure::holds(const Symbol& p, const Tuple& t) const {
  return pred_table(p).count(t) > 0;
}

const std::map<Tuple, Elem>& Structure::func_table(const Symbol& f) const {
  auto it = func_tables_.find(f);
  if (it == func_tables_.end())
    throw std::invalid_argument("uninterpreted function: " + to_string(f));
  return it->second;
}

void Structure::set_func_table(const Symbol& f, std::map<Tuple, Elem> table) {
  if (!func_tables_.count(f))
    throw std::invalid_argument("uninterpreted function: " + to_string(f));
  for (const auto& [t, v] : table) {
    check_tuple(domain_, f, t);
    if (v >= domain_.size())
      throw std::invalid_argument("function value out of range for " +
                                  to_string(f));
  }
  func_tables_[f] = std::move(table);
}

Elem Structure::apply(const Symbol& f, const Tuple& t) const {
  const auto& table = func_table(f);
  auto it = table.find(t);
  if (it == table.end())
    throw std::invalid_argument("function not total: " + to_string(f));
  return it->second;
}

static uint64_t ipow(uint64_t base, int exp) {
  uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void Structure::check_total() const {
  for (const auto& [f, table] : func_tables_) {
    if (table.size() != ipow(domain_.size(), f.arity))
      throw std::invalid_argument("function not total: " + to_string(f));
  }
}

bool Structure::same_carrier(const Structure& other) const {
  return domain_ == other.domain_ && func_tables_ == other.func_tables_;
}

bool Structure::operator==(const Structure& other) const {
  return domain_ == other.domain_ && voc_.symbols() == other.voc_.symbols() &&
         pred_tables_ == other.pred_tables_ &&
         func_tables_ == other.func_tables_;
}

Elem Environment::lookup(const std::string& var) const {
  auto it = bindings.find(var);
  if (it == bindings.end())
    throw std::invalid_argument("unbound variable: " + var);
  return it->second;
}

Environment Environment::bind(const std::string& var, Elem e) const {
  Environment out = *this;
  out.bindings[var] = e;
  return out;
}

TruthValue3 tv3_not(TruthValue3 v) {
  switch (v) {
    case TruthValue3::True: return TruthValue3::False;
    case TruthValue3::False: return TruthValue3::True;
    default: return TruthValue3::Unknown;
  }
}

TruthValue3 tv3_min(TruthValue3 a, TruthValue3 b) { return a < b ? a : b; }
TruthValue3 tv3_max(TruthValue3 a, TruthValue3 b) { return a < b ? b : a; }

std::string to_string(TruthValue3 v) {
  switch (v) {
    case TruthValue3::True: return "t";
    case TruthValue3::False: return "f";
    default: return "u";
  }
}

PartialStructure::PartialStructure(Structure lower, Structure upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (!le_t(lower_, upper_))
    throw std::invalid_argument("partial structure requires lower <= upper");
}

TruthValue3 PartialStructure::atom_value(const Symbol& p,
                                         const Tuple& t) const {
  if (lower_.holds(p, t)) return TruthValue3::True;
  if (upper_.holds(p, t)) return TruthValue3::Unknown;
  return TruthValue3::False;
}

Structure project(const Structure& s, const Vocabulary& sub) {
  if (!sub.subset_of(s.vocabulary()))
    throw std::invalid_argument("projection vocabulary is not a subset");
  Structure out(s.domain(), sub);
  for (const auto& sym : sub.symbols()) {
    if (sym.kind == SymbolKind::Predicate)
      out.set_pred_table(sym, s.pred_table(sym));
    else
      out.set_func_table(sym, s.func_table(sym));
  }
  return out;
}

Structure compose(const Structure& a, const Structure& b) {
  if (a.domain() != b.domain())
    throw std::invalid_argument("compose requires identical domains");
  for (const auto& s : a.vocabulary().symbols())
    if (b.vocabulary().contains(s))
      throw std::invalid_argument("compose requires disjoint vocabularies");
  Structure out(a.domain(),
                Vocabulary::merged(a.vocabulary(), b.vocabulary()));
  for (const Structure* src : {&a, &b}) {
    for (const auto& sym : src->vocabulary().symbols()) {
      if (sym.kind == SymbolKind::Predicate)
        out.set_pred_table(sym, src->pred_table(sym));
      else
        out.set_func_table(sym, src->func_table(sym));
    }
  }
  return out;
}

bool le_t(const Structure& a, const Structure& b) {
  if (!a.same_carrier(b) ||
      a.vocabulary().symbols() != b.vocabulary().symbols())
    throw std::invalid_argument("le_t requires identical carriers");
  for (const auto& p : a.vocabulary().predicates()) {
    const auto& ta = a.pred_table(p);
    const auto& tb = b.pred_table(p);
    if (!std::includes(tb.begin(), tb.end(), ta.begin(), ta.end()))
      return false;
  }
  return true;
}

std::string ground_term_name(const TermPtr& t) {
  if (t->is_variable())
    throw std::invalid_argument("not a ground term: " + t->var);
  std::string out = t->func->name;
  if (!t->args.empty()) {
    out += "(";
    for (size_t i = 0; i < t->args.size(); ++i) {
      if (i) out += ",";
      out += ground_term_name(t->args[i]);
    }
    out += ")";
  }
  return out;
}

std::vector<TermPtr> herbrand_universe(const std::set<Symbol>& funcs,
                                       std::optional<int> depth_bound) {
  std::vector<Symbol> consts, builders;
  for (const auto& f : funcs) {
    if (f.kind != SymbolKind::Function)
      throw std::invalid_argument("not a function symbol: " + to_string(f));
    (f.arity == 0 ? consts : builders).push_back(f);
  }
  if (consts.empty()) throw std::invalid_argument("empty universe");
  if (!builders.empty() && !depth_bound)
    throw std::invalid_argument("infinite Herbrand universe");

  std::vector<TermPtr> out;
  for (const auto& c : consts) out.push_back(mk_app(c));
  // out is sorted by name already (set order); grow level by level.
  std::vector<TermPtr> level = out;
  int max_depth = depth_bound.value_or(1);
  for (int d = 2; d <= max_depth && !builders.empty(); ++d) {
    std::vector<TermPtr> next;
    for (const auto& f : builders) {
      // All argument tuples drawn from `out` with at least one from `level`
      // (so the result has depth exactly d).
      std::vector<size_t> idx(f.arity, 0);
      size_t n = out.size();
      while (true) {
        std::vector<TermPtr> args;
        int depth = 0;
        for (int i = 0; i < f.arity; ++i) {
          args.push_back(out[idx[i]]);
          depth = std::max(depth, term_depth(out[idx[i]]));
        }
        if (depth == d - 1) next.push_back(mk_app(f, args));
        int i = f.arity - 1;
        for (; i >= 0; --i) {
          if (++idx[i] < n) break;
          idx[i] = 0;
        }
        if (i < 0) break;
      }
    }
    std::sort(next.begin(), next.end(), [](const TermPtr& a, const TermPtr& b) {
      return ground_term_name(a) < ground_term_name(b);
    });
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TermPtr& a, const TermPtr& b) {
                     int da = term_depth(a), db = term_depth(b);
                     if (da != db) return da < db;
                     return ground_term_name(a) < ground_term_name(b);
                   });
  return out;
}

std::vector<Tuple> all_tuples(size_t domain_size, int arity) {
  std::vector<Tuple> out;
  Tuple cur(arity, 0);
  if (domain_size == 0) return out;
  while (true) {
    out.push_back(cur);
    int i = arity - 1;
    for (; i >= 0; --i) {
      if (++cur[i] < domain_size) break;
      cur[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

// Enumerates all fillings of the predicate tables / function tables of the
// symbols in `extra` on top of `base`, in a deterministic binary / mixed-radix
// counter order.
static void enumerate_over(const Structure& base, const Vocabulary& extra,
                           const StructureSink& sink, uint64_t cap) {
  struct PredSlot {
    Symbol sym;
    std::vector<Tuple> tuples;
    std::vector<bool> bits;
  };
  struct FuncSlot {
    Symbol sym;
    std::vector<Tuple> tuples;
    std::vector<Elem> vals;
  };
  std::vector<PredSlot> preds;
  std::vector<FuncSlot> funcs;
  size_t n = base.domain_size();
  for (const auto& s : extra.symbols()) {
    if (s.kind == SymbolKind::Predicate)
      preds.push_back({s, all_tuples(n, s.arity), {}});
    else
      funcs.push_back({s, all_tuples(n, s.arity), {}});
  }
  for (auto& p : preds) p.bits.assign(p.tuples.size(), false);
  for (auto& f : funcs) f.vals.assign(f.tuples.size(), 0);

  uint64_t count = 0;
  while (true) {
    if (++count > cap) throw EnumerationCapExceeded(cap);
    Structure s(base.domain(),
                Vocabulary::merged(base.vocabulary(), extra));
    for (const auto& sym : base.vocabulary().symbols()) {
      if (sym.kind == SymbolKind::Predicate)
        s.set_pred_table(sym, base.pred_table(sym));
      else
        s.set_func_table(sym, base.func_table(sym));
    }
    for (const auto& p : preds) {
      std::set<Tuple> table;
      for (size_t i = 0; i < p.tuples.size(); ++i)
        if (p.bits[i]) table.insert(p.tuples[i]);
      s.set_pred_table(p.sym, std::move(table));
    }
    for (const auto& f : funcs) {
      std::map<Tuple, Elem> table;
      for (size_t i = 0; i < f.tuples.size(); ++i) table[f.tuples[i]] = f.vals[i];
      s.set_func_table(f.sym, std::move(table));
    }
    if (!sink(s)) return;

    // Advance the combined counter: function values first, then pred bits.
    bool carried = true;
    for (auto& f : funcs) {
      if (!carried) break;
      for (size_t i = 0; i < f.vals.size() && carried; ++i) {
        if (++f.vals[i] < n) carried = false;
        else f.vals[i] = 0;
      }
    }
    for (auto& p : preds) {
      if (!carried) break;
      for (size_t i = 0; i < p.bits.size() && carried; ++i) {
        if (!p.bits[i]) { p.bits[i] = true; carried = false; }
        else p.bits[i] = false;
      }
    }
    if (carried) return;
  }
}

void expansions(const Structure& base, const Vocabulary& extra,
                const StructureSink& sink, uint64_t cap) {
  for (const auto& s : extra.symbols())
    if (base.vocabulary().contains(s))
      throw std::invalid_argument("expansion vocabulary overlaps base");
  enumerate_over(base, extra, sink, cap);
}

Structure herbrand_carrier(const Vocabulary& voc) {
  auto funcs = voc.functions();
  auto terms = herbrand_universe(funcs);
  std::vector<std::string> domain;
  for (const auto& t : terms) domain.push_back(ground_term_name(t));
  Vocabulary fvoc;
  for (const auto& f : funcs) fvoc.add(f);
  Structure s(domain, fvoc);
  for (const auto& f : funcs) s.set_func_table(f, {{{}, s.element(f.name)}});
  return s;
}

void herbrand_structures(const Vocabulary& voc, const StructureSink& sink,
                         uint64_t cap) {
  Structure carrier = herbrand_carrier(voc);
  Vocabulary preds;
  for (const auto& p : voc.predicates()) preds.add(p);
  enumerate_over(carrier, preds, sink, cap);
}

void all_structures(const std::vector<std::string>& domain,
                    const Vocabulary& voc, const StructureSink& sink,
                    uint64_t cap) {
  Structure base(domain, Vocabulary{});
  enumerate_over(base, voc, sink, cap);
}

Structure empty_predicates_structure(const Structure& funcs,
                                     const Vocabulary& voc) {
  Structure out(funcs.domain(), voc);
  for (const auto& f : voc.functions())
    out.set_func_table(f, funcs.func_table(f));
  return out;
}

}  // namespace aspfo
