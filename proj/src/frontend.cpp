#include "aspfo/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace aspfo {

static std::string format_error(const SourceSpan& span,
                                const std::string& message) {
  std::ostringstream os;
  os << span.file << ":" << span.line << ":" << span.column << ": " << message;
  return os.str();
}

ParseError::ParseError(SourceSpan span, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error(format_error(span, message)),
      span_(std::move(span)),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

const std::string& IntendedInterpretation::lookup(const Symbol& s) const {
  auto it = templates.find(s);
  if (it == templates.end())
    throw std::invalid_argument("missing template for " + to_string(s));
  return it->second;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  End, Ident, Var, Number, String,
  Dot, Comma, Semi, ColonDash, Colon, LBrace, RBrace, LParen, RParen,
  LBrack, RBrack, Slash, IffArrow, LArrow, RArrow, ImpArrow, Eq, Neq,
  Bang, Question, Amp, Pipe, Tilde,
};

std::string tok_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Var: return "variable";
    case Tok::Number: return "number";
    case Tok::String: return "string";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::ColonDash: return "':-'";
    case Tok::Colon: return "':'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Slash: return "'/'";
    case Tok::IffArrow: return "'<=>'";
    case Tok::LArrow: return "'<-'";
    case Tok::RArrow: return "'->'";
    case Tok::ImpArrow: return "'=>'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::Bang: return "'!'";
    case Tok::Question: return "'?'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Tilde: return "'~'";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
public:
  Lexer(const std::string& text, std::string file)
      : text_(text), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      SourceSpan span{file_, line_, col_, 0};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", span});
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
          word += advance();
        span.length = static_cast<int>(word.size());
        bool isvar = std::isupper(static_cast<unsigned char>(word[0])) ||
                     word[0] == '_';
        out.push_back({isvar ? Tok::Var : Tok::Ident, word, span});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          num += advance();
        span.length = static_cast<int>(num.size());
        out.push_back({Tok::Number, num, span});
        continue;
      }
      if (c == '"') {
        advance();
        std::string value;
        while (pos_ < text_.size() && text_[pos_] != '"') {
          char d = advance();
          if (d == '\\' && pos_ < text_.size() &&
              (text_[pos_] == '"' || text_[pos_] == '\\'))
            d = advance();
          if (d == '\n') throw ParseError(span, "unterminated string");
          value += d;
        }
        if (pos_ >= text_.size())
          throw ParseError(span, "unterminated string");
        advance();
        span.length = static_cast<int>(value.size()) + 2;
        out.push_back({Tok::String, value, span});
        continue;
      }
      out.push_back(punct(span));
    }
  }

private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  bool take(const std::string& s) {
    if (text_.compare(pos_, s.size(), s) != 0) return false;
    for (size_t i = 0; i < s.size(); ++i) advance();
    return true;
  }

  Token punct(SourceSpan span) {
    static const std::pair<const char*, Tok> table[] = {
        {"<=>", Tok::IffArrow}, {"<-", Tok::LArrow}, {"->", Tok::RArrow},
        {"=>", Tok::ImpArrow},  {":-", Tok::ColonDash}, {"!=", Tok::Neq},
        {".", Tok::Dot},        {",", Tok::Comma},   {";", Tok::Semi},
        {":", Tok::Colon},      {"{", Tok::LBrace},  {"}", Tok::RBrace},
        {"(", Tok::LParen},     {")", Tok::RParen},  {"[", Tok::LBrack},
        {"]", Tok::RBrack},     {"/", Tok::Slash},   {"=", Tok::Eq},
        {"!", Tok::Bang},       {"?", Tok::Question},{"&", Tok::Amp},
        {"|", Tok::Pipe},       {"~", Tok::Tilde},
    };
    for (const auto& [s, k] : table) {
      if (take(s)) {
        span.length = static_cast<int>(std::string(s).size());
        return {k, s, span};
      }
    }
    throw ParseError(span, std::string("unexpected character '") +
                               text_[pos_] + "'");
  }

  const std::string& text_;
  std::string file_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Inferred vocabulary with clash detection.
class SymbolTable {
public:
  Symbol add(const std::string& name, int arity, SymbolKind kind,
             const SourceSpan& span) {
    Symbol s{name, arity, kind};
    auto it = known_.find(name);
    if (it != known_.end()) {
      if (it->second.kind != kind)
        throw ParseError(span, "'" + name +
                                   "' used as both predicate and function");
      if (it->second.arity != arity)
        throw ParseError(span, "arity clash for '" + name + "': " +
                                   std::to_string(it->second.arity) + " vs " +
                                   std::to_string(arity));
      return it->second;
    }
    known_.emplace(name, s);
    return s;
  }

  Vocabulary vocabulary() const {
    Vocabulary v;
    for (const auto& [_, s] : known_) v.add(s);
    return v;
  }

  std::set<Symbol> functions() const {
    std::set<Symbol> out;
    for (const auto& [_, s] : known_)
      if (s.kind == SymbolKind::Function) out.insert(s);
    return out;
  }

private:
  std::map<std::string, Symbol> known_;
};

class Parser {
public:
  Parser(const std::string& text, const std::string& file)
      : toks_(Lexer(text, file).run()) {}

  // ----- token plumbing

  const Token& peek(int k = 0) const {
    size_t i = std::min(pos_ + k, toks_.size() - 1);
    return toks_[i];
  }
  bool at(Tok t) const { return peek().kind == t; }
  bool at_word(const char* w) const {
    return at(Tok::Ident) && peek().text == w;
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(Tok t) {
    if (!at(t)) return false;
    next();
    return true;
  }
  Token expect(Tok t) {
    if (!at(t))
      throw ParseError(peek().span, "expected " + tok_name(t) + ", found " +
                                        describe(peek()),
                       {tok_name(t)});
    return next();
  }
  bool accept_word(const char* w) {
    if (!at_word(w)) return false;
    next();
    return true;
  }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  // ----- terms

  // Parses a term; registers every application as a function symbol.
  TermPtr parse_term() {
    if (at(Tok::Var)) return mk_var(next().text);
    Token id = expect(Tok::Ident);
    std::vector<TermPtr> args;
    if (accept(Tok::LParen)) {
      args.push_back(parse_term());
      while (accept(Tok::Comma)) args.push_back(parse_term());
      expect(Tok::RParen);
    }
    Symbol f = syms.add(id.text, static_cast<int>(args.size()),
                        SymbolKind::Function, id.span);
    return mk_app(f, std::move(args));
  }

  // Parses `p` or `p(t1,...,tn)` and registers p as a predicate.
  AtomRef parse_atomref() {
    Token id = expect(Tok::Ident);
    std::vector<TermPtr> args;
    if (accept(Tok::LParen)) {
      args.push_back(parse_term());
      while (accept(Tok::Comma)) args.push_back(parse_term());
      expect(Tok::RParen);
    }
    Symbol p = syms.add(id.text, static_cast<int>(args.size()),
                        SymbolKind::Predicate, id.span);
    return AtomRef{p, std::move(args)};
  }

  // ----- FO formulas (theory syntax)

  FormulaPtr parse_formula() { return parse_iff(); }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_imp();
    while (accept(Tok::IffArrow)) f = mk_iff(f, parse_imp());
    return f;
  }
  FormulaPtr parse_imp() {
    FormulaPtr f = parse_or();
    if (accept(Tok::ImpArrow)) return mk_implies(f, parse_imp());
    return f;
  }
  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (accept(Tok::Pipe)) f = mk_or(f, parse_and());
    return f;
  }
  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (accept(Tok::Amp)) f = mk_and(f, parse_unary());
    return f;
  }
  FormulaPtr parse_unary() {
    if (accept(Tok::Tilde)) return mk_not(parse_unary());
    if (at(Tok::Bang) || at(Tok::Question)) {
      bool forall = next().kind == Tok::Bang;
      Token v = expect(Tok::Var);
      expect(Tok::Colon);
      FormulaPtr body = parse_formula();  // quantifiers scope maximally
      return forall ? mk_forall(v.text, body) : mk_exists(v.text, body);
    }
    if (accept(Tok::LParen)) {
      FormulaPtr f = parse_formula();
      expect(Tok::RParen);
      return f;
    }
    if (accept_word("true")) return mk_true();
    if (accept_word("false")) return mk_false();
    return parse_atom_or_equal();
  }

  FormulaPtr parse_atom_or_equal() {
    if (at(Tok::Var)) {
      Token v = next();
      expect(Tok::Eq);
      return mk_equal(mk_var(v.text), parse_term());
    }
    if (!at(Tok::Ident))
      throw ParseError(peek().span,
                       "expected formula, found " + describe(peek()),
                       {"identifier", "variable", "'('", "'~'", "'!'", "'?'"});
    // Could be an atom or the left side of an equality; parse the shape
    // first, commit symbol kinds after seeing whether '=' follows.
    Token id = next();
    std::vector<TermPtr> args;
    if (accept(Tok::LParen)) {
      args.push_back(parse_term());
      while (accept(Tok::Comma)) args.push_back(parse_term());
      expect(Tok::RParen);
    }
    if (accept(Tok::Eq)) {
      Symbol f = syms.add(id.text, static_cast<int>(args.size()),
                          SymbolKind::Function, id.span);
      return mk_equal(mk_app(f, std::move(args)), parse_term());
    }
    Symbol p = syms.add(id.text, static_cast<int>(args.size()),
                        SymbolKind::Predicate, id.span);
    return mk_atom(p, std::move(args));
  }

  // ----- core ASP programs

  AspProgram parse_program() {
    AspProgram prog;
    while (!at(Tok::End)) prog.rules.push_back(parse_asp_rule());
    prog.vocabulary = syms.vocabulary();
    return prog;
  }

  AspRule parse_asp_rule() {
    AspRule r;
    if (accept(Tok::LBrace)) {
      r.kind = AspRuleKind::Choice;
      r.head = parse_atomref();
      expect(Tok::RBrace);
      if (accept(Tok::ColonDash)) parse_asp_body(r);
    } else if (accept(Tok::ColonDash)) {
      r.kind = AspRuleKind::Constraint;
      parse_asp_body(r);
    } else {
      r.kind = AspRuleKind::Normal;
      r.head = parse_atomref();
      if (accept(Tok::ColonDash)) parse_asp_body(r);
    }
    expect(Tok::Dot);
    return r;
  }

  void parse_asp_body(AspRule& r) {
    do {
      if (accept_word("not")) {
        r.neg_body.push_back(parse_atomref());
      } else if (at(Tok::Var)) {
        TermPtr lhs = mk_var(next().text);
        expect(Tok::Neq);
        r.diseqs.emplace_back(lhs, parse_term());
      } else {
        // Lookahead cannot distinguish `p(a)` (atom) from `f(a) != t`
        // until the closing paren, so parse a term and reinterpret.
        size_t mark = pos_;
        Token id = expect(Tok::Ident);
        std::vector<TermPtr> args;
        if (accept(Tok::LParen)) {
          args.push_back(parse_term());
          while (accept(Tok::Comma)) args.push_back(parse_term());
          expect(Tok::RParen);
        }
        if (accept(Tok::Neq)) {
          Symbol f = syms.add(id.text, static_cast<int>(args.size()),
                              SymbolKind::Function, id.span);
          r.diseqs.emplace_back(mk_app(f, std::move(args)), parse_term());
        } else {
          pos_ = mark;
          r.pos_body.push_back(parse_atomref());
        }
      }
    } while (accept(Tok::Comma));
  }

  // ----- ASP-FO theories

  AspFoTheory parse_theory() {
    AspFoTheory theory;
    std::vector<size_t> default_herbrands;
    while (!at(Tok::End)) {
      if (accept_word("gmodule")) {
        Token brace = expect(Tok::LBrace);
        std::vector<ChoiceRule> rules;
        while (!accept(Tok::RBrace)) rules.push_back(parse_choice_rule());
        try {
          theory.modules.push_back(make_gmodule(std::move(rules)));
        } catch (const std::invalid_argument& e) {
          throw ParseError(brace.span, e.what());
        }
      } else if (accept_word("dmodule")) {
        std::set<Symbol> defined;
        bool explicit_defined = false;
        if (accept(Tok::LBrack)) {
          explicit_defined = true;
          Token kw = expect(Tok::Ident);
          if (kw.text != "defined")
            throw ParseError(kw.span, "expected 'defined'", {"'defined'"});
          expect(Tok::Colon);
          if (!at(Tok::RBrack)) {
            do {
              defined.insert(parse_symbol_slash_arity(SymbolKind::Predicate));
            } while (accept(Tok::Comma));
          }
          expect(Tok::RBrack);
        }
        expect(Tok::LBrace);
        std::vector<DefineRule> rules;
        while (!accept(Tok::RBrace)) rules.push_back(parse_define_rule());
        try {
          theory.modules.push_back(
              explicit_defined ? make_dmodule(std::move(defined), std::move(rules))
                               : make_dmodule(std::move(rules)));
        } catch (const std::invalid_argument& e) {
          throw ParseError(peek().span, e.what());
        }
      } else if (accept_word("tmodule")) {
        Token brace = expect(Tok::LBrace);
        FormulaPtr f = parse_formula();
        accept(Tok::Dot);
        expect(Tok::RBrace);
        try {
          theory.modules.push_back(make_tmodule(f));
        } catch (const std::invalid_argument& e) {
          throw ParseError(brace.span, e.what());
        }
      } else if (accept_word("herbrand")) {
        HerbrandModule h;
        bool explicit_sigma = false;
        if (accept(Tok::LParen)) {
          explicit_sigma = true;
          if (!at(Tok::RParen)) {
            do {
              h.functions.insert(
                  parse_symbol_slash_arity(SymbolKind::Function));
            } while (accept(Tok::Comma));
          }
          expect(Tok::RParen);
        }
        expect(Tok::Dot);
        if (!explicit_sigma) default_herbrands.push_back(theory.modules.size());
        theory.modules.push_back(std::move(h));
      } else {
        throw ParseError(peek().span,
                         "expected module block, found " + describe(peek()),
                         {"'gmodule'", "'dmodule'", "'tmodule'", "'herbrand'"});
      }
    }
    // A bare `herbrand.` covers every function symbol of the theory.
    for (size_t i : default_herbrands)
      std::get<HerbrandModule>(theory.modules[i]).functions = syms.functions();
    return theory;
  }

  Symbol parse_symbol_slash_arity(SymbolKind kind) {
    Token id = expect(Tok::Ident);
    expect(Tok::Slash);
    Token n = expect(Tok::Number);
    return syms.add(id.text, std::stoi(n.text), kind, id.span);
  }

  ChoiceRule parse_choice_rule() {
    expect(Tok::LBrace);
    AtomRef head = parse_atomref();
    expect(Tok::RBrace);
    FormulaPtr body = accept(Tok::LArrow) ? parse_formula() : mk_true();
    expect(Tok::Dot);
    return make_choice_rule(std::move(head), std::move(body));
  }

  DefineRule parse_define_rule() {
    AtomRef head = parse_atomref();
    FormulaPtr body = accept(Tok::LArrow) ? parse_formula() : mk_true();
    expect(Tok::Dot);
    return make_define_rule(std::move(head), std::move(body));
  }

  void expect_end() { expect(Tok::End); }

  SymbolTable syms;

private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

AspProgram parse_program(const std::string& text, const std::string& file) {
  Parser p(text, file);
  AspProgram prog = p.parse_program();
  p.expect_end();
  return prog;
}

AspFoTheory parse_theory(const std::string& text, const std::string& file) {
  Parser p(text, file);
  AspFoTheory t = p.parse_theory();
  p.expect_end();
  return t;
}

FormulaPtr parse_formula(const std::string& text, const std::string& file) {
  Parser p(text, file);
  FormulaPtr f = p.parse_formula();
  while (p.accept(Tok::Dot)) {
  }
  p.expect_end();
  return f;
}

// ---------------------------------------------------------------------------
// Structures (line-oriented format)

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('%');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  std::string last = trim(cur);
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

Tuple parse_tuple(const std::string& entry, const Structure& s,
                  const Symbol& sym, const SourceSpan& span) {
  std::string body = trim(entry);
  std::vector<std::string> names;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw ParseError(span, "malformed tuple '" + entry + "'");
    for (const auto& part : split_on(body.substr(1, body.size() - 2), ','))
      names.push_back(part);
  } else if (!body.empty()) {
    names.push_back(body);
  }
  if (static_cast<int>(names.size()) != sym.arity)
    throw ParseError(span, "tuple arity mismatch for " + to_string(sym));
  Tuple t;
  for (const auto& n : names) {
    try {
      t.push_back(s.element(n));
    } catch (const std::invalid_argument& e) {
      throw ParseError(span, e.what());
    }
  }
  return t;
}

}  // namespace

Structure parse_structure(const std::string& text, const Vocabulary& voc,
                          const std::string& file) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::vector<std::string> domain;
  bool have_domain = false;
  std::vector<std::pair<int, std::string>> rows;
  while (std::getline(is, line)) {
    ++lineno;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    if (!have_domain) {
      SourceSpan span{file, lineno, 1, static_cast<int>(body.size())};
      if (body.rfind("domain:", 0) != 0)
        throw ParseError(span, "expected 'domain:' line", {"'domain:'"});
      domain = split_ws(body.substr(7));
      if (domain.empty())
        throw ParseError(span, "domain must be non-empty");
      have_domain = true;
    } else {
      rows.emplace_back(lineno, body);
    }
  }
  if (!have_domain)
    throw ParseError({file, 1, 1, 0}, "expected 'domain:' line",
                     {"'domain:'"});
  Structure s(domain, voc);
  for (const auto& [ln, body] : rows) {
    SourceSpan span{file, ln, 1, static_cast<int>(body.size())};
    auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ParseError(span, "expected 'name = value' line");
    std::string name = trim(body.substr(0, eq));
    std::string rhs = trim(body.substr(eq + 1));
    auto sym = voc.find(name);
    if (!sym)
      throw ParseError(span, "unknown symbol '" + name + "'");
    if (sym->kind == SymbolKind::Predicate && sym->arity == 0) {
      if (rhs == "true")
        s.add_pred_tuple(*sym, {});
      else if (rhs == "false")
        s.set_pred_table(*sym, {});
      else
        throw ParseError(span, "expected true or false for " + to_string(*sym));
      continue;
    }
    if (sym->kind == SymbolKind::Function && sym->arity == 0) {
      try {
        s.set_func_table(*sym, {{{}, s.element(rhs)}});
      } catch (const std::invalid_argument& e) {
        throw ParseError(span, e.what());
      }
      continue;
    }
    if (rhs.empty() || rhs.front() != '{' || rhs.back() != '}')
      throw ParseError(span, "expected '{ ... }' table for " + to_string(*sym));
    std::string inner = trim(rhs.substr(1, rhs.size() - 2));
    std::vector<std::string> entries =
        inner.empty() ? std::vector<std::string>{} : split_on(inner, ';');
    if (sym->kind == SymbolKind::Predicate) {
      std::set<Tuple> table;
      for (const auto& e : entries)
        table.insert(parse_tuple(e, s, *sym, span));
      s.set_pred_table(*sym, std::move(table));
    } else {
      std::map<Tuple, Elem> table;
      for (const auto& e : entries) {
        auto arrow = e.find("->");
        if (arrow == std::string::npos)
          throw ParseError(span, "expected 'args -> value' entry for " +
                                     to_string(*sym));
        Symbol argsym = *sym;
        Tuple t = parse_tuple(trim(e.substr(0, arrow)), s, argsym, span);
        std::string val = trim(e.substr(arrow + 2));
        try {
          table[t] = s.element(val);
        } catch (const std::invalid_argument& ex) {
          throw ParseError(span, ex.what());
        }
      }
      s.set_func_table(*sym, std::move(table));
    }
  }
  try {
    s.check_total();
  } catch (const std::invalid_argument& e) {
    throw ParseError({file, lineno, 1, 0}, e.what());
  }
  return s;
}

// ---------------------------------------------------------------------------
// Intended interpretations

IntendedInterpretation parse_interpretation(const std::string& text,
                                            const std::string& file) {
  IntendedInterpretation interp;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    SourceSpan span{file, lineno, 1, static_cast<int>(body.size())};
    std::istringstream ls(body);
    std::string kindword, symspec, eq;
    ls >> kindword >> symspec >> eq;
    SymbolKind kind;
    if (kindword == "pred")
      kind = SymbolKind::Predicate;
    else if (kindword == "func")
      kind = SymbolKind::Function;
    else
      throw ParseError(span, "expected 'pred' or 'func'",
                       {"'pred'", "'func'"});
    auto slash = symspec.find('/');
    if (slash == std::string::npos || eq != "=")
      throw ParseError(span, "expected 'pred name/arity = \"template\"'");
    std::string name = symspec.substr(0, slash);
    int arity;
    try {
      arity = std::stoi(symspec.substr(slash + 1));
    } catch (const std::exception&) {
      throw ParseError(span, "malformed arity in '" + symspec + "'");
    }
    auto q1 = body.find('"');
    auto q2 = body.rfind('"');
    if (q1 == std::string::npos || q2 <= q1)
      throw ParseError(span, "expected quoted template");
    std::string tpl = body.substr(q1 + 1, q2 - q1 - 1);
    for (size_t i = 0; i + 1 < tpl.size(); ++i) {
      if (tpl[i] == '#' && std::isdigit(static_cast<unsigned char>(tpl[i + 1]))) {
        int k = tpl[i + 1] - '0';
        if (k < 1 || k > arity)
          throw ParseError(span, "placeholder exceeds arity: #" +
                                     std::to_string(k));
      }
    }
    Symbol s{name, arity, kind};
    if (interp.templates.count(s))
      throw ParseError(span, "duplicate symbol " + to_string(s));
    interp.templates[s] = tpl;
  }
  return interp;
}

// ---------------------------------------------------------------------------
// Printers

std::string print_term(const TermPtr& t) {
  if (t->is_variable()) return t->var;
  std::string out = t->func->name;
  if (!t->args.empty()) {
    out += "(";
    for (size_t i = 0; i < t->args.size(); ++i) {
      if (i) out += ",";
      out += print_term(t->args[i]);
    }
    out += ")";
  }
  return out;
}

namespace {

// Precedence: quantifiers 0 (maximal scope), <=> 1, => 2, | 3, & 4, ~ 5,
// atoms 6.
int formula_prec(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Forall:
    case FormulaKind::Exists: return 0;
    case FormulaKind::Iff: return 1;
    case FormulaKind::Implies: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    case FormulaKind::Not: return 5;
    default: return 6;
  }
}

void print_formula_rec(const FormulaPtr& f, int required, std::string& out) {
  int prec = formula_prec(f);
  bool parens = prec < required;
  if (parens) out += "(";
  switch (f->kind) {
    case FormulaKind::Atom: {
      out += f->pred->name;
      if (!f->args.empty()) {
        out += "(";
        for (size_t i = 0; i < f->args.size(); ++i) {
          if (i) out += ",";
          out += print_term(f->args[i]);
        }
        out += ")";
      }
      break;
    }
    case FormulaKind::Equal:
      out += print_term(f->args[0]) + " = " + print_term(f->args[1]);
      break;
    case FormulaKind::True: out += "true"; break;
    case FormulaKind::False: out += "false"; break;
    case FormulaKind::Not:
      out += "~";
      print_formula_rec(f->lhs, 5, out);
      break;
    case FormulaKind::And:
      print_formula_rec(f->lhs, 4, out);
      out += " & ";
      print_formula_rec(f->rhs, 5, out);
      break;
    case FormulaKind::Or:
      print_formula_rec(f->lhs, 3, out);
      out += " | ";
      print_formula_rec(f->rhs, 4, out);
      break;
    case FormulaKind::Implies:
      print_formula_rec(f->lhs, 3, out);
      out += " => ";
      print_formula_rec(f->rhs, 2, out);
      break;
    case FormulaKind::Iff:
      print_formula_rec(f->lhs, 1, out);
      out += " <=> ";
      print_formula_rec(f->rhs, 2, out);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out += (f->kind == FormulaKind::Forall ? "!" : "?");
      out += f->var + ": ";
      print_formula_rec(f->lhs, 0, out);
      break;
  }
  if (parens) out += ")";
}

std::string print_atomref(const AtomRef& a) {
  std::string out = a.pred.name;
  if (!a.args.empty()) {
    out += "(";
    for (size_t i = 0; i < a.args.size(); ++i) {
      if (i) out += ",";
      out += print_term(a.args[i]);
    }
    out += ")";
  }
  return out;
}

std::string symbol_spec(const Symbol& s) {
  return s.name + "/" + std::to_string(s.arity);
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_formula_rec(f, 0, out);
  return out;
}

std::string print_program(const AspProgram& p) {
  std::string out;
  for (const auto& r : p.rules) {
    std::vector<std::string> body;
    for (const auto& a : r.pos_body) body.push_back(print_atomref(a));
    for (const auto& [l, rgt] : r.diseqs)
      body.push_back(print_term(l) + " != " + print_term(rgt));
    for (const auto& a : r.neg_body) body.push_back("not " + print_atomref(a));
    std::string head;
    if (r.kind == AspRuleKind::Choice)
      head = "{" + print_atomref(*r.head) + "}";
    else if (r.kind == AspRuleKind::Normal)
      head = print_atomref(*r.head);
    if (body.empty()) {
      out += head + ".\n";
    } else {
      std::string joined;
      for (size_t i = 0; i < body.size(); ++i) {
        if (i) joined += ", ";
        joined += body[i];
      }
      out += (head.empty() ? ":- " : head + " :- ") + joined + ".\n";
    }
  }
  return out;
}

std::string print_theory(const AspFoTheory& t) {
  std::string out;
  for (const auto& m : t.modules) {
    if (const auto* g = std::get_if<GModule>(&m)) {
      out += "gmodule {\n";
      for (const auto& r : g->rules) {
        out += "  {" + print_atomref(r.head) + "}";
        if (r.body->kind != FormulaKind::True)
          out += " <- " + print_formula(r.body);
        out += ".\n";
      }
      out += "}\n";
    } else if (const auto* d = std::get_if<DModule>(&m)) {
      out += "dmodule [defined:";
      bool first = true;
      for (const auto& s : d->defined) {
        out += (first ? " " : ", ") + symbol_spec(s);
        first = false;
      }
      out += "] {\n";
      for (const auto& r : d->rules) {
        out += "  " + print_atomref(r.head);
        if (r.body->kind != FormulaKind::True)
          out += " <- " + print_formula(r.body);
        out += ".\n";
      }
      out += "}\n";
    } else if (const auto* tm = std::get_if<TModule>(&m)) {
      out += "tmodule { " + print_formula(tm->sentence) + ". }\n";
    } else if (const auto* h = std::get_if<HerbrandModule>(&m)) {
      out += "herbrand(";
      bool first = true;
      for (const auto& s : h->functions) {
        if (!first) out += ", ";
        out += symbol_spec(s);
        first = false;
      }
      out += ").\n";
    }
  }
  return out;
}

std::string print_structure(const Structure& s) {
  std::string out = "domain:";
  for (const auto& e : s.domain()) out += " " + e;
  out += "\n";
  for (const auto& sym : s.vocabulary().symbols()) {
    if (sym.kind == SymbolKind::Predicate) {
      if (sym.arity == 0) {
        out += sym.name + " = " +
               (s.holds(sym, {}) ? std::string("true") : std::string("false")) +
               "\n";
        continue;
      }
      out += sym.name + " = {";
      bool first = true;
      for (const auto& t : s.pred_table(sym)) {
        out += first ? " " : "; ";
        first = false;
        if (sym.arity == 1) {
          out += s.element_name(t[0]);
        } else {
          out += "(";
          for (size_t i = 0; i < t.size(); ++i) {
            if (i) out += ",";
            out += s.element_name(t[i]);
          }
          out += ")";
        }
      }
      out += first ? "}\n" : " }\n";
    } else {
      if (sym.arity == 0) {
        out += sym.name + " = " + s.element_name(s.apply(sym, {})) + "\n";
        continue;
      }
      out += sym.name + " = {";
      bool first = true;
      for (const auto& [t, v] : s.func_table(sym)) {
        out += first ? " " : "; ";
        first = false;
        if (sym.arity == 1) {
          out += s.element_name(t[0]);
        } else {
          out += "(";
          for (size_t i = 0; i < t.size(); ++i) {
            if (i) out += ",";
            out += s.element_name(t[i]);
          }
          out += ")";
        }
        out += " -> " + s.element_name(v);
      }
      out += first ? "}\n" : " }\n";
    }
  }
  return out;
}

std::string print_interpretation(const IntendedInterpretation& i) {
  std::string out;
  for (const auto& [sym, tpl] : i.templates) {
    out += (sym.kind == SymbolKind::Predicate ? "pred " : "func ");
    std::string escaped;
    for (char c : tpl) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out += symbol_spec(sym) + " = \"" + escaped + "\"\n";
  }
  return out;
}

}  // namespace aspfo
