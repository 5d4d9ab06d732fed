#include "vlat/dsl/parser.hpp"

#include <map>
#include <set>

namespace vlat::dsl {

const std::vector<std::string>& query_verbs() {
  static const std::vector<std::string> v = {"nthroot", "converge", "geom",   "radius",
                                             "inomega", "abel",     "axioms", "demo"};
  return v;
}

namespace {

struct SyntaxError {
  Span span;
  std::string message;
};

class Parser {
public:
  explicit Parser(const std::vector<Token>& t) : toks_(t) {}

  ParseResult run() {
    ParseResult r;
    while (!at_end()) {
      std::size_t start = pos_;
      try {
        Decl d = declaration();
        r.program.decls.push_back(std::move(d));
      } catch (const SyntaxError& e) {
        r.diagnostics.push_back({Severity::Error, e.span, "SyntaxError", e.message});
        if (pos_ == start) ++pos_;
        while (!at_end() && peek().kind != Tok::Keyword) ++pos_;
      }
    }
    return r;
  }

private:
  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek() const { return toks_[pos_]; }
  bool check(Tok k) const { return !at_end() && peek().kind == k; }
  bool check_word(const char* w) const { return check(Tok::Ident) && peek().text == w; }

  Span here() const {
    if (!at_end()) return peek().span;
    if (toks_.empty()) return {};
    Span s = toks_.back().span;
    return {s.end_line, s.end_col, s.end_line, s.end_col};
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string got = at_end() ? "end of input" : "'" + peek().text + "'";
    throw SyntaxError{here(), "expected " + what + ", found " + got};
  }

  const Token& expect(Tok k, const char* what) {
    if (!check(k)) fail(what);
    return toks_[pos_++];
  }

  void expect_word(const char* w) {
    if (!check_word(w)) fail(std::string("'") + w + "'");
    ++pos_;
  }

  std::string ident(const char* what = "identifier") { return expect(Tok::Ident, what).text; }

  Decl declaration() {
    if (!check(Tok::Keyword)) fail("a declaration keyword");
    Span span = peek().span;
    std::string kw = toks_[pos_++].text;
    DeclNode node;
    if (kw == "model")
      node = model();
    else if (kw == "elem")
      node = elem();
    else if (kw == "seq")
      node = seq();
    else if (kw == "series")
      node = series();
    else if (kw == "pseries")
      node = pseries();
    else
      node = query();
    Span last = toks_[pos_ - 1].span;
    span.end_line = last.end_line;
    span.end_col = last.end_col;
    return {std::move(node), span};
  }

  ModelDecl model() {
    ModelDecl d;
    d.name = ident("model name");
    expect(Tok::Eq, "'='");
    expect_word("points");
    expect(Tok::LBrace, "'{'");
    d.points.push_back(ident("point label"));
    while (check(Tok::Comma)) {
      ++pos_;
      d.points.push_back(ident("point label"));
    }
    expect(Tok::RBrace, "'}'");
    return d;
  }

  Rational unsigned_number() {
    if (check(Tok::Int)) return Rational(toks_[pos_++].text, 10);
    if (check(Tok::Rat)) {
      Rational q(toks_[pos_++].text, 10);
      if (q.get_den() == 0) throw SyntaxError{toks_[pos_ - 1].span, "zero denominator"};
      q.canonicalize();
      return q;
    }
    if (check(Tok::Decimal)) {
      const std::string& s = toks_[pos_++].text;
      auto dot = s.find('.');
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      Rational q(mpz_class(digits, 10), mpz_class("1" + std::string(s.size() - dot - 1, '0'), 10));
      q.canonicalize();
      return q;
    }
    fail("a number");
  }

  Rational number() {
    bool neg = false;
    if (check(Tok::Minus)) {
      ++pos_;
      neg = true;
    }
    Rational q = unsigned_number();
    if (check(Tok::Slash)) {
      ++pos_;
      Span s = here();
      Rational den = unsigned_number();
      if (den == 0) throw SyntaxError{s, "zero denominator"};
      q /= den;
    }
    return neg ? Rational(-q) : q;
  }

  long integer() {
    bool neg = false;
    if (check(Tok::Minus)) {
      ++pos_;
      neg = true;
    }
    const Token& t = expect(Tok::Int, "an integer");
    if (t.text.size() > 9) throw SyntaxError{t.span, "integer out of range"};
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  CNum cnum() {
    CNum c;
    c.re = number();
    if (check(Tok::Plus) || check(Tok::Minus)) {
      bool neg = peek().kind == Tok::Minus;
      ++pos_;
      c.im = unsigned_number();
      if (check(Tok::Slash)) {
        ++pos_;
        Span s = here();
        Rational den = unsigned_number();
        if (den == 0) throw SyntaxError{s, "zero denominator"};
        c.im /= den;
      }
      if (neg) c.im = -c.im;
      expect_word("i");
      c.complex = true;
    }
    return c;
  }

  std::vector<Rational> vector() {
    expect(Tok::LBrack, "'['");
    std::vector<Rational> v = {number()};
    while (check(Tok::Comma)) {
      ++pos_;
      v.push_back(number());
    }
    expect(Tok::RBrack, "']'");
    return v;
  }

  ElemDecl elem() {
    ElemDecl d;
    d.name = ident("element name");
    expect(Tok::Eq, "'='");
    if (check_word("e")) {
      ++pos_;
      d.identity = true;
      return d;
    }
    expect(Tok::LBrack, "'[' or 'e'");
    d.values.push_back(cnum());
    while (check(Tok::Comma)) {
      ++pos_;
      d.values.push_back(cnum());
    }
    expect(Tok::RBrack, "']'");
    return d;
  }

  SeqDecl seq() {
    SeqDecl d;
    d.name = ident("sequence name");
    expect(Tok::LParen, "'('");
    expect_word("n");
    expect(Tok::RParen, "')'");
    expect(Tok::Eq, "'='");
    if (check_word("poly")) {
      ++pos_;
      d.form = SeqDecl::Form::Poly;
      d.poly = vector();
      expect(Tok::Star, "'*'");
      expect_word("pow");
      expect(Tok::LParen, "'('");
      d.ratios = vector();
      expect(Tok::Comma, "','");
      expect_word("n");
      expect(Tok::RParen, "')'");
    } else if (check_word("npow")) {
      ++pos_;
      d.form = SeqDecl::Form::NPow;
      expect(Tok::LParen, "'('");
      d.exponent = integer();
      expect(Tok::Comma, "','");
      d.ratios = vector();
      if (check(Tok::Comma)) {
        ++pos_;
        d.shift = integer();
      }
      expect(Tok::RParen, "')'");
    } else {
      fail("'poly' or 'npow'");
    }
    return d;
  }

  SeriesDecl series() {
    SeriesDecl d;
    d.name = ident("series name");
    expect(Tok::Eq, "'='");
    expect_word("sum");
    d.seq = ident("sequence name");
    return d;
  }

  PSeriesDecl pseries() {
    PSeriesDecl d;
    d.name = ident("power series name");
    expect(Tok::Eq, "'='");
    expect_word("sum");
    d.seq = ident("sequence name");
    expect_word("center");
    d.center = ident("element name");
    return d;
  }

  QueryDecl query() {
    QueryDecl d;
    if (!check(Tok::Ident)) fail("a query verb");
    bool known = false;
    for (const auto& v : query_verbs()) known = known || v == peek().text;
    if (!known) fail("one of nthroot, converge, geom, radius, inomega, abel, axioms, demo");
    d.verb = toks_[pos_++].text;
    d.target = ident("query target");
    while (check(Tok::Ident)) d.args.push_back(toks_[pos_++].text);
    return d;
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ParseResult parse_program(std::string_view text) {
  LexResult lex = tokenize(text);
  ParseResult r = parse(lex.tokens);
  r.diagnostics.insert(r.diagnostics.begin(), lex.diagnostics.begin(), lex.diagnostics.end());
  if (r.ok()) {
    auto more = resolve(r.program);
    r.diagnostics.insert(r.diagnostics.end(), more.begin(), more.end());
  }
  return r;
}

std::vector<Diagnostic> resolve(const Program& p) {
  std::vector<Diagnostic> out;
  auto error = [&](const Span& s, const std::string& msg) { out.push_back({Severity::Error, s, "ResolveError", msg}); };
  std::map<std::string, const DeclNode*> names;
  std::size_t model_size = 0;
  bool have_model = false;

  auto lookup = [&](const Span& s, const std::string& name, std::size_t want, const char* what) {
    auto it = names.find(name);
    if (it == names.end()) {
      error(s, "undefined name '" + name + "'");
      return false;
    }
    if (it->second->index() != want) {
      error(s, "'" + name + "' is a " + decl_kind(*it->second) + ", expected " + what);
      return false;
    }
    return true;
  };
  auto sized = [&](const Span& s, std::size_t n, const std::string& name) {
    if (have_model && n != model_size)
      error(s, "'" + name + "' has " + std::to_string(n) + " coordinates but the model has " +
                   std::to_string(model_size) + " points");
  };

  if (p.decls.empty()) {
    error({}, "program declares no model");
    return out;
  }
  if (!std::holds_alternative<ModelDecl>(p.decls.front().node))
    error(p.decls.front().span, "the first declaration must be the model");

  for (const auto& d : p.decls) {
    const Span& s = d.span;
    if (!std::holds_alternative<QueryDecl>(d.node)) {
      const std::string& name = decl_name(d.node);
      if (names.count(name)) {
        error(s, "redefinition of '" + name + "'");
        continue;
      }
      names[name] = &d.node;
    }
    if (auto* m = std::get_if<ModelDecl>(&d.node)) {
      if (have_model) {
        error(s, "a program declares exactly one model");
        continue;
      }
      have_model = true;
      model_size = m->points.size();
      std::set<std::string> seen;
      for (const auto& pt : m->points)
        if (!seen.insert(pt).second) error(s, "duplicate point label '" + pt + "'");
    } else if (auto* e = std::get_if<ElemDecl>(&d.node)) {
      if (!e->identity) sized(s, e->values.size(), e->name);
    } else if (auto* q = std::get_if<SeqDecl>(&d.node)) {
      sized(s, q->ratios.size(), q->name);
    } else if (auto* sr = std::get_if<SeriesDecl>(&d.node)) {
      lookup(s, sr->seq, 2, "a seq");
    } else if (auto* ps = std::get_if<PSeriesDecl>(&d.node)) {
      lookup(s, ps->seq, 2, "a seq");
      lookup(s, ps->center, 1, "an elem");
    } else if (auto* qd = std::get_if<QueryDecl>(&d.node)) {
      const std::string& v = qd->verb;
      std::size_t arity = 0;
      if (v == "nthroot" || v == "converge") {
        lookup(s, qd->target, 3, "a series");
      } else if (v == "geom") {
        lookup(s, qd->target, 1, "an elem");
      } else if (v == "radius" || v == "abel") {
        lookup(s, qd->target, 4, "a pseries");
      } else if (v == "inomega") {
        lookup(s, qd->target, 4, "a pseries");
        arity = 1;
        if (qd->args.size() == 1 && lookup(s, qd->args[0], 1, "an elem")) {
          auto* r = std::get_if<ElemDecl>(names[qd->args[0]]);
          if (r && r->is_complex()) error(s, "inomega needs a real radius element");
        }
      } else if (v == "axioms") {
        lookup(s, qd->target, 0, "the model");
      } else if (v == "demo") {
        if (qd->target != "shrinking_disk" && qd->target != "cb01")
          error(s, "unknown demo '" + qd->target + "' (expected shrinking_disk or cb01)");
      }
      if (qd->args.size() != arity)
        error(s, "query " + v + " takes " + std::to_string(arity) + " extra argument(s), got " +
                     std::to_string(qd->args.size()));
    }
  }
  return out;
}

}  // namespace vlat::dsl
