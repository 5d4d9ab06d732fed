#pragma once

#include <string>
#include <variant>
#include <vector>

#include "vlat/dsl/diagnostic.hpp"
#include "vlat/scalar.hpp"

namespace vlat::dsl {

/// Literals are kept exact; decimals become the rational they spell.
struct CNum {
  Rational re{0};
  Rational im{0};
  bool complex = false;

  bool operator==(const CNum&) const = default;
};

struct ModelDecl {
  std::string name;
  std::vector<std::string> points;

  bool operator==(const ModelDecl&) const = default;
};

struct ElemDecl {
  std::string name;
  bool identity = false;  // elem a = e
  std::vector<CNum> values;

  bool is_complex() const;
  bool operator==(const ElemDecl&) const = default;
};

/// poly[c0,c1,..] * pow([r..], n)   or   npow(k, [r..]) / npow(k, [r..], shift)
struct SeqDecl {
  enum class Form { Poly, NPow };
  std::string name;
  Form form = Form::Poly;
  std::vector<Rational> poly;
  long exponent = 0;
  long shift = 0;
  std::vector<Rational> ratios;

  bool operator==(const SeqDecl&) const = default;
};

struct SeriesDecl {
  std::string name;
  std::string seq;

  bool operator==(const SeriesDecl&) const = default;
};

struct PSeriesDecl {
  std::string name;
  std::string seq;
  std::string center;

  bool operator==(const PSeriesDecl&) const = default;
};

struct QueryDecl {
  std::string verb;
  std::string target;
  std::vector<std::string> args;

  bool operator==(const QueryDecl&) const = default;
};

using DeclNode = std::variant<ModelDecl, ElemDecl, SeqDecl, SeriesDecl, PSeriesDecl, QueryDecl>;

struct Decl {
  DeclNode node;
  Span span;
};

struct Program {
  std::vector<Decl> decls;
};

/// Structural equality ignoring spans.
bool same_ast(const Program& a, const Program& b);

const std::string& decl_name(const DeclNode& d);
std::string decl_kind(const DeclNode& d);

/// Canonical source text; parses back to the same AST.
std::string pretty_print(const Program& p);
std::string format_rational(const Rational& q);

}  // namespace vlat::dsl
