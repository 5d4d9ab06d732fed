#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vlat/dsl/diagnostic.hpp"

namespace vlat::dsl {

enum class Tok {
  Keyword,  // model elem seq series pseries query
  Ident,
  Int,
  Rat,      // p/q written without spaces
  Decimal,
  Eq,
  LBrack,
  RBrack,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Star,
  Plus,
  Minus,
  Slash,
};

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

std::string to_string(Tok k);
/// "kw:elem", "ident:a", "rat:1/2", "eq", ...
std::string describe(const Token& t);

bool is_decl_keyword(std::string_view word);

struct LexResult {
  std::vector<Token> tokens;
  std::vector<Diagnostic> diagnostics;
};

/// Comments run from '#' to end of line. Unknown characters are reported and
/// skipped, so the token list is usable for further diagnostics.
LexResult tokenize(std::string_view text);

}  // namespace vlat::dsl
