#pragma once

#include <string_view>
#include <vector>

#include "vlat/dsl/ast.hpp"
#include "vlat/dsl/lexer.hpp"

namespace vlat::dsl {

struct ParseResult {
  Program program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

/// Recursive descent, one token of lookahead. After a syntax error the parser
/// skips to the next declaration keyword and keeps going.
ParseResult parse(const std::vector<Token>& tokens);
/// tokenize + parse + resolve.
ParseResult parse_program(std::string_view text);

/// Name and shape checks: one model declared first, no redefinitions, every
/// name declared before use with the right kind, vector sizes match the model.
std::vector<Diagnostic> resolve(const Program& p);

const std::vector<std::string>& query_verbs();

}  // namespace vlat::dsl
