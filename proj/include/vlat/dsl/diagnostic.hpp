#pragma once

#include <string>
#include <vector>

namespace vlat::dsl {

struct Span {
  int line = 1, col = 1;
  int end_line = 1, end_col = 1;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  Span span;
  std::string code;  // UnknownCharacter, SyntaxError, ResolveError
  std::string message;

  /// "file:line:col: severity[code]: message"
  std::string format(const std::string& file) const;
};

bool has_errors(const std::vector<Diagnostic>& ds);

}  // namespace vlat::dsl
