#include "vlat/dsl/lexer.hpp"

#include <array>
#include <cctype>
#include <optional>

namespace vlat::dsl {

std::string Diagnostic::format(const std::string& file) const {
  return file + ":" + std::to_string(span.line) + ":" + std::to_string(span.col) + ": " +
         (severity == Severity::Error ? "error" : "warning") + "[" + code + "]: " + message;
}

bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::Error) return true;
  return false;
}

std::string to_string(Tok k) {
  switch (k) {
    case Tok::Keyword: return "kw";
    case Tok::Ident: return "ident";
    case Tok::Int: return "int";
    case Tok::Rat: return "rat";
    case Tok::Decimal: return "decimal";
    case Tok::Eq: return "eq";
    case Tok::LBrack: return "lbrack";
    case Tok::RBrack: return "rbrack";
    case Tok::LBrace: return "lbrace";
    case Tok::RBrace: return "rbrace";
    case Tok::LParen: return "lparen";
    case Tok::RParen: return "rparen";
    case Tok::Comma: return "comma";
    case Tok::Star: return "star";
    case Tok::Plus: return "plus";
    case Tok::Minus: return "minus";
    case Tok::Slash: return "slash";
  }
  return "?";
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Keyword:
    case Tok::Ident:
    case Tok::Int:
    case Tok::Rat:
    case Tok::Decimal: return to_string(t.kind) + ":" + t.text;
    default: return to_string(t.kind);
  }
}

bool is_decl_keyword(std::string_view w) {
  static constexpr std::array<std::string_view, 6> kw = {"model", "elem", "seq", "series", "pseries", "query"};
  for (auto k : kw)
    if (k == w) return true;
  return false;
}

namespace {

class Lexer {
public:
  explicit Lexer(std::string_view s) : src_(s) {}

  LexResult run() {
    while (!done()) {
      char c = peek();
      if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!done() && peek() != '\n') advance();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        ident();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        number();
      } else if (auto k = punct(c)) {
        begin();
        advance();
        emit(*k);
      } else {
        unknown();
      }
    }
    return std::move(out_);
  }

private:
  bool done() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }
  static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void begin() {
    start_ = pos_;
    span_.line = line_;
    span_.col = col_;
  }

  void emit(Tok k) {
    span_.end_line = line_;
    span_.end_col = col_;
    out_.tokens.push_back({k, std::string(src_.substr(start_, pos_ - start_)), span_});
  }

  static std::optional<Tok> punct(char c) {
    switch (c) {
      case '=': return Tok::Eq;
      case '[': return Tok::LBrack;
      case ']': return Tok::RBrack;
      case '{': return Tok::LBrace;
      case '}': return Tok::RBrace;
      case '(': return Tok::LParen;
      case ')': return Tok::RParen;
      case ',': return Tok::Comma;
      case '*': return Tok::Star;
      case '+': return Tok::Plus;
      case '-': return Tok::Minus;
      case '/': return Tok::Slash;
      default: return std::nullopt;
    }
  }

  void ident() {
    begin();
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
    emit(is_decl_keyword(src_.substr(start_, pos_ - start_)) ? Tok::Keyword : Tok::Ident);
  }

  void number() {
    begin();
    while (digit(peek())) advance();
    if (peek() == '.' && digit(peek(1))) {
      advance();
      while (digit(peek())) advance();
      emit(Tok::Decimal);
      return;
    }
    if (peek() == '/' && digit(peek(1))) {
      advance();
      while (digit(peek())) advance();
      emit(Tok::Rat);
      return;
    }
    emit(Tok::Int);
  }

  void unknown() {
    begin();
    const char first = peek();
    std::size_t n = 0;
    if ((static_cast<unsigned char>(first) & 0x80) != 0) {
      advance();
      while (!done() && (static_cast<unsigned char>(peek()) & 0xC0) == 0x80) advance();
    } else {
      while (!done() && peek() == first && n < 64) {
        advance();
        ++n;
      }
    }
    span_.end_line = line_;
    span_.end_col = col_;
    std::string lexeme(src_.substr(start_, pos_ - start_));
    out_.diagnostics.push_back({Severity::Error, span_, "UnknownCharacter", "unknown character '" + lexeme + "'"});
  }

  std::string_view src_;
  std::size_t pos_ = 0, start_ = 0;
  int line_ = 1, col_ = 1;
  Span span_;
  LexResult out_;
};

}  // namespace

LexResult tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace vlat::dsl
