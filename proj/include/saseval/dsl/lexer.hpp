#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "saseval/diagnostic.hpp"
#include "saseval/dsl/syntax.hpp"

namespace saseval::dsl {

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an End token
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

constexpr bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }
constexpr bool is_ident_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '_' || c == '.' || c == '-';
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  LexResult run() {
    LexResult out;
    while (true) {
      skip_trivia();
      if (pos_ >= text_.size()) {
        out.tokens.push_back(Token{TokenKind::End, {}, 0, span_here(1)});
        break;
      }
      out.tokens.push_back(next());
    }
    out.diagnostics = std::move(diags_);
    return out;
  }

 private:
  SourceSpan span_here(std::size_t length) const { return {file_, line_, column_, length}; }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          advance();
        }
      } else {
        break;
      }
    }
  }

  void error(const SourceSpan& span, std::string message, std::string hint = {}) {
    Diagnostic d = make_error("LexError", {}, std::move(message));
    d.span = span;
    d.hint = std::move(hint);
    diags_.push_back(std::move(d));
  }

  Token punct(TokenKind kind) {
    Token t{kind, std::string(1, text_[pos_]), 0, span_here(1)};
    advance();
    return t;
  }

  Token next() {
    const char c = text_[pos_];
    switch (c) {
      case '{': return punct(TokenKind::LBrace);
      case '}': return punct(TokenKind::RBrace);
      case '[': return punct(TokenKind::LBracket);
      case ']': return punct(TokenKind::RBracket);
      case ':': return punct(TokenKind::Colon);
      case ',': return punct(TokenKind::Comma);
      case '"': return string();
      default: break;
    }
    if (is_alpha(c)) {
      return word();
    }
    if (is_digit(c) || (c == '-' && is_digit(peek(1)))) {
      return number();
    }
    Token bad{TokenKind::Invalid, std::string(1, c), 0, span_here(1)};
    // Keep multi-byte UTF-8 sequences together.
    std::size_t len = 1;
    if (static_cast<unsigned char>(c) >= 0x80) {
      while (pos_ + len < text_.size() &&
             (static_cast<unsigned char>(text_[pos_ + len]) & 0xC0) == 0x80) {
        ++len;
      }
    }
    bad.text = std::string(text_.substr(pos_, len));
    bad.span.length = len;
    error(bad.span, "unexpected character '" + bad.text + "'",
          "expected a keyword, identifier, string, integer or punctuation");
    for (std::size_t i = 0; i < len; ++i) {
      advance();
    }
    return bad;
  }

  Token word() {
    Token t{TokenKind::Ident, {}, 0, span_here(0)};
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      advance();
    }
    t.text = std::string(text_.substr(start, pos_ - start));
    t.span.length = pos_ - start;
    return t;
  }

  Token number() {
    Token t{TokenKind::Integer, {}, 0, span_here(0)};
    const std::size_t start = pos_;
    if (text_[pos_] == '-') {
      advance();
    }
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      advance();
    }
    bool malformed = false;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      malformed = true;
      advance();
    }
    t.text = std::string(text_.substr(start, pos_ - start));
    t.span.length = pos_ - start;
    if (malformed) {
      t.kind = TokenKind::Invalid;
      error(t.span, "malformed token '" + t.text + "'",
            "identifiers must start with a letter, e.g. T" + t.text);
      return t;
    }
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.integer);
    if (ec != std::errc{}) {
      t.kind = TokenKind::Invalid;
      error(t.span, "integer literal '" + t.text + "' out of range");
    }
    return t;
  }

  Token string() {
    Token t{TokenKind::String, {}, 0, span_here(0)};
    const std::size_t start = pos_;
    advance();  // opening quote
    bool terminated = false;
    bool bad_escape = false;
    while (pos_ < text_.size() && text_[pos_] != '\n') {
      const char c = text_[pos_];
      if (c == '"') {
        advance();
        terminated = true;
        break;
      }
      if (c == '\\') {
        const SourceSpan esc = span_here(2);
        const char n = peek(1);
        if (n == '"' || n == '\\') {
          t.text += n;
        } else if (n == 'n') {
          t.text += '\n';
        } else {
          if (n == '\n' || n == '\0') {
            advance();
            continue;
          }
          bad_escape = true;
          error(esc, std::string("unknown escape sequence '\\") + n + "'",
                "supported escapes are \\\" \\\\ \\n");
        }
        advance();
        advance();
        continue;
      }
      t.text += c;
      advance();
    }
    t.span.length = pos_ - start;
    if (!terminated) {
      t.kind = TokenKind::Invalid;
      error(t.span, "unterminated string literal", "close the string with '\"' on the same line");
    } else if (bad_escape) {
      t.kind = TokenKind::Invalid;
    }
    return t;
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::vector<Diagnostic> diags_;
};

}  // namespace detail

inline LexResult lex(std::string_view text, std::string file = "<input>") {
  return detail::Lexer(text, std::move(file)).run();
}

}  // namespace saseval::dsl
