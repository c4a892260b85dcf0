#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "saseval/diagnostic.hpp"
#include "saseval/dsl/lexer.hpp"
#include "saseval/dsl/syntax.hpp"

namespace saseval::dsl {

namespace detail {

// Grammar:
//   file  := block*
//   block := KIND IDENT "{" (entry | block)* "}"
//   entry := KEY ":" value
//   value := STRING | IDENT | INTEGER | "[" (value ("," value)*)? "]"
//
// Only scenario blocks may nest (subscenario children). After an error the
// parser skips ahead to the next `KIND IDENT {` sequence.
class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic> lex_diags, std::string file)
      : tokens_(std::move(tokens)), diags_(std::move(lex_diags)) {
    doc_.file = std::move(file);
  }

  Outcome<Document> run() {
    while (cur().kind != TokenKind::End) {
      const std::size_t start = pos_;
      Block block;
      if (parse_block(block, /*parent=*/nullptr)) {
        doc_.blocks.push_back(std::move(block));
      } else {
        recover(start);
      }
    }
    Outcome<Document> out;
    out.diagnostics = std::move(diags_);
    if (!has_errors(out.diagnostics)) {
      out.value = std::move(doc_);
    }
    return out;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& at(std::size_t ahead) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  void bump() {
    if (cur().kind != TokenKind::End) {
      ++pos_;
    }
  }

  bool starts_top_level_block(std::size_t ahead = 0) const {
    return at(ahead).kind == TokenKind::Ident && is_block_kind(at(ahead).text) &&
           at(ahead + 1).kind == TokenKind::Ident && at(ahead + 2).kind == TokenKind::LBrace;
  }

  void recover(std::size_t start) {
    if (pos_ == start) {
      bump();
    }
    while (cur().kind != TokenKind::End && !starts_top_level_block()) {
      bump();
    }
  }

  // Reports against the current token, unless the lexer already did.
  bool fail(std::string message, std::string expected) {
    if (cur().kind == TokenKind::Invalid) {
      return false;
    }
    Diagnostic d = make_error("ParseError", {}, std::move(message));
    d.span = cur().span;
    d.hint = "expected " + std::move(expected);
    diags_.push_back(std::move(d));
    return false;
  }

  std::string describe_current() const {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Ident: return "identifier '" + t.text + "'";
      case TokenKind::Integer: return "integer " + t.text;
      case TokenKind::String: return "string";
      default: return std::string(token_kind_name(t.kind));
    }
  }

  bool expect(TokenKind kind, std::string_view context) {
    if (cur().kind != kind) {
      return fail("unexpected " + describe_current() + " " + std::string(context),
                  std::string(token_kind_name(kind)));
    }
    bump();
    return true;
  }

  bool parse_block(Block& block, const Block* parent) {
    if (cur().kind != TokenKind::Ident ||
        (parent ? cur().text != kSubscenarioKind : !is_block_kind(cur().text))) {
      std::string kinds;
      for (auto k : kBlockKinds) {
        kinds += (kinds.empty() ? "" : ", ") + std::string(k);
      }
      return fail("unexpected " + describe_current() + " at top level",
                  "a block kind (" + kinds + ")");
    }
    block.kind = cur().text;
    block.span = cur().span;
    bump();
    if (cur().kind != TokenKind::Ident) {
      return fail("unexpected " + describe_current() + " after '" + block.kind + "'",
                  "a block identifier");
    }
    block.id = cur().text;
    block.id_span = cur().span;
    bump();
    if (!expect(TokenKind::LBrace, "after block identifier")) {
      return false;
    }

    std::set<std::string> keys;
    while (cur().kind != TokenKind::RBrace) {
      if (cur().kind == TokenKind::End) {
        return fail("unexpected end of file inside " + block.kind + " " + block.id,
                    "'}' to close the block");
      }
      if (!parent && starts_top_level_block() ) {
        return fail("block " + block.id + " is not closed before the next block", "'}'");
      }
      if (cur().kind != TokenKind::Ident) {
        return fail("unexpected " + describe_current() + " in " + block.kind + " " + block.id,
                    "a key or '}'");
      }
      if (at(1).kind == TokenKind::Ident) {
        if (parent || block.kind != "scenario" || cur().text != kSubscenarioKind) {
          return fail("nested block '" + cur().text + "' is not allowed in " + block.kind,
                      "':' after key '" + cur().text + "'");
        }
        Block child;
        if (!parse_block(child, &block)) {
          return false;
        }
        block.children.push_back(std::move(child));
        continue;
      }
      Entry entry;
      entry.key = cur().text;
      entry.key_span = cur().span;
      bump();
      if (!expect(TokenKind::Colon, "after key '" + entry.key + "'")) {
        return false;
      }
      if (!parse_value(entry.value)) {
        return false;
      }
      if (!keys.insert(entry.key).second) {
        Diagnostic d = make_error("DuplicateKey", block.id,
                                  "duplicate key '" + entry.key + "' in " + block.kind + " " +
                                      block.id);
        d.span = entry.key_span;
        d.hint = "each key may appear once per block";
        diags_.push_back(std::move(d));
        continue;
      }
      block.entries.push_back(std::move(entry));
    }
    bump();  // '}'
    return true;
  }

  bool parse_value(Value& value) {
    const Token& t = cur();
    value.span = t.span;
    switch (t.kind) {
      case TokenKind::String:
        value.kind = Value::Kind::String;
        value.text = t.text;
        bump();
        return true;
      case TokenKind::Ident:
        value.kind = Value::Kind::Ident;
        value.text = t.text;
        bump();
        return true;
      case TokenKind::Integer:
        value.kind = Value::Kind::Integer;
        value.integer = t.integer;
        bump();
        return true;
      case TokenKind::LBracket:
        break;
      default:
        return fail("unexpected " + describe_current() + " where a value was expected",
                    "a string, identifier, integer or '['");
    }
    value.kind = Value::Kind::List;
    bump();
    if (cur().kind == TokenKind::RBracket) {
      bump();
      return true;
    }
    while (true) {
      Value item;
      if (!parse_value(item)) {
        return false;
      }
      value.items.push_back(std::move(item));
      if (cur().kind == TokenKind::Comma) {
        bump();
        continue;
      }
      if (cur().kind == TokenKind::RBracket) {
        bump();
        return true;
      }
      return fail("unexpected " + describe_current() + " in list", "',' or ']'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diags_;
  Document doc_;
};

}  // namespace detail

/// Parses one `.saseval` text. Fails with at least one diagnostic if the text
/// is lexically or syntactically malformed; recovery continues at the next
/// top-level block so independent errors are all reported.
inline Outcome<Document> parse(std::string_view text, std::string file = "<input>") {
  LexResult lexed = lex(text, file);
  return detail::Parser(std::move(lexed.tokens), std::move(lexed.diagnostics), std::move(file))
      .run();
}

}  // namespace saseval::dsl
