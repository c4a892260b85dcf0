#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "saseval/diagnostic.hpp"

namespace saseval::dsl {

enum class TokenKind {
  Ident,
  String,
  Integer,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Colon,
  Comma,
  Invalid,  // already reported by the lexer
  End,
};

inline std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::String: return "string";
    case TokenKind::Integer: return "integer";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Comma: return "','";
    case TokenKind::Invalid: return "invalid token";
    case TokenKind::End: return "end of file";
  }
  return "?";
}

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // decoded contents for strings, spelling otherwise
  long long integer = 0;
  SourceSpan span;
};

/// Top-level block kinds, in canonical print order.
inline constexpr std::array<std::string_view, 8> kBlockKinds{
    "scenario", "asset", "threat", "function", "hara", "goal", "attack", "justify"};

inline constexpr std::string_view kSubscenarioKind = "subscenario";

inline bool is_block_kind(std::string_view word) {
  return std::find(kBlockKinds.begin(), kBlockKinds.end(), word) != kBlockKinds.end();
}

struct Value {
  enum class Kind { String, Ident, Integer, List };

  Kind kind = Kind::String;
  std::string text;
  long long integer = 0;
  std::vector<Value> items;
  SourceSpan span;

  static Value string(std::string s) { return {Kind::String, std::move(s), 0, {}, {}}; }
  static Value ident(std::string s) { return {Kind::Ident, std::move(s), 0, {}, {}}; }
  static Value number(long long n) { return {Kind::Integer, {}, n, {}, {}}; }
  static Value list(std::vector<Value> items) { return {Kind::List, {}, 0, std::move(items), {}}; }

  // Spans are ignored.
  friend bool operator==(const Value& a, const Value& b) {
    return a.kind == b.kind && a.text == b.text && a.integer == b.integer &&
           a.items == b.items;
  }
};

struct Entry {
  std::string key;
  Value value;
  SourceSpan key_span;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.key == b.key && a.value == b.value;
  }
};

struct Block {
  std::string kind;
  std::string id;
  std::vector<Entry> entries;
  std::vector<Block> children;  // subscenario blocks of a scenario
  SourceSpan span;              // the kind keyword
  SourceSpan id_span;

  const Entry* find(std::string_view key) const {
    for (const auto& e : entries) {
      if (e.key == key) {
        return &e;
      }
    }
    return nullptr;
  }

  friend bool operator==(const Block& a, const Block& b) {
    return a.kind == b.kind && a.id == b.id && a.entries == b.entries &&
           a.children == b.children;
  }
};

struct Document {
  std::string file;
  std::vector<Block> blocks;

  // The file name is not part of the content.
  friend bool operator==(const Document& a, const Document& b) { return a.blocks == b.blocks; }
};

}  // namespace saseval::dsl
