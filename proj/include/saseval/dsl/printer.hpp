#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "saseval/dsl/syntax.hpp"
#include "saseval/model.hpp"

namespace saseval::dsl {

inline std::string quote(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  out += '"';
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c; break;
    }
  }
  out += '"';
  return out;
}

inline std::string print_value(const Value& v) {
  switch (v.kind) {
    case Value::Kind::String: return quote(v.text);
    case Value::Kind::Ident: return v.text;
    case Value::Kind::Integer: return std::to_string(v.integer);
    case Value::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.items.size(); ++i) {
        if (i) out += ", ";
        out += print_value(v.items[i]);
      }
      return out + "]";
    }
  }
  return {};
}

namespace detail {

inline void print_block(const Block& b, std::string& out, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out += indent + b.kind + ' ' + b.id + " {\n";
  for (const auto& e : b.entries) {
    out += indent + "  " + e.key + ": " + print_value(e.value) + '\n';
  }
  for (const auto& child : b.children) {
    print_block(child, out, depth + 1);
  }
  out += indent + "}\n";
}

template <typename Enum, typename Range>
Value label_list_value(const Range& values) {
  std::vector<Value> items;
  for (Enum v : values) {
    items.push_back(Value::ident(std::string(label(v))));
  }
  return Value::list(std::move(items));
}

inline Value ident_list_value(const std::vector<std::string>& ids) {
  std::vector<Value> items;
  for (const auto& id : ids) {
    items.push_back(Value::ident(id));
  }
  return Value::list(std::move(items));
}

inline Block make_block(std::string kind, std::string id) {
  Block b;
  b.kind = std::move(kind);
  b.id = std::move(id);
  return b;
}

inline void add(Block& b, std::string key, Value v) { b.entries.push_back({std::move(key), std::move(v), {}}); }

}  // namespace detail

/// Writes a document structurally: blocks in document order, entries in their
/// order, then nested blocks.
inline std::string print_document(const Document& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    if (i) out += '\n';
    detail::print_block(doc.blocks[i], out, 0);
  }
  return out;
}

/// Builds the canonical document for a project: blocks grouped by kind
/// (scenario, asset, threat, function, hara, goal, attack, justify), sorted by
/// id within a kind, keys in a fixed order per kind.
inline Document to_document(const Project& p) {
  using detail::add;
  using detail::make_block;
  Document doc;
  for (const auto& [id, s] : p.scenarios) {
    Block b = make_block("scenario", id);
    add(b, "title", Value::string(s.title));
    for (const auto& sub : s.subscenarios) {
      Block child = make_block(std::string(kSubscenarioKind), sub.id);
      add(child, "title", Value::string(sub.title));
      b.children.push_back(std::move(child));
    }
    doc.blocks.push_back(std::move(b));
  }
  for (const auto& [id, a] : p.assets) {
    Block b = make_block("asset", id);
    add(b, "name", Value::string(a.name));
    add(b, "group", detail::label_list_value<AssetGroup>(a.groups));
    add(b, "types", detail::label_list_value<AssetType>(a.types));
    if (a.scenario) add(b, "scenario", Value::ident(*a.scenario));
    doc.blocks.push_back(std::move(b));
  }
  for (const auto& [id, t] : p.threats) {
    Block b = make_block("threat", id);
    add(b, "asset", Value::ident(t.asset));
    add(b, "description", Value::string(t.description));
    add(b, "stride", Value::ident(std::string(label(t.stride))));
    doc.blocks.push_back(std::move(b));
  }
  for (const auto& [id, f] : p.functions) {
    Block b = make_block("function", id);
    add(b, "name", Value::string(f.name));
    doc.blocks.push_back(std::move(b));
  }
  for (const auto& [id, h] : p.hara) {
    Block b = make_block("hara", id);
    add(b, "function", Value::ident(h.function));
    add(b, "failure_mode", Value::ident(std::string(label(h.failure_mode))));
    add(b, "hazard", Value::string(h.hazard));
    if (h.rating) {
      add(b, "e", Value::number(h.rating->e));
      add(b, "s", Value::number(h.rating->s));
      add(b, "c", Value::number(h.rating->c));
    } else {
      add(b, "rating", Value::ident("NA"));
    }
    if (h.goal) add(b, "goal", Value::ident(*h.goal));
    doc.blocks.push_back(std::move(b));
  }
  for (const auto& [id, g] : p.goals) {
    Block b = make_block("goal", id);
    add(b, "title", Value::string(g.title));
    if (g.declared_asil) add(b, "asil", Value::ident(std::string(label(*g.declared_asil))));
    if (g.ftti_ms) add(b, "ftti_ms", Value::number(*g.ftti_ms));
    doc.blocks.push_back(std::move(b));
  }
  for (const auto& [id, a] : p.attacks) {
    Block b = make_block("attack", id);
    add(b, "title", Value::string(a.title));
    add(b, "goals", detail::ident_list_value(a.goals));
    add(b, "interface", Value::ident(a.interface));
    add(b, "threat", Value::ident(a.threat));
    add(b, "attack_type", Value::ident(std::string(label(a.attack_type))));
    add(b, "precondition", Value::string(a.precondition));
    add(b, "expected_measures", Value::string(a.expected_measures));
    add(b, "success", Value::string(a.success));
    add(b, "fail", Value::string(a.fail));
    if (a.impl_notes) add(b, "impl_notes", Value::string(*a.impl_notes));
    if (a.status) add(b, "status", Value::ident(std::string(label(*a.status))));
    doc.blocks.push_back(std::move(b));
  }
  for (const auto& [id, j] : p.justifications) {
    Block b = make_block("justify", id);
    add(b, "reason", Value::string(j.reason));
    doc.blocks.push_back(std::move(b));
  }
  return doc;
}

/// Canonical text of a project: 2-space indentation, one blank line between
/// blocks, `\n` line endings. An empty project prints as "".
inline std::string print(const Project& p) { return print_document(to_document(p)); }

}  // namespace saseval::dsl
