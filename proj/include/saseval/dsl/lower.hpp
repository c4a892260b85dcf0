#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "saseval/diagnostic.hpp"
#include "saseval/dsl/syntax.hpp"
#include "saseval/model.hpp"
#include "saseval/validate.hpp"

namespace saseval::dsl {

/// Entities built from documents, before validation.
struct Lowered {
  RawEntities entities;
  std::vector<Diagnostic> diagnostics;
  // Ids (any kind) of blocks dropped because of field errors. Reference
  // errors pointing at them are suppressed to avoid cascades.
  std::set<std::string> dropped;
};

namespace detail {

// Typed access to the entries of one block. Every accessor records the key
// as consumed; finish() reports the keys nobody asked for.
class FieldReader {
 public:
  FieldReader(const Block& block, std::vector<Diagnostic>& diags)
      : block_(block), diags_(diags) {
    origin_.block = block.span;
    origin_.block->length = block.kind.size();
    for (const auto& e : block.entries) {
      origin_.fields[e.key] = e.value.span;
      for (std::size_t i = 0; i < e.value.items.size(); ++i) {
        origin_.fields[e.key + "[" + std::to_string(i) + "]"] = e.value.items[i].span;
      }
    }
  }

  bool ok() const { return ok_; }
  Origin origin() const { return origin_; }

  const Entry* take(std::string_view key, bool required) {
    consumed_.insert(std::string(key));
    const Entry* e = block_.find(key);
    if (!e && required) {
      error("MissingKey", block_.span,
            block_.kind + " " + block_.id + " is missing required key '" + std::string(key) + "'",
            "add `" + std::string(key) + ": ...`");
    }
    return e;
  }

  bool has(std::string_view key) const { return block_.find(key) != nullptr; }

  std::optional<std::string> text(std::string_view key, bool required = true) {
    const Entry* e = take(key, required);
    if (!e) {
      return std::nullopt;
    }
    if (e->value.kind != Value::Kind::String) {
      bad_type(*e, "a quoted string");
      return std::nullopt;
    }
    return e->value.text;
  }

  std::optional<std::string> ident(std::string_view key, bool required = true) {
    const Entry* e = take(key, required);
    if (!e) {
      return std::nullopt;
    }
    if (e->value.kind != Value::Kind::Ident) {
      bad_type(*e, "an identifier");
      return std::nullopt;
    }
    return e->value.text;
  }

  std::optional<std::vector<std::string>> ident_list(std::string_view key) {
    const Entry* e = take(key, true);
    if (!e) {
      return std::nullopt;
    }
    if (e->value.kind != Value::Kind::List) {
      bad_type(*e, "a list of identifiers");
      return std::nullopt;
    }
    std::vector<std::string> out;
    for (const auto& item : e->value.items) {
      if (item.kind != Value::Kind::Ident) {
        error("BadValueType", item.span, "list '" + e->key + "' must contain identifiers only",
              "remove quotes or nested lists");
        return std::nullopt;
      }
      out.push_back(item.text);
    }
    return out;
  }

  template <typename Enum>
  std::optional<Enum> enumerated(std::string_view key, bool required = true) {
    const Entry* e = take(key, required);
    if (!e) {
      return std::nullopt;
    }
    return enum_value<Enum>(*e, e->value);
  }

  template <typename Enum>
  std::optional<std::set<Enum>> enum_set(std::string_view key) {
    const Entry* e = take(key, true);
    if (!e) {
      return std::nullopt;
    }
    if (e->value.kind != Value::Kind::List) {
      bad_type(*e, "a list");
      return std::nullopt;
    }
    std::set<Enum> out;
    bool good = true;
    for (const auto& item : e->value.items) {
      if (auto v = enum_value<Enum>(*e, item)) {
        out.insert(*v);
      } else {
        good = false;
      }
    }
    if (!good) {
      return std::nullopt;
    }
    return out;
  }

  std::optional<long long> integer(std::string_view key, long long lo, long long hi,
                                   bool required = true) {
    const Entry* e = take(key, required);
    if (!e) {
      return std::nullopt;
    }
    if (e->value.kind != Value::Kind::Integer) {
      bad_type(*e, "an integer");
      return std::nullopt;
    }
    if (e->value.integer < lo || e->value.integer > hi) {
      error("BadIntRange", e->value.span,
            "value " + std::to_string(e->value.integer) + " for '" + e->key + "' is outside " +
                std::to_string(lo) + ".." + (hi == kNoUpperBound ? std::string("") : std::to_string(hi)),
            "use an integer in range");
      return std::nullopt;
    }
    return e->value.integer;
  }

  void finish() {
    for (const auto& e : block_.entries) {
      if (!consumed_.count(e.key)) {
        error("UnknownKey", e.key_span, "unknown key '" + e.key + "' in " + block_.kind + " block",
              "remove it or check its spelling");
      }
    }
  }

  void error(std::string rule, const SourceSpan& span, std::string message, std::string hint) {
    Diagnostic d = make_error(std::move(rule), block_.id, std::move(message));
    d.span = span;
    d.hint = std::move(hint);
    diags_.push_back(std::move(d));
    ok_ = false;
  }

  static constexpr long long kNoUpperBound = (1LL << 62);

 private:
  void bad_type(const Entry& e, std::string_view expected) {
    error("BadValueType", e.value.span, "key '" + e.key + "' expects " + std::string(expected),
          "expected " + std::string(expected));
  }

  template <typename Enum>
  std::optional<Enum> enum_value(const Entry& e, const Value& v) {
    if (v.kind != Value::Kind::Ident) {
      bad_type(e, "a bare label");
      return std::nullopt;
    }
    if (auto parsed = parse_label<Enum>(v.text)) {
      return parsed;
    }
    error("BadEnumValue", v.span, "'" + v.text + "' is not a valid value for '" + e.key + "'",
          "expected one of " + label_list<Enum>());
    return std::nullopt;
  }

  const Block& block_;
  std::vector<Diagnostic>& diags_;
  Origin origin_;
  std::set<std::string> consumed_;
  bool ok_ = true;
};

inline void lower_scenario(const Block& b, Lowered& out) {
  FieldReader r(b, out.diagnostics);
  Scenario s;
  s.id = b.id;
  s.title = r.text("title").value_or("");
  Origin origin = r.origin();
  for (const auto& child : b.children) {
    FieldReader cr(child, out.diagnostics);
    Subscenario sub{child.id, cr.text("title").value_or("")};
    cr.finish();
    if (!cr.ok()) {
      r.error("BadSubscenario", child.span, "subscenario " + child.id + " is malformed", "");
    }
    origin.fields["subscenario:" + child.id] = child.id_span;
    s.subscenarios.push_back(std::move(sub));
  }
  r.finish();
  if (!r.ok()) {
    out.dropped.insert(b.id);
    return;
  }
  out.entities.scenarios.push_back({std::move(s), std::move(origin)});
}

inline void lower_asset(const Block& b, Lowered& out) {
  FieldReader r(b, out.diagnostics);
  Asset a;
  a.id = b.id;
  a.name = r.text("name").value_or("");
  a.groups = r.enum_set<AssetGroup>("group").value_or(std::set<AssetGroup>{});
  a.types = r.enum_set<AssetType>("types").value_or(std::set<AssetType>{});
  a.scenario = r.ident("scenario", false);
  r.finish();
  if (!r.ok()) {
    out.dropped.insert(b.id);
    return;
  }
  out.entities.assets.push_back({std::move(a), r.origin()});
}

inline void lower_threat(const Block& b, Lowered& out) {
  FieldReader r(b, out.diagnostics);
  ThreatScenario t;
  t.id = b.id;
  t.asset = r.ident("asset").value_or("");
  t.description = r.text("description").value_or("");
  t.stride = r.enumerated<ThreatType>("stride").value_or(ThreatType::Spoofing);
  r.finish();
  if (!r.ok()) {
    out.dropped.insert(b.id);
    return;
  }
  out.entities.threats.push_back({std::move(t), r.origin()});
}

inline void lower_function(const Block& b, Lowered& out) {
  FieldReader r(b, out.diagnostics);
  Function f{b.id, r.text("name").value_or("")};
  r.finish();
  if (!r.ok()) {
    out.dropped.insert(b.id);
    return;
  }
  out.entities.functions.push_back({std::move(f), r.origin()});
}

inline void lower_hara(const Block& b, Lowered& out) {
  FieldReader r(b, out.diagnostics);
  HaraEntry h;
  h.id = b.id;
  h.function = r.ident("function").value_or("");
  h.failure_mode = r.enumerated<FailureMode>("failure_mode").value_or(FailureMode::No);
  h.hazard = r.text("hazard").value_or("");
  h.goal = r.ident("goal", false);
  const bool has_triple = r.has("e") || r.has("s") || r.has("c");
  if (r.has("rating")) {
    auto rating = r.ident("rating");
    if (rating && *rating != "NA") {
      r.error("BadEnumValue", b.find("rating")->value.span,
              "'" + *rating + "' is not a valid rating", "use `rating: NA` or the keys e, s, c");
    }
    if (has_triple) {
      r.take("e", false);
      r.take("s", false);
      r.take("c", false);
      r.error("ConflictingKeys", b.find("rating")->key_span,
              "hara " + b.id + " has both `rating: NA` and e/s/c ratings", "keep one of them");
    }
  } else {
    Rating rating;
    rating.e = static_cast<int>(r.integer("e", 1, 4).value_or(1));
    rating.s = static_cast<int>(r.integer("s", 0, 3).value_or(0));
    rating.c = static_cast<int>(r.integer("c", 0, 3).value_or(0));
    h.rating = rating;
  }
  r.finish();
  if (!r.ok()) {
    out.dropped.insert(b.id);
    return;
  }
  out.entities.hara.push_back({std::move(h), r.origin()});
}

inline void lower_goal(const Block& b, Lowered& out) {
  FieldReader r(b, out.diagnostics);
  SafetyGoal g;
  g.id = b.id;
  g.title = r.text("title").value_or("");
  g.declared_asil = r.enumerated<AsilLevel>("asil", false);
  g.ftti_ms = r.integer("ftti_ms", 1, FieldReader::kNoUpperBound, false);
  r.finish();
  if (!r.ok()) {
    out.dropped.insert(b.id);
    return;
  }
  out.entities.goals.push_back({std::move(g), r.origin()});
}

inline void lower_attack(const Block& b, Lowered& out) {
  FieldReader r(b, out.diagnostics);
  AttackDescription a;
  a.id = b.id;
  a.title = r.text("title").value_or("");
  a.goals = r.ident_list("goals").value_or(std::vector<std::string>{});
  a.interface = r.ident("interface").value_or("");
  a.threat = r.ident("threat").value_or("");
  a.attack_type = r.enumerated<AttackType>("attack_type").value_or(AttackType::FakeMessages);
  a.precondition = r.text("precondition").value_or("");
  a.expected_measures = r.text("expected_measures").value_or("");
  a.success = r.text("success").value_or("");
  a.fail = r.text("fail").value_or("");
  a.impl_notes = r.text("impl_notes", false);
  a.status = r.enumerated<CandidateStatus>("status", false);
  r.finish();
  if (!r.ok()) {
    out.dropped.insert(b.id);
    return;
  }
  out.entities.attacks.push_back({std::move(a), r.origin()});
}

inline void lower_justify(const Block& b, Lowered& out) {
  FieldReader r(b, out.diagnostics);
  Justification j{b.id, r.text("reason").value_or("")};
  r.finish();
  if (!r.ok()) {
    return;
  }
  Origin origin = r.origin();
  origin.fields["threat"] = b.id_span;
  out.entities.justifications.push_back({std::move(j), std::move(origin)});
}

}  // namespace detail

/// Builds unchecked entities from parsed documents. Blocks with field-level
/// errors (unknown keys, bad labels, out-of-range integers) are reported and
/// left out.
inline Lowered lower_entities(const std::vector<Document>& docs) {
  Lowered out;
  for (const auto& doc : docs) {
    for (const auto& block : doc.blocks) {
      const std::string& k = block.kind;
      if (k == "scenario") detail::lower_scenario(block, out);
      else if (k == "asset") detail::lower_asset(block, out);
      else if (k == "threat") detail::lower_threat(block, out);
      else if (k == "function") detail::lower_function(block, out);
      else if (k == "hara") detail::lower_hara(block, out);
      else if (k == "goal") detail::lower_goal(block, out);
      else if (k == "attack") detail::lower_attack(block, out);
      else if (k == "justify") detail::lower_justify(block, out);
    }
  }
  return out;
}

/// Merges the documents, lowers them and validates the result. Diagnostics
/// carry the spans of the originating nodes.
inline Outcome<Project> lower(const std::vector<Document>& docs) {
  Lowered lowered = lower_entities(docs);
  Outcome<Project> validated = validate_project(lowered.entities);
  Outcome<Project> out;
  out.diagnostics = std::move(lowered.diagnostics);
  for (auto& d : validated.diagnostics) {
    if (d.rule == "DanglingReference" && lowered.dropped.count(d.target)) {
      continue;
    }
    out.diagnostics.push_back(std::move(d));
  }
  if (!has_errors(out.diagnostics) && validated.value) {
    out.value = std::move(validated.value);
  }
  return out;
}

inline Outcome<Project> lower(const Document& doc) { return lower(std::vector<Document>{doc}); }

}  // namespace saseval::dsl
