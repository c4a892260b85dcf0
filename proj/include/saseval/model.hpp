#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "saseval/diagnostic.hpp"
#include "saseval/vocabulary.hpp"

namespace saseval {

/// Identifiers match `[A-Za-z][A-Za-z0-9_.-]*`.
constexpr bool is_identifier(std::string_view text) {
  if (text.empty()) {
    return false;
  }
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) {
    return false;
  }
  for (char c : text) {
    if (!alpha(c) && !digit(c) && c != '_' && c != '.' && c != '-') {
      return false;
    }
  }
  return true;
}

struct Subscenario {
  std::string id;
  std::string title;

  friend bool operator==(const Subscenario&, const Subscenario&) = default;
};

struct Scenario {
  std::string id;
  std::string title;
  std::vector<Subscenario> subscenarios;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Asset {
  std::string id;
  std::string name;
  std::set<AssetGroup> groups;
  std::set<AssetType> types;
  std::optional<std::string> scenario;

  friend bool operator==(const Asset&, const Asset&) = default;
};

struct ThreatScenario {
  std::string id;
  std::string asset;
  std::string description;
  ThreatType stride = ThreatType::Spoofing;

  friend bool operator==(const ThreatScenario&, const ThreatScenario&) = default;
};

struct Function {
  std::string id;
  std::string name;

  friend bool operator==(const Function&, const Function&) = default;
};

/// Exposure 1..4, severity 0..3, controllability 0..3.
struct Rating {
  int e = 1;
  int s = 0;
  int c = 0;

  friend bool operator==(const Rating&, const Rating&) = default;
};

/// One guideword row of a HARA. An absent rating means "N/A".
struct HaraEntry {
  std::string id;
  std::string function;
  FailureMode failure_mode = FailureMode::No;
  std::string hazard;
  std::optional<Rating> rating;
  std::optional<std::string> goal;

  bool not_applicable() const { return !rating.has_value(); }

  friend bool operator==(const HaraEntry&, const HaraEntry&) = default;
};

struct SafetyGoal {
  std::string id;
  std::string title;
  std::optional<AsilLevel> declared_asil;
  std::optional<long long> ftti_ms;

  friend bool operator==(const SafetyGoal&, const SafetyGoal&) = default;
};

struct AttackDescription {
  std::string id;
  std::string title;
  std::vector<std::string> goals;
  std::string interface;
  std::string threat;
  AttackType attack_type = AttackType::FakeMessages;
  std::string precondition;
  std::string expected_measures;
  std::string success;
  std::string fail;
  std::optional<std::string> impl_notes;
  // Absent means adopted; generated stubs carry Proposed.
  std::optional<CandidateStatus> status;

  bool adopted() const {
    return !status || *status == CandidateStatus::Adopted;
  }

  friend bool operator==(const AttackDescription&, const AttackDescription&) = default;
};

struct Justification {
  std::string threat;
  std::string reason;

  friend bool operator==(const Justification&, const Justification&) = default;
};

/// Validated aggregate. Every map is keyed by entity id, so iteration is
/// sorted by id. Justifications are keyed by threat id.
struct Project {
  std::map<std::string, Scenario> scenarios;
  std::map<std::string, Asset> assets;
  std::map<std::string, ThreatScenario> threats;
  std::map<std::string, Function> functions;
  std::map<std::string, HaraEntry> hara;
  std::map<std::string, SafetyGoal> goals;
  std::map<std::string, AttackDescription> attacks;
  std::map<std::string, Justification> justifications;

  bool empty() const {
    return scenarios.empty() && assets.empty() && threats.empty() &&
           functions.empty() && hara.empty() && goals.empty() &&
           attacks.empty() && justifications.empty();
  }

  friend bool operator==(const Project&, const Project&) = default;
};

/// Source location of an entity and of its individual fields, attached by the
/// DSL front end. Programmatically built entities have no origin. List items
/// are keyed as `key[i]`; lookups fall back to the whole list, then the block.
struct Origin {
  std::optional<SourceSpan> block;
  std::map<std::string, SourceSpan, std::less<>> fields;

  std::optional<SourceSpan> field(std::string_view key) const {
    if (auto it = fields.find(key); it != fields.end()) {
      return it->second;
    }
    if (auto bracket = key.find('['); bracket != std::string_view::npos) {
      return field(key.substr(0, bracket));
    }
    return block;
  }
};

template <typename T>
struct Located {
  T value;
  Origin origin;
};

/// Unchecked entity lists, as produced by a front end.
struct RawEntities {
  std::vector<Located<Scenario>> scenarios;
  std::vector<Located<Asset>> assets;
  std::vector<Located<ThreatScenario>> threats;
  std::vector<Located<Function>> functions;
  std::vector<Located<HaraEntry>> hara;
  std::vector<Located<SafetyGoal>> goals;
  std::vector<Located<AttackDescription>> attacks;
  std::vector<Located<Justification>> justifications;

  void append(RawEntities other) {
    auto move_all = [](auto& into, auto& from) {
      for (auto& item : from) {
        into.push_back(std::move(item));
      }
    };
    move_all(scenarios, other.scenarios);
    move_all(assets, other.assets);
    move_all(threats, other.threats);
    move_all(functions, other.functions);
    move_all(hara, other.hara);
    move_all(goals, other.goals);
    move_all(attacks, other.attacks);
    move_all(justifications, other.justifications);
  }
};

/// Flattens a project back into entity lists (without origins).
inline RawEntities to_raw(const Project& project) {
  RawEntities raw;
  auto copy = [](auto& into, const auto& from) {
    for (const auto& [id, value] : from) {
      into.push_back({value, {}});
    }
  };
  copy(raw.scenarios, project.scenarios);
  copy(raw.assets, project.assets);
  copy(raw.threats, project.threats);
  copy(raw.functions, project.functions);
  copy(raw.hara, project.hara);
  copy(raw.goals, project.goals);
  copy(raw.attacks, project.attacks);
  copy(raw.justifications, project.justifications);
  return raw;
}

}  // namespace saseval
