#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "saseval/asil.hpp"
#include "saseval/diagnostic.hpp"
#include "saseval/model.hpp"
#include "saseval/stride.hpp"

namespace saseval {

namespace detail {

class Validator {
 public:
  explicit Validator(const RawEntities& raw) : raw_(raw) {}

  Outcome<Project> run() {
    collect();
    check_scenarios();
    check_assets();
    check_threats();
    check_functions();
    check_hara();
    check_goals();
    check_attacks();
    check_justifications();

    Outcome<Project> out;
    if (has_errors(diags_)) {
      out.diagnostics = std::move(diags_);
    } else {
      out.value = std::move(project_);
      out.diagnostics = std::move(diags_);
    }
    return out;
  }

 private:
  void report(std::string rule, const std::string& entity, std::string message,
              const Origin& origin, std::string_view field = {},
              std::string target = {}) {
    Diagnostic d = make_error(std::move(rule), entity, std::move(message));
    d.span = field.empty() ? origin.block : origin.field(field);
    d.target = std::move(target);
    diags_.push_back(std::move(d));
  }

  // Inserts every entity whose id is unique; flags later duplicates.
  template <typename T, typename KeyFn>
  void insert_all(std::string_view kind, const std::vector<Located<T>>& items,
                  std::map<std::string, T>& into, KeyFn key_of) {
    for (const auto& item : items) {
      const std::string& key = key_of(item.value);
      if (!is_identifier(key)) {
        report("InvalidIdentifier", key,
               std::string(kind) + " id '" + key + "' is not a valid identifier",
               item.origin);
      }
      if (!into.emplace(key, item.value).second) {
        report("DuplicateId", key,
               "duplicate " + std::string(kind) + " id '" + key + "'", item.origin);
      }
    }
  }

  void collect() {
    auto by_id = [](const auto& v) -> const std::string& { return v.id; };
    insert_all("scenario", raw_.scenarios, project_.scenarios, by_id);
    insert_all("asset", raw_.assets, project_.assets, by_id);
    insert_all("threat", raw_.threats, project_.threats, by_id);
    insert_all("function", raw_.functions, project_.functions, by_id);
    insert_all("hara", raw_.hara, project_.hara, by_id);
    insert_all("goal", raw_.goals, project_.goals, by_id);
    insert_all("attack", raw_.attacks, project_.attacks, by_id);
    insert_all("justification", raw_.justifications, project_.justifications,
               [](const Justification& j) -> const std::string& { return j.threat; });
  }

  template <typename Map>
  void require_ref(const Map& targets, std::string_view target_kind,
                   const std::string& entity, const std::string& ref,
                   const Origin& origin, std::string_view field) {
    if (targets.find(ref) == targets.end()) {
      report("DanglingReference", entity,
             std::string(field) + " refers to undefined " + std::string(target_kind) +
                 " '" + ref + "'",
             origin, field, ref);
    }
  }

  void require_text(const std::string& entity, const std::string& text,
                    std::string_view field, const Origin& origin) {
    if (text.empty()) {
      report("MissingField", entity, std::string(field) + " must not be empty", origin,
             field);
    }
  }

  void check_scenarios() {
    for (const auto& [value, origin] : raw_.scenarios) {
      require_text(value.id, value.title, "title", origin);
      std::set<std::string> seen;
      for (const auto& sub : value.subscenarios) {
        if (!is_identifier(sub.id)) {
          report("InvalidIdentifier", value.id,
                 "subscenario id '" + sub.id + "' is not a valid identifier", origin);
        }
        if (!seen.insert(sub.id).second) {
          report("DuplicateId", value.id,
                 "duplicate subscenario id '" + sub.id + "' in scenario " + value.id,
                 origin, "subscenario:" + sub.id);
        }
        require_text(value.id, sub.title, "subscenario:" + sub.id, origin);
      }
    }
  }

  void check_assets() {
    for (const auto& [value, origin] : raw_.assets) {
      if (value.groups.empty()) {
        report("MissingField", value.id, "asset needs at least one group", origin, "group");
      }
      if (value.scenario) {
        require_ref(project_.scenarios, "scenario", value.id, *value.scenario, origin,
                    "scenario");
      }
    }
  }

  void check_threats() {
    for (const auto& [value, origin] : raw_.threats) {
      require_text(value.id, value.description, "description", origin);
      require_ref(project_.assets, "asset", value.id, value.asset, origin, "asset");
    }
  }

  void check_functions() {
    for (const auto& [value, origin] : raw_.functions) {
      require_text(value.id, value.name, "name", origin);
    }
  }

  void check_hara() {
    for (const auto& [value, origin] : raw_.hara) {
      require_ref(project_.functions, "function", value.id, value.function, origin,
                  "function");
      if (value.goal) {
        require_ref(project_.goals, "goal", value.id, *value.goal, origin, "goal");
      }
      if (!value.rating) {
        if (value.goal) {
          report("NotApplicableWithGoal", value.id,
                 "an N/A HARA entry cannot motivate a safety goal", origin, "goal");
        }
        continue;
      }
      const auto& r = *value.rating;
      auto range = [&](std::string_view key, int v, int lo, int hi) {
        if (v < lo || v > hi) {
          report("BadIntRange", value.id,
                 std::string(key) + "=" + std::to_string(v) + " outside " +
                     std::to_string(lo) + ".." + std::to_string(hi),
                 origin, key);
          ranges_ok_ = false;
        }
      };
      range("e", r.e, 1, 4);
      range("s", r.s, 0, 3);
      range("c", r.c, 0, 3);
    }
  }

  void check_goals() {
    for (const auto& [value, origin] : raw_.goals) {
      if (value.ftti_ms && *value.ftti_ms <= 0) {
        report("BadIntRange", value.id, "ftti_ms must be positive", origin, "ftti_ms");
      }
      if (!value.declared_asil || !ranges_ok_) {
        continue;
      }
      auto computed = asil::rated_goal_asil(value.id, project_);
      if (!computed) {
        report("DeclaredAsilMismatch", value.id,
               "declared ASIL " + std::string(label(*value.declared_asil)) +
                   " but no rated HARA entry references the goal",
               origin, "asil");
      } else if (*computed != *value.declared_asil) {
        report("DeclaredAsilMismatch", value.id,
               "declared ASIL " + std::string(label(*value.declared_asil)) +
                   " differs from computed ASIL " + std::string(label(*computed)),
               origin, "asil");
      }
    }
  }

  void check_attacks() {
    for (const auto& [value, origin] : raw_.attacks) {
      if (value.goals.empty()) {
        report("MissingField", value.id, "attack must name at least one safety goal",
               origin, "goals");
      }
      std::set<std::string> seen_goals;
      for (std::size_t i = 0; i < value.goals.size(); ++i) {
        const std::string& g = value.goals[i];
        const std::string field = "goals[" + std::to_string(i) + "]";
        require_ref(project_.goals, "goal", value.id, g, origin, field);
        if (!seen_goals.insert(g).second) {
          report("DuplicateId", value.id, "goal " + g + " listed twice", origin, field);
        }
      }
      if (!is_identifier(value.interface)) {
        report("InvalidIdentifier", value.id,
               "interface '" + value.interface + "' is not a valid identifier", origin,
               "interface");
      }
      require_ref(project_.threats, "threat", value.id, value.threat, origin, "threat");
      if (auto it = project_.threats.find(value.threat); it != project_.threats.end()) {
        const ThreatType t = it->second.stride;
        if (!stride::is_legal(t, value.attack_type)) {
          report("AttackTypeMismatch", value.id,
                 "attack type " + std::string(label(value.attack_type)) +
                     " is not a manifestation of " + std::string(label(t)) + " (threat " +
                     value.threat + ")",
                 origin, "attack_type");
          Diagnostic& d = diags_.back();
          for (auto a : stride::attack_types_for(t)) {
            d.hint += (d.hint.empty() ? "expected one of " : ", ") + std::string(label(a));
          }
        }
      }
      if (value.adopted()) {
        require_text(value.id, value.title, "title", origin);
        require_text(value.id, value.precondition, "precondition", origin);
        require_text(value.id, value.expected_measures, "expected_measures", origin);
        require_text(value.id, value.success, "success", origin);
        require_text(value.id, value.fail, "fail", origin);
      }
    }
  }

  void check_justifications() {
    for (const auto& [value, origin] : raw_.justifications) {
      require_text(value.threat, value.reason, "reason", origin);
      require_ref(project_.threats, "threat", value.threat, value.threat, origin, {});
    }
  }

  const RawEntities& raw_;
  Project project_;
  std::vector<Diagnostic> diags_;
  bool ranges_ok_ = true;
};

}  // namespace detail

/// Builds a Project from unchecked entities, or returns every rule violation
/// found (not just the first).
inline Outcome<Project> validate_project(const RawEntities& raw) {
  return detail::Validator(raw).run();
}

/// Re-validates an existing project.
inline Outcome<Project> validate_project(const Project& project) {
  return validate_project(to_raw(project));
}

}  // namespace saseval
