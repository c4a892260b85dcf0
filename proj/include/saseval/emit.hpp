#pragma once

#include <string>
#include <vector>

#include "saseval/asil.hpp"
#include "saseval/coverage.hpp"
#include "saseval/model.hpp"

namespace saseval::emit {

/// Given/When/Then outline of one attack. The pass criterion is the attack
/// failing (the system withstands it); the fail criterion is the attack
/// succeeding (a safety goal is violated).
struct TestSkeleton {
  std::string attack;
  std::string given;
  std::string when;
  std::string then_pass;
  std::string then_fail;
  std::vector<std::string> tags;
  std::optional<std::string> notes;

  friend bool operator==(const TestSkeleton&, const TestSkeleton&) = default;
};

inline std::vector<TestSkeleton> emit_skeletons(const Project& project) {
  std::vector<TestSkeleton> out;
  for (const auto& [id, a] : project.attacks) {
    if (!a.adopted()) {
      continue;
    }
    TestSkeleton s;
    s.attack = id;
    s.given = a.precondition;
    s.when = a.title;
    s.then_pass = a.fail;
    s.then_fail = a.success;
    s.tags = a.goals;
    s.tags.emplace_back(label(a.attack_type));
    s.notes = a.impl_notes;
    out.push_back(std::move(s));
  }
  return out;
}

/// Markdown body of `tests/<attack-id>.md`.
inline std::string render_skeleton(const TestSkeleton& s, const Project& project) {
  std::string out = "# " + s.attack + "\n\n";
  if (auto it = project.attacks.find(s.attack); it != project.attacks.end()) {
    const auto& a = it->second;
    out += "- Threat: " + a.threat;
    if (auto t = project.threats.find(a.threat); t != project.threats.end()) {
      out += " (" + std::string(display_label(t->second.stride)) + ")";
    }
    out += "\n- Attack type: " + std::string(display_label(a.attack_type)) + "\n";
    out += "- Interface: " + a.interface + "\n";
    out += "- Expected measures: " + a.expected_measures + "\n";
  }
  out += "- Tags:";
  for (const auto& tag : s.tags) {
    out += " " + tag;
  }
  out += "\n\n## Scenario\n\n";
  out += "Given " + s.given + "\n";
  out += "When " + s.when + "\n";
  out += "Then the test passes if: " + s.then_pass + "\n";
  out += "And the test fails if: " + s.then_fail + "\n";
  if (s.notes) {
    out += "\n## Implementation notes\n\n" + *s.notes + "\n";
  }
  return out;
}

namespace detail {

inline std::string table_cell(std::string text) {
  std::string out;
  for (char c : text) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace detail

/// Project summary with sections Rating Summary, Safety Goals, Coverage Gaps
/// and Attack Inventory.
inline std::string emit_report(const Project& project, const coverage::CoverageReport& cov,
                               const asil::RatingSummary& summary) {
  using detail::table_cell;
  std::string out = "# Safety Validation Report\n\n## Rating Summary\n\n";
  out += "| Rating | Count |\n|---|---|\n";
  for (auto cat : asil::kRatingCategories) {
    out += "| " + std::string(asil::category_label(cat)) + " | " +
           std::to_string(summary.count(cat)) + " |\n";
  }
  out += "| Total | " + std::to_string(summary.total) + " |\n";

  out += "\n## Safety Goals\n\n";
  if (project.goals.empty()) {
    out += "No safety goals.\n";
  } else {
    out += "| Goal | Title | ASIL |\n|---|---|---|\n";
    for (const auto& [id, g] : project.goals) {
      auto level = asil::rated_goal_asil(id, project);
      out += "| " + id + " | " + table_cell(g.title) + " | " +
             (level ? std::string(display_label(*level)) : std::string("unrated")) + " |\n";
    }
  }

  out += "\n## Coverage Gaps\n\n### Deductive gaps\n\n";
  if (cov.uncovered_goals.empty()) {
    out += "None.\n";
  }
  for (const auto& g : cov.uncovered_goals) {
    out += "- " + g.goal + " (" + std::string(display_label(g.asil)) + ")\n";
  }
  out += "\n### Inductive gaps\n\n";
  if (cov.uncovered_threats.empty()) {
    out += "None.\n";
  }
  for (const auto& t : cov.uncovered_threats) {
    out += "- " + t + "\n";
  }
  if (!cov.justified_threats.empty()) {
    out += "\n### Justified threats\n\n";
    for (const auto& [t, reason] : cov.justified_threats) {
      out += "- " + t + ": " + table_cell(reason) + "\n";
    }
  }

  out += "\n## Attack Inventory\n\n";
  if (project.attacks.empty()) {
    out += "No attack descriptions.\n";
    return out;
  }
  out += "| Attack | Title | Goals | Threat | Attack type | Status |\n";
  out += "|---|---|---|---|---|---|\n";
  for (const auto& [id, a] : project.attacks) {
    std::string goals;
    for (const auto& g : a.goals) {
      goals += (goals.empty() ? "" : ", ") + g;
    }
    out += "| " + id + " | " + table_cell(a.title) + " | " + goals + " | " + a.threat + " | " +
           std::string(display_label(a.attack_type)) + " | " +
           std::string(label(a.status.value_or(CandidateStatus::Adopted))) + " |\n";
  }
  return out;
}

}  // namespace saseval::emit
