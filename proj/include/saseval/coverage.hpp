#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "saseval/asil.hpp"
#include "saseval/diagnostic.hpp"
#include "saseval/model.hpp"

namespace saseval::coverage {

struct UncoveredGoal {
  std::string goal;
  AsilLevel asil = AsilLevel::QM;

  friend bool operator==(const UncoveredGoal&, const UncoveredGoal&) = default;
};

/// Cell (goal id, threat id) -> sorted attack ids. Only non-empty cells are
/// stored.
using TraceMatrix = std::map<std::pair<std::string, std::string>, std::vector<std::string>>;

struct InductiveResult {
  std::vector<std::string> attacked;
  std::vector<std::pair<std::string, std::string>> justified;  // (threat, reason)
  std::vector<std::string> uncovered;
  std::vector<Diagnostic> warnings;
};

struct CoverageReport {
  std::vector<UncoveredGoal> uncovered_goals;
  std::vector<std::string> uncovered_threats;
  std::vector<std::pair<std::string, std::string>> justified_threats;
  TraceMatrix matrix;
  AsilLevel asil_threshold = AsilLevel::A;
  std::vector<Diagnostic> warnings;

  bool has_gaps() const { return !uncovered_goals.empty() || !uncovered_threats.empty(); }
};

inline constexpr AsilLevel kDefaultThreshold = AsilLevel::A;

/// Safety-driven check: goals at or above `threshold` that no adopted attack
/// references. Goals with no rated HARA entry have no ASIL and are skipped.
inline std::vector<UncoveredGoal> deductive_check(const Project& project,
                                                  AsilLevel threshold = kDefaultThreshold) {
  std::set<std::string> referenced;
  for (const auto& [id, attack] : project.attacks) {
    if (attack.adopted()) {
      referenced.insert(attack.goals.begin(), attack.goals.end());
    }
  }
  std::vector<UncoveredGoal> out;
  for (const auto& [id, goal] : project.goals) {
    auto level = asil::rated_goal_asil(id, project);
    if (!level || *level < threshold || referenced.count(id)) {
      continue;
    }
    out.push_back({id, *level});
  }
  return out;
}

/// Threat-driven check: each threat is attacked, justified, or uncovered. A
/// threat with both an attack and a justification counts as attacked and
/// yields a warning.
inline InductiveResult inductive_check(const Project& project) {
  std::set<std::string> attacked;
  for (const auto& [id, attack] : project.attacks) {
    if (attack.adopted()) {
      attacked.insert(attack.threat);
    }
  }
  InductiveResult out;
  for (const auto& [id, threat] : project.threats) {
    auto just = project.justifications.find(id);
    if (attacked.count(id)) {
      out.attacked.push_back(id);
      if (just != project.justifications.end()) {
        Diagnostic d;
        d.severity = Severity::Warning;
        d.rule = "JustifiedButAttacked";
        d.entity = id;
        d.message = "threat " + id + " is attacked and also justified as not applicable";
        d.hint = "drop the justification or the attack";
        out.warnings.push_back(std::move(d));
      }
    } else if (just != project.justifications.end()) {
      out.justified.emplace_back(id, just->second.reason);
    } else {
      out.uncovered.push_back(id);
    }
  }
  return out;
}

inline TraceMatrix traceability_matrix(const Project& project) {
  TraceMatrix m;
  // project.attacks iterates in id order, so cells come out sorted.
  for (const auto& [id, attack] : project.attacks) {
    if (!attack.adopted()) {
      continue;
    }
    std::set<std::string> goals(attack.goals.begin(), attack.goals.end());
    for (const auto& g : goals) {
      m[{g, attack.threat}].push_back(id);
    }
  }
  return m;
}

inline CoverageReport analyze(const Project& project, AsilLevel threshold = kDefaultThreshold) {
  CoverageReport r;
  r.asil_threshold = threshold;
  r.uncovered_goals = deductive_check(project, threshold);
  InductiveResult ind = inductive_check(project);
  r.uncovered_threats = std::move(ind.uncovered);
  r.justified_threats = std::move(ind.justified);
  r.warnings = std::move(ind.warnings);
  r.matrix = traceability_matrix(project);
  return r;
}

/// Comma-separated matrix: header row of threat ids, one row per goal, cells
/// are semicolon-joined attack ids. Ids never contain ',' or ';'.
inline std::string matrix_csv(const Project& project, const TraceMatrix& m) {
  std::string out = "goal";
  for (const auto& [tid, threat] : project.threats) {
    out += ',' + tid;
  }
  out += '\n';
  for (const auto& [gid, goal] : project.goals) {
    out += gid;
    for (const auto& [tid, threat] : project.threats) {
      out += ',';
      if (auto it = m.find({gid, tid}); it != m.end()) {
        for (std::size_t i = 0; i < it->second.size(); ++i) {
          if (i) out += ';';
          out += it->second[i];
        }
      }
    }
    out += '\n';
  }
  return out;
}

/// Plain-text/markdown coverage summary with sections "Deductive gaps",
/// "Inductive gaps" and "Summary".
inline std::string render_text(const Project& project, const CoverageReport& r) {
  std::string out = "# Coverage\n\n## Deductive gaps\n\n";
  if (r.uncovered_goals.empty()) {
    out += "None. Every safety goal rated " + std::string(display_label(r.asil_threshold)) +
           " or higher is addressed by an attack description.\n";
  }
  for (const auto& g : r.uncovered_goals) {
    out += "- " + g.goal + " (" + std::string(display_label(g.asil)) + ")";
    if (auto it = project.goals.find(g.goal); it != project.goals.end()) {
      out += ": " + it->second.title;
    }
    out += '\n';
  }
  out += "\n## Inductive gaps\n\n";
  if (r.uncovered_threats.empty()) {
    out += "None. Every threat is attacked or justified.\n";
  }
  for (const auto& t : r.uncovered_threats) {
    out += "- " + t;
    if (auto it = project.threats.find(t); it != project.threats.end()) {
      out += ": " + it->second.description;
    }
    out += '\n';
  }
  if (!r.justified_threats.empty()) {
    out += "\nJustified threats:\n\n";
    for (const auto& [t, reason] : r.justified_threats) {
      out += "- " + t + ": " + reason + '\n';
    }
  }
  std::size_t adopted = 0;
  for (const auto& [id, a] : project.attacks) {
    adopted += a.adopted() ? 1 : 0;
  }
  out += "\n## Summary\n\n";
  out += "- ASIL threshold: " + std::string(label(r.asil_threshold)) + '\n';
  out += "- Safety goals: " + std::to_string(project.goals.size()) + ", uncovered: " +
         std::to_string(r.uncovered_goals.size()) + '\n';
  out += "- Threats: " + std::to_string(project.threats.size()) + ", uncovered: " +
         std::to_string(r.uncovered_threats.size()) + ", justified: " +
         std::to_string(r.justified_threats.size()) + '\n';
  out += "- Adopted attack descriptions: " + std::to_string(adopted) + '\n';
  return out;
}

}  // namespace saseval::coverage
