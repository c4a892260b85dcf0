#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "saseval/diagnostic.hpp"
#include "saseval/error.hpp"
#include "saseval/model.hpp"
#include "saseval/stride.hpp"

namespace saseval::derive {

/// A (safety goal, attack type, library threat) combination proposed for an
/// attack description.
struct AttackCandidate {
  std::string id;  // CAND-<goal>-<attack type>-<n>
  std::string goal;
  AttackType attack_type = AttackType::FakeMessages;
  std::string threat;
  std::string interface;  // asset of the threat
  CandidateStatus status = CandidateStatus::Proposed;

  friend bool operator==(const AttackCandidate&, const AttackCandidate&) = default;
};

/// Enumerates one candidate per selected goal, threat scenario, and attack
/// type legal for the threat's STRIDE class. Order: goal id, threat id, then
/// table order of attack types. The running number n restarts at 1 for each
/// (goal, attack type) pair.
///
/// Throws Error(EmptyLibrary) if the project has no threat scenarios.
inline std::vector<AttackCandidate> derive_candidates(
    const Project& project, const std::optional<std::set<std::string>>& goal_filter = {}) {
  if (project.threats.empty()) {
    throw Error(ErrorCode::EmptyLibrary, "the threat library is empty");
  }
  std::vector<AttackCandidate> out;
  for (const auto& [goal_id, goal] : project.goals) {
    if (goal_filter && !goal_filter->count(goal_id)) {
      continue;
    }
    std::map<AttackType, int> serial;
    for (const auto& [threat_id, threat] : project.threats) {
      for (AttackType a : stride::attack_types_for(threat.stride)) {
        const int n = ++serial[a];
        AttackCandidate c;
        c.id = "CAND-" + goal_id + "-" + std::string(label(a)) + "-" + std::to_string(n);
        c.goal = goal_id;
        c.attack_type = a;
        c.threat = threat_id;
        c.interface = threat.asset;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

/// Texts an engineer supplies when turning a candidate into a description.
struct AdoptionTexts {
  std::string title;
  std::string precondition;
  std::string expected_measures;
  std::string success;
  std::string fail;
  std::optional<std::string> impl_notes;
};

/// Smallest `ADnn` (at least two digits) above every existing `AD<digits>` id.
inline std::string next_attack_id(const Project& project) {
  long long highest = 0;
  for (const auto& [id, attack] : project.attacks) {
    if (id.size() < 3 || id.compare(0, 2, "AD") != 0) {
      continue;
    }
    const std::string digits = id.substr(2);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 15) {
      continue;
    }
    highest = std::max(highest, std::stoll(digits));
  }
  std::string n = std::to_string(highest + 1);
  if (n.size() < 2) {
    n.insert(0, "0");
  }
  return "AD" + n;
}

/// Turns a candidate into an adopted attack description with the next free
/// ADnn id of `project`. Reports one MissingField per empty mandatory text.
inline Outcome<AttackDescription> adopt_candidate(const Project& project,
                                                  const AttackCandidate& candidate,
                                                  const AdoptionTexts& texts) {
  Outcome<AttackDescription> out;
  auto require = [&](const std::string& value, const char* field) {
    if (value.empty()) {
      out.diagnostics.push_back(make_error("MissingField", candidate.id,
                                           std::string(field) + " must not be empty"));
      out.diagnostics.back().target = field;
    }
  };
  require(texts.title, "title");
  require(texts.precondition, "precondition");
  require(texts.expected_measures, "expected_measures");
  require(texts.success, "success");
  require(texts.fail, "fail");
  if (!out.diagnostics.empty()) {
    return out;
  }
  AttackDescription a;
  a.id = next_attack_id(project);
  a.title = texts.title;
  a.goals = {candidate.goal};
  a.interface = candidate.interface;
  a.threat = candidate.threat;
  a.attack_type = candidate.attack_type;
  a.precondition = texts.precondition;
  a.expected_measures = texts.expected_measures;
  a.success = texts.success;
  a.fail = texts.fail;
  a.impl_notes = texts.impl_notes;
  out.value = std::move(a);
  return out;
}

/// Copy of `project` with `attack` added.
inline Project with_attack(Project project, AttackDescription attack) {
  std::string id = attack.id;
  project.attacks.insert_or_assign(std::move(id), std::move(attack));
  return project;
}

/// Candidates as attack stubs (status Proposed, empty texts) ready to be
/// written to a `.saseval` file, edited, and re-ingested.
inline std::vector<AttackDescription> candidate_stubs(const std::vector<AttackCandidate>& candidates) {
  std::vector<AttackDescription> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) {
    AttackDescription a;
    a.id = c.id;
    a.goals = {c.goal};
    a.interface = c.interface;
    a.threat = c.threat;
    a.attack_type = c.attack_type;
    a.status = c.status;
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace saseval::derive
