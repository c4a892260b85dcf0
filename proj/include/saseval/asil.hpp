#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "saseval/error.hpp"
#include "saseval/model.hpp"

namespace saseval::asil {

/// ASIL class for severity 0..3, exposure 1..4, controllability 0..3.
///
/// S0 or C0 is QM. Otherwise the ISO 26262-3 risk graph reduces to the sum
/// k = S + E + C: k <= 6 is QM, then 7..10 map to A..D.
inline AsilLevel asil_of(int s, int e, int c) {
  if (s < 0 || s > 3) {
    throw Error(ErrorCode::OutOfRange, "severity S" + std::to_string(s) + " outside 0..3");
  }
  if (e < 1 || e > 4) {
    throw Error(ErrorCode::OutOfRange, "exposure E" + std::to_string(e) + " outside 1..4");
  }
  if (c < 0 || c > 3) {
    throw Error(ErrorCode::OutOfRange,
                "controllability C" + std::to_string(c) + " outside 0..3");
  }
  if (s == 0 || c == 0) {
    return AsilLevel::QM;
  }
  const int k = s + e + c;
  if (k <= 6) {
    return AsilLevel::QM;
  }
  return static_cast<AsilLevel>(k - 6);
}

inline AsilLevel asil_of(const Rating& r) { return asil_of(r.s, r.e, r.c); }

/// nullopt for N/A rows.
inline std::optional<AsilLevel> entry_asil(const HaraEntry& entry) {
  if (!entry.rating) {
    return std::nullopt;
  }
  return asil_of(*entry.rating);
}

/// Maximum ASIL over the rated HARA rows that reference `goal_id`, or nullopt
/// when no rated row does.
inline std::optional<AsilLevel> rated_goal_asil(std::string_view goal_id,
                                                const Project& project) {
  std::optional<AsilLevel> best;
  for (const auto& [id, entry] : project.hara) {
    if (!entry.goal || *entry.goal != goal_id) {
      continue;
    }
    if (auto level = entry_asil(entry); level && (!best || *level > *best)) {
      best = level;
    }
  }
  return best;
}

inline AsilLevel goal_asil(const SafetyGoal& goal, const Project& project) {
  if (auto level = rated_goal_asil(goal.id, project)) {
    return *level;
  }
  throw Error(ErrorCode::NoRatedEntries,
              "safety goal " + goal.id + " is not referenced by any rated HARA entry");
}

enum class RatingCategory : std::size_t { NA, QM, A, B, C, D };

inline constexpr std::array<RatingCategory, 6> kRatingCategories{
    RatingCategory::NA, RatingCategory::QM, RatingCategory::A,
    RatingCategory::B,  RatingCategory::C,  RatingCategory::D};

inline std::string_view category_label(RatingCategory cat) {
  constexpr std::array<std::string_view, 6> labels{"N/A", "No ASIL", "ASIL A",
                                                   "ASIL B", "ASIL C", "ASIL D"};
  return labels[static_cast<std::size_t>(cat)];
}

inline RatingCategory category_of(const std::optional<AsilLevel>& level) {
  if (!level) {
    return RatingCategory::NA;
  }
  return static_cast<RatingCategory>(static_cast<std::size_t>(*level) + 1);
}

struct RatingSummary {
  std::array<std::size_t, 6> counts{};
  std::size_t total = 0;

  std::size_t count(RatingCategory cat) const {
    return counts[static_cast<std::size_t>(cat)];
  }

  friend bool operator==(const RatingSummary&, const RatingSummary&) = default;
};

inline RatingSummary rating_summary(const Project& project) {
  RatingSummary summary;
  for (const auto& [id, entry] : project.hara) {
    ++summary.counts[static_cast<std::size_t>(category_of(entry_asil(entry)))];
    ++summary.total;
  }
  return summary;
}

}  // namespace saseval::asil
