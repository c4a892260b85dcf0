#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace saseval {

// Closed label sets. Each enum carries a canonical label (the DSL spelling)
// and, where a report needs it, a human-readable display label.

enum class ThreatType : std::uint8_t {
  Spoofing,
  Tampering,
  Repudiation,
  InformationDisclosure,
  DenialOfService,
  ElevationOfPrivilege,
};

enum class AttackType : std::uint8_t {
  FakeMessages,
  Spoofing,
  CorruptDataOrCode,
  DeliverMalware,
  Alter,
  Inject,
  CorruptMessages,
  Manipulate,
  ConfigChange,
  Replay,
  RepudiationOfMessageTransmission,
  Delay,
  Listen,
  Intercept,
  Eavesdropping,
  IllegalAcquisition,
  CovertChannel,
  Disable,
  DenialOfService,
  Jamming,
  GainElevatedAccess,
  GainUnauthorizedAccess,
};

enum class AssetGroup : std::uint8_t {
  Hardware,
  Software,
  Information,
  Person,
  CloudService,
  Device,
  Server,
  Service,
};

enum class AssetType : std::uint8_t {
  Generic,
  UseCaseSpecific,
  GenericCurrentVehicle,
  GenericAdasAd,
  GenericConnected,
};

enum class FailureMode : std::uint8_t {
  No,
  Unintended,
  TooEarly,
  TooLate,
  Less,
  More,
  Inverted,
  Intermittent,
};

// Ordered: QM < A < B < C < D.
enum class AsilLevel : std::uint8_t { QM, A, B, C, D };

enum class CandidateStatus : std::uint8_t { Proposed, Adopted, Rejected };

namespace detail {

template <typename Enum, std::size_t N>
struct LabelTable {
  std::array<std::string_view, N> canonical;
  std::array<std::string_view, N> display;
};

inline constexpr LabelTable<ThreatType, 6> kThreatTypeLabels{
    {"Spoofing", "Tampering", "Repudiation", "InformationDisclosure",
     "DenialOfService", "ElevationOfPrivilege"},
    {"Spoofing", "Tampering", "Repudiation", "Information disclosure",
     "Denial of service", "Elevation of privilege"},
};

inline constexpr LabelTable<AttackType, 22> kAttackTypeLabels{
    {"FakeMessages", "Spoofing", "CorruptDataOrCode", "DeliverMalware", "Alter",
     "Inject", "CorruptMessages", "Manipulate", "ConfigChange", "Replay",
     "RepudiationOfMessageTransmission", "Delay", "Listen", "Intercept",
     "Eavesdropping", "IllegalAcquisition", "CovertChannel", "Disable",
     "DenialOfService", "Jamming", "GainElevatedAccess",
     "GainUnauthorizedAccess"},
    {"Fake messages", "Spoofing", "Corrupt data or code", "Deliver malware",
     "Alter", "Inject", "Corrupt messages", "Manipulate", "Config. change",
     "Replay", "Repudiation of message transmission", "Delay", "Listen",
     "Intercept", "Eavesdropping", "Illegal acquisition", "Covert channel",
     "Disable", "Denial of service", "Jamming", "Gain elevated access",
     "Gain unauthorized access"},
};

inline constexpr LabelTable<AssetGroup, 8> kAssetGroupLabels{
    {"Hardware", "Software", "Information", "Person", "CloudService", "Device",
     "Server", "Service"},
    {"Hardware", "Software", "Information", "Person", "Cloud service",
     "Device", "Server", "Service"},
};

inline constexpr LabelTable<AssetType, 5> kAssetTypeLabels{
    {"Generic", "UseCaseSpecific", "GenericCurrentVehicle", "GenericAdasAd",
     "GenericConnected"},
    {"Generic", "Use-case specific", "Generic for current vehicles",
     "Generic for ADAS/AD", "Generic for connected vehicles"},
};

inline constexpr LabelTable<FailureMode, 8> kFailureModeLabels{
    {"No", "Unintended", "TooEarly", "TooLate", "Less", "More", "Inverted",
     "Intermittent"},
    {"No", "Unintended", "Too early", "Too late", "Less", "More", "Inverted",
     "Intermittent"},
};

inline constexpr LabelTable<AsilLevel, 5> kAsilLabels{
    {"QM", "A", "B", "C", "D"},
    {"No ASIL", "ASIL A", "ASIL B", "ASIL C", "ASIL D"},
};

inline constexpr LabelTable<CandidateStatus, 3> kStatusLabels{
    {"Proposed", "Adopted", "Rejected"},
    {"Proposed", "Adopted", "Rejected"},
};

template <typename Enum>
constexpr const auto& table_for() {
  if constexpr (std::is_same_v<Enum, ThreatType>) {
    return kThreatTypeLabels;
  } else if constexpr (std::is_same_v<Enum, AttackType>) {
    return kAttackTypeLabels;
  } else if constexpr (std::is_same_v<Enum, AssetGroup>) {
    return kAssetGroupLabels;
  } else if constexpr (std::is_same_v<Enum, AssetType>) {
    return kAssetTypeLabels;
  } else if constexpr (std::is_same_v<Enum, FailureMode>) {
    return kFailureModeLabels;
  } else if constexpr (std::is_same_v<Enum, AsilLevel>) {
    return kAsilLabels;
  } else {
    static_assert(std::is_same_v<Enum, CandidateStatus>);
    return kStatusLabels;
  }
}

}  // namespace detail

/// Number of labels in a closed set.
template <typename Enum>
constexpr std::size_t enum_count() {
  return detail::table_for<Enum>().canonical.size();
}

/// All values of a closed set, in declaration order.
template <typename Enum>
constexpr auto all_values() {
  std::array<Enum, enum_count<Enum>()> values{};
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = static_cast<Enum>(i);
  }
  return values;
}

template <typename Enum>
constexpr std::string_view label(Enum value) {
  return detail::table_for<Enum>().canonical[static_cast<std::size_t>(value)];
}

template <typename Enum>
constexpr std::string_view display_label(Enum value) {
  return detail::table_for<Enum>().display[static_cast<std::size_t>(value)];
}

/// Case-sensitive lookup of a canonical label.
template <typename Enum>
constexpr std::optional<Enum> parse_label(std::string_view text) {
  const auto& labels = detail::table_for<Enum>().canonical;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == text) {
      return static_cast<Enum>(i);
    }
  }
  return std::nullopt;
}

/// Comma-separated list of canonical labels, used in diagnostics hints.
template <typename Enum>
std::string label_list() {
  std::string out;
  for (auto value : all_values<Enum>()) {
    if (!out.empty()) {
      out += ", ";
    }
    out += label(value);
  }
  return out;
}

}  // namespace saseval
