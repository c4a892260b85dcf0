#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <span>
#include <vector>

#include "saseval/vocabulary.hpp"

namespace saseval::stride {

namespace detail {

using A = AttackType;

inline constexpr std::array kSpoofing{A::FakeMessages, A::Spoofing};
inline constexpr std::array kTampering{A::CorruptDataOrCode, A::DeliverMalware,
                                       A::Alter,           A::Inject,
                                       A::CorruptMessages, A::Manipulate,
                                       A::ConfigChange};
inline constexpr std::array kRepudiation{A::Replay, A::RepudiationOfMessageTransmission,
                                         A::Delay};
inline constexpr std::array kInformationDisclosure{A::Listen, A::Intercept,
                                                   A::Eavesdropping, A::IllegalAcquisition,
                                                   A::CovertChannel, A::ConfigChange};
inline constexpr std::array kDenialOfService{A::Disable, A::DenialOfService, A::Jamming};
// GainUnauthorizedAccess is not in the threat/attack table itself; it is used
// by the worked asset mapping under elevation of privilege.
inline constexpr std::array kElevationOfPrivilege{A::IllegalAcquisition, A::GainElevatedAccess,
                                                  A::GainUnauthorizedAccess};

}  // namespace detail

/// The attack types a STRIDE threat type manifests as, in table order.
constexpr std::span<const AttackType> attack_types_for(ThreatType t) {
  switch (t) {
    case ThreatType::Spoofing:
      return detail::kSpoofing;
    case ThreatType::Tampering:
      return detail::kTampering;
    case ThreatType::Repudiation:
      return detail::kRepudiation;
    case ThreatType::InformationDisclosure:
      return detail::kInformationDisclosure;
    case ThreatType::DenialOfService:
      return detail::kDenialOfService;
    case ThreatType::ElevationOfPrivilege:
      return detail::kElevationOfPrivilege;
  }
  return {};
}

constexpr bool is_legal(ThreatType t, AttackType a) {
  auto row = attack_types_for(t);
  return std::find(row.begin(), row.end(), a) != row.end();
}

/// Inverse reading: every threat type whose row lists `a`.
inline std::set<ThreatType> threat_types_for(AttackType a) {
  std::set<ThreatType> out;
  for (auto t : all_values<ThreatType>()) {
    if (is_legal(t, a)) {
      out.insert(t);
    }
  }
  return out;
}

/// Both directions of the mapping, materialized.
struct StrideMap {
  std::vector<std::pair<ThreatType, std::vector<AttackType>>> forward;
  std::vector<std::pair<AttackType, std::set<ThreatType>>> reverse;
};

inline StrideMap stride_map() {
  StrideMap map;
  for (auto t : all_values<ThreatType>()) {
    auto row = attack_types_for(t);
    map.forward.emplace_back(t, std::vector<AttackType>(row.begin(), row.end()));
  }
  for (auto a : all_values<AttackType>()) {
    map.reverse.emplace_back(a, threat_types_for(a));
  }
  return map;
}

}  // namespace saseval::stride
