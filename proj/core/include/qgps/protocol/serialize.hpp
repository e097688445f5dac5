#pragma once

#include <json.hpp>

#include "qgps/protocol/protocol.hpp"

// JSON bindings for the file formats: hardware profiles, satellite scenarios,
// attack models, protocol configs and reports. Schemas are documented in the
// repository README.

namespace qgps::geo {
void to_json(nlohmann::json& j, const EcefPoint& p);
void from_json(const nlohmann::json& j, EcefPoint& p);
void to_json(nlohmann::json& j, const SatelliteEpoch& s);
void from_json(const nlohmann::json& j, SatelliteEpoch& s);
void to_json(nlohmann::json& j, const Pseudorange& r);
void from_json(const nlohmann::json& j, Pseudorange& r);
void to_json(nlohmann::json& j, const PositionFix& f);
void to_json(nlohmann::json& j, const SolverConfig& c);
void from_json(const nlohmann::json& j, SolverConfig& c);
}  // namespace qgps::geo

namespace qgps::resource {
void to_json(nlohmann::json& j, const HardwareProfile& p);
void from_json(const nlohmann::json& j, HardwareProfile& p);
}  // namespace qgps::resource

namespace qgps::code5 {
void to_json(nlohmann::json& j, const Syndrome& s);
void from_json(const nlohmann::json& j, Syndrome& s);
void to_json(nlohmann::json& j, const PauliError& e);
void from_json(const nlohmann::json& j, PauliError& e);
}  // namespace qgps::code5

namespace qgps::adversary {
void to_json(nlohmann::json& j, const AttackModel& a);
void from_json(const nlohmann::json& j, AttackModel& a);
}  // namespace qgps::adversary

namespace qgps::protocol {
void to_json(nlohmann::json& j, const RoundRecord& r);
void to_json(nlohmann::json& j, const DetectionEvent& e);
void to_json(nlohmann::json& j, const ProtocolReport& r);
void to_json(nlohmann::json& j, const ProtocolConfig& c);
void from_json(const nlohmann::json& j, ProtocolConfig& c);
}  // namespace qgps::protocol
