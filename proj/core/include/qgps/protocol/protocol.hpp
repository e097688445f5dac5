#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgps/adversary/adversary.hpp"
#include "qgps/geo/geo.hpp"
#include "qgps/resource/resource.hpp"

namespace qgps::protocol {

/// Everything one positioning task needs: platform, certification settings,
/// per-satellite attacks, constellation geometry and the simulation ground
/// truth the pseudoranges are generated from.
struct ProtocolConfig {
  resource::HardwareProfile hardware;
  int shots_per_term = 10000;
  double threshold = 5.0;  // certification cut on the I5 estimate
  std::map<std::string, adversary::AttackModel> attacks;  // keyed by satellite id
  bool correction_enabled = false;
  double jam_probability = 0.0;  // per-round discard chance
  std::vector<geo::SatelliteEpoch> satellites;
  geo::EcefPoint truth;
  double truth_bias = 0.0;  // receiver clock bias, seconds
  std::uint64_t seed = 0;
};

void validate(const ProtocolConfig& cfg);

struct RoundRecord {
  int round_index = 0;
  std::string satellite_id;
  bool discarded = false;  // jammed round, excluded from certification
  double i5_estimate = 0.0;
  double i5_stderr = 0.0;
  bool certified = false;
  std::optional<code5::Syndrome> syndrome;       // present when correction ran
  std::optional<code5::PauliError> correction;   // decoded correction, if any
  std::optional<double> pseudorange;             // meters, present iff certified
  std::optional<double> transmit_time;           // seconds
  std::optional<double> receive_time;            // receiver clock, seconds
  double generation_time = 0.0;                  // seconds, from the cost model
};

struct DetectionEvent {
  int round_index = 0;
  std::string satellite_id;
  std::string kind;  // "uncertified", "corrected" or "jammed"
};

struct ProtocolReport {
  std::vector<RoundRecord> rounds;
  std::optional<geo::PositionFix> fix;  // present iff >= 4 certified rounds
  std::vector<DetectionEvent> detection_events;
  double total_simulated_time = 0.0;  // seconds of code generation
};

/// One satellite's broadcast: noisy encoding, attack, optional correction,
/// finite-shot certification and, when certified, the pseudorange.
RoundRecord run_round(const ProtocolConfig& cfg, const std::string& satellite_id,
                      qsim::Rng& rng, int round_index = 0);

/// One round per configured satellite with per-round seed streams derived
/// from cfg.seed, then the position solve over the certified pseudoranges.
ProtocolReport run_task(const ProtocolConfig& cfg);

}  // namespace qgps::protocol
