#include <algorithm>

#include "qgps/bell/bell.hpp"
#include "qgps/protocol/protocol.hpp"
#include "qgps/qsim/evolve.hpp"

namespace qgps::protocol {

void validate(const ProtocolConfig& cfg) {
  resource::validate(cfg.hardware);
  qsim::require(cfg.shots_per_term >= 1, "shots_per_term must be >= 1");
  qsim::require(cfg.satellites.size() >= 4, "at least 4 satellites required");
  qsim::require(cfg.jam_probability >= 0.0 && cfg.jam_probability <= 1.0,
                "jam probability out of range");
  std::vector<std::string> ids;
  for (const auto& s : cfg.satellites) ids.push_back(s.id);
  std::sort(ids.begin(), ids.end());
  qsim::require(std::adjacent_find(ids.begin(), ids.end()) == ids.end(),
                "satellite ids must be distinct");
  for (const auto& [id, attack] : cfg.attacks)
    qsim::require(std::binary_search(ids.begin(), ids.end(), id),
                  "attack references unknown satellite " + id);
}

namespace {

const geo::SatelliteEpoch& satellite_by_id(const ProtocolConfig& cfg,
                                           const std::string& id) {
  for (const auto& s : cfg.satellites)
    if (s.id == id) return s;
  throw std::invalid_argument("unknown satellite id: " + id);
}

}  // namespace

RoundRecord run_round(const ProtocolConfig& cfg, const std::string& satellite_id,
                      qsim::Rng& rng, int round_index) {
  const geo::SatelliteEpoch& sat = satellite_by_id(cfg, satellite_id);

  RoundRecord rec;
  rec.round_index = round_index;
  rec.satellite_id = satellite_id;
  rec.generation_time =
      resource::total_time(cfg.hardware, resource::circuit_cost(code5::encoding_circuit()));

  if (cfg.jam_probability > 0.0) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    if (unif(rng) < cfg.jam_probability) {
      rec.discarded = true;
      return rec;
    }
  }

  // Generation: the encoder run on |0> data under the profile's gate noise.
  qsim::DensityMatrix state = resource::apply_circuit_noisy(
      qsim::DensityMatrix::from_pure(code5::encoder_input(1.0, 0.0)),
      code5::encoding_circuit(), cfg.hardware);

  if (auto it = cfg.attacks.find(satellite_id); it != cfg.attacks.end())
    state = adversary::apply_attack(state, it->second);

  if (cfg.correction_enabled) {
    auto corrected = code5::measure_and_correct(state, rng);
    rec.syndrome = corrected.syndrome;
    rec.correction = corrected.correction;
    state = std::move(corrected.state);
  }

  const auto i5 = bell::builtin_functional(bell::FunctionalKind::I5);
  const auto strat = bell::optimal_strategy(bell::FunctionalKind::I5);
  const auto est = bell::sample_estimate(i5, strat, state, cfg.shots_per_term, rng);
  rec.i5_estimate = est.estimate;
  rec.i5_stderr = est.stderr;
  rec.certified = est.estimate >= cfg.threshold;

  if (rec.certified) {
    const double dist = geo::distance(sat.position, cfg.truth);
    rec.pseudorange = dist + geo::kSpeedOfLight * cfg.truth_bias;
    rec.transmit_time = sat.transmit_time;
    rec.receive_time = sat.transmit_time + dist / geo::kSpeedOfLight + cfg.truth_bias;
  }
  return rec;
}

ProtocolReport run_task(const ProtocolConfig& cfg) {
  validate(cfg);

  ProtocolReport report;
  std::vector<geo::SatelliteEpoch> certified_sats;
  std::vector<geo::Pseudorange> certified_ranges;

  for (std::size_t i = 0; i < cfg.satellites.size(); ++i) {
    const auto& sat = cfg.satellites[i];
    qsim::Rng round_rng(qsim::derive_seed(cfg.seed, i));
    RoundRecord rec = run_round(cfg, sat.id, round_rng, static_cast<int>(i));

    report.total_simulated_time += rec.generation_time;
    if (rec.discarded) {
      report.detection_events.push_back({rec.round_index, sat.id, "jammed"});
    } else if (!rec.certified) {
      report.detection_events.push_back({rec.round_index, sat.id, "uncertified"});
    }
    if (rec.syndrome && !rec.syndrome->is_trivial())
      report.detection_events.push_back({rec.round_index, sat.id, "corrected"});

    if (rec.certified) {
      certified_sats.push_back(sat);
      certified_ranges.push_back({sat.id, *rec.pseudorange});
    }
    report.rounds.push_back(std::move(rec));
  }

  if (certified_sats.size() >= 4)
    report.fix = geo::solve_fix(certified_sats, certified_ranges);
  return report;
}

}  // namespace qgps::protocol
