#include "qgps/protocol/serialize.hpp"

namespace qgps::geo {

void to_json(nlohmann::json& j, const EcefPoint& p) {
  j = {{"x_m", p.x}, {"y_m", p.y}, {"z_m", p.z}};
}

void from_json(const nlohmann::json& j, EcefPoint& p) {
  j.at("x_m").get_to(p.x);
  j.at("y_m").get_to(p.y);
  j.at("z_m").get_to(p.z);
}

void to_json(nlohmann::json& j, const SatelliteEpoch& s) {
  j = {{"id", s.id}, {"position", s.position}, {"transmit_time_s", s.transmit_time}};
}

void from_json(const nlohmann::json& j, SatelliteEpoch& s) {
  j.at("id").get_to(s.id);
  j.at("position").get_to(s.position);
  s.transmit_time = j.value("transmit_time_s", 0.0);
}

void to_json(nlohmann::json& j, const Pseudorange& r) {
  j = {{"satellite_id", r.satellite_id}, {"rho_m", r.rho}};
}

void from_json(const nlohmann::json& j, Pseudorange& r) {
  j.at("satellite_id").get_to(r.satellite_id);
  j.at("rho_m").get_to(r.rho);
}

void to_json(nlohmann::json& j, const PositionFix& f) {
  j = {{"position", f.position},
       {"clock_bias_s", f.clock_bias},
       {"residual_norm_m", f.residual_norm},
       {"iterations", f.iterations},
       {"converged", f.converged}};
}

void to_json(nlohmann::json& j, const SolverConfig& c) {
  j = {{"max_iterations", c.max_iterations},
       {"tolerance_m", c.tolerance},
       {"initial_guess", c.initial_guess},
       {"initial_bias_s", c.initial_bias},
       {"damping", c.damping}};
}

void from_json(const nlohmann::json& j, SolverConfig& c) {
  c.max_iterations = j.value("max_iterations", c.max_iterations);
  c.tolerance = j.value("tolerance_m", c.tolerance);
  if (j.contains("initial_guess")) j.at("initial_guess").get_to(c.initial_guess);
  c.initial_bias = j.value("initial_bias_s", c.initial_bias);
  c.damping = j.value("damping", c.damping);
}

}  // namespace qgps::geo

namespace qgps::resource {

void to_json(nlohmann::json& j, const HardwareProfile& p) {
  j = {{"name", p.name},
       {"t_1q_s", p.t_1q},
       {"t_2q_s", p.t_2q},
       {"f_1q", p.f_1q},
       {"f_2q", p.f_2q}};
}

void from_json(const nlohmann::json& j, HardwareProfile& p) {
  j.at("name").get_to(p.name);
  j.at("t_1q_s").get_to(p.t_1q);
  j.at("t_2q_s").get_to(p.t_2q);
  j.at("f_1q").get_to(p.f_1q);
  j.at("f_2q").get_to(p.f_2q);
  validate(p);
}

}  // namespace qgps::resource

namespace qgps::code5 {

void to_json(nlohmann::json& j, const Syndrome& s) { j = s.bits; }

void from_json(const nlohmann::json& j, Syndrome& s) {
  j.get_to(s.bits);
  for (int b : s.bits) qsim::require(b == 0 || b == 1, "syndrome bits must be 0/1");
}

void to_json(nlohmann::json& j, const PauliError& e) {
  j = {{"qubit", e.qubit}, {"letter", std::string(1, e.letter)}};
}

void from_json(const nlohmann::json& j, PauliError& e) {
  j.at("qubit").get_to(e.qubit);
  const auto letter = j.at("letter").get<std::string>();
  qsim::require(letter.size() == 1, "letter must be a single character");
  e.letter = letter[0];
}

}  // namespace qgps::code5

namespace qgps::adversary {

void to_json(nlohmann::json& j, const AttackModel& a) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NoAttack>) {
          j = {{"type", "none"}};
        } else if constexpr (std::is_same_v<T, PauliAttack>) {
          j = {{"type", "pauli"}, {"errors", v.errors}};
        } else if constexpr (std::is_same_v<T, Depolarizing>) {
          j = {{"type", "depolarizing"}, {"p", v.p}, {"qubits", v.qubits}};
        } else if constexpr (std::is_same_v<T, Dephasing>) {
          j = {{"type", "dephasing"}, {"qubits", v.qubits}};
        } else {
          j = {{"type", "replacement"}};
          nlohmann::json rows = nlohmann::json::array();
          const auto& m = v.state.entries();
          for (Eigen::Index r = 0; r < m.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index c = 0; c < m.cols(); ++c)
              row.push_back({m(r, c).real(), m(r, c).imag()});
            rows.push_back(std::move(row));
          }
          j["state"] = std::move(rows);
        }
      },
      a);
}

void from_json(const nlohmann::json& j, AttackModel& a) {
  const auto type = j.at("type").get<std::string>();
  if (type == "none") {
    a = NoAttack{};
  } else if (type == "pauli") {
    PauliAttack p;
    j.at("errors").get_to(p.errors);
    a = std::move(p);
  } else if (type == "depolarizing") {
    Depolarizing d;
    j.at("p").get_to(d.p);
    j.at("qubits").get_to(d.qubits);
    a = std::move(d);
  } else if (type == "dephasing") {
    Dephasing d;
    j.at("qubits").get_to(d.qubits);
    a = std::move(d);
  } else if (type == "replacement") {
    const auto& state = j.at("state");
    if (state.is_string() && state.get<std::string>() == "maximally_mixed") {
      a = StateReplacement{DensityMatrix::maximally_mixed(code5::kNumQubits)};
    } else if (state.is_string() && state.get<std::string>() == "best_classical_product") {
      a = StateReplacement{best_classical_product_state()};
    } else {
      const auto rows = state.get<std::vector<std::vector<std::array<double, 2>>>>();
      const auto d = static_cast<Eigen::Index>(rows.size());
      qsim::Mat m(d, d);
      for (Eigen::Index r = 0; r < d; ++r) {
        qsim::require(static_cast<Eigen::Index>(rows[r].size()) == d,
                      "replacement state matrix must be square");
        for (Eigen::Index c = 0; c < d; ++c)
          m(r, c) = qsim::cdouble(rows[r][c][0], rows[r][c][1]);
      }
      int n = 0;
      while ((Eigen::Index{1} << n) < d) ++n;
      a = StateReplacement{DensityMatrix(n, std::move(m))};
    }
  } else {
    throw std::invalid_argument("unknown attack type: " + type);
  }
}

}  // namespace qgps::adversary

namespace qgps::protocol {

void to_json(nlohmann::json& j, const RoundRecord& r) {
  j = {{"round_index", r.round_index},
       {"satellite_id", r.satellite_id},
       {"discarded", r.discarded},
       {"i5_estimate", r.i5_estimate},
       {"i5_stderr", r.i5_stderr},
       {"certified", r.certified},
       {"generation_time_s", r.generation_time}};
  j["syndrome"] = r.syndrome ? nlohmann::json(*r.syndrome) : nlohmann::json();
  j["correction"] = r.correction ? nlohmann::json(*r.correction) : nlohmann::json();
  j["pseudorange_m"] = r.pseudorange ? nlohmann::json(*r.pseudorange) : nlohmann::json();
  j["transmit_time_s"] =
      r.transmit_time ? nlohmann::json(*r.transmit_time) : nlohmann::json();
  j["receive_time_s"] = r.receive_time ? nlohmann::json(*r.receive_time) : nlohmann::json();
}

void to_json(nlohmann::json& j, const DetectionEvent& e) {
  j = {{"round_index", e.round_index}, {"satellite_id", e.satellite_id}, {"kind", e.kind}};
}

void to_json(nlohmann::json& j, const ProtocolReport& r) {
  j = {{"rounds", r.rounds},
       {"detection_events", r.detection_events},
       {"total_simulated_time_s", r.total_simulated_time}};
  j["fix"] = r.fix ? nlohmann::json(*r.fix) : nlohmann::json();
}

void to_json(nlohmann::json& j, const ProtocolConfig& c) {
  j = {{"hardware", c.hardware},
       {"shots_per_term", c.shots_per_term},
       {"threshold", c.threshold},
       {"correction_enabled", c.correction_enabled},
       {"jam_probability", c.jam_probability},
       {"satellites", c.satellites},
       {"truth", c.truth},
       {"truth_clock_bias_s", c.truth_bias},
       {"seed", c.seed}};
  nlohmann::json attacks = nlohmann::json::object();
  for (const auto& [id, attack] : c.attacks) attacks[id] = attack;
  j["attacks"] = std::move(attacks);
}

void from_json(const nlohmann::json& j, ProtocolConfig& c) {
  const auto& hw = j.at("hardware");
  if (hw.is_string()) {
    const auto name = hw.get<std::string>();
    c.hardware = name == "ideal" ? resource::HardwareProfile{"ideal", 1e-9, 1e-9, 1.0, 1.0}
                                 : resource::profile_by_name(name);
  } else {
    hw.get_to(c.hardware);
  }
  c.shots_per_term = j.value("shots_per_term", c.shots_per_term);
  c.threshold = j.value("threshold", c.threshold);
  c.correction_enabled = j.value("correction_enabled", c.correction_enabled);
  c.jam_probability = j.value("jam_probability", c.jam_probability);
  j.at("satellites").get_to(c.satellites);
  j.at("truth").get_to(c.truth);
  c.truth_bias = j.value("truth_clock_bias_s", 0.0);
  c.seed = j.value("seed", std::uint64_t{0});
  c.attacks.clear();
  if (j.contains("attacks"))
    for (const auto& [id, attack] : j.at("attacks").items())
      c.attacks.emplace(id, attack.get<adversary::AttackModel>());
  validate(c);
}

}  // namespace qgps::protocol
