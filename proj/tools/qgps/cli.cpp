#include "qgps/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qgps/adversary/adversary.hpp"
#include "qgps/bell/bell.hpp"
#include "qgps/code5/code5.hpp"
#include "qgps/protocol/serialize.hpp"
#include "qgps/qsim/evolve.hpp"
#include "qgps/qsim/fidelity.hpp"
#include "qgps/resource/resource.hpp"

namespace qgps::cli {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fmt_time(double seconds) {
  std::ostringstream os;
  os.precision(6);
  if (seconds >= 1.0)
    os << seconds << " s";
  else if (seconds >= 1e-3)
    os << seconds * 1e3 << " ms";
  else if (seconds >= 1e-6)
    os << seconds * 1e6 << " us";
  else
    os << seconds * 1e9 << " ns";
  return os.str();
}

std::string fmt_percent(double fraction) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << fraction * 100.0 << "%";
  return os.str();
}

std::string fmt_num(double v, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

std::pair<qsim::cdouble, qsim::cdouble> random_amplitudes(qsim::Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  qsim::cdouble a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

// ---------------------------------------------------------------- verify-code

CommandResult cmd_verify_code(std::uint64_t seed, int samples, const std::string& format) {
  json j;
  j["stabilizer_expectations_zero"] = code5::stabilizer_expectations(code5::logical_zero());
  j["stabilizer_expectations_one"] = code5::stabilizer_expectations(code5::logical_one());
  j["logical_overlap"] = std::abs(code5::logical_zero().amplitudes().dot(
      code5::logical_one().amplitudes()));

  const auto& circuit = code5::encoding_circuit();
  const auto cost = resource::circuit_cost(circuit);
  j["gate_census"] = {{"hadamard", cost.n_1q}, {"cnot", cost.n_2q}};

  qsim::Rng rng(seed);
  double min_fid = 1.0;
  for (int i = 0; i < samples; ++i) {
    const auto [a, b] = random_amplitudes(rng);
    const auto encoded = qsim::apply_circuit(code5::encoder_input(a, b), circuit);
    min_fid = std::min(min_fid, qsim::fidelity(encoded, code5::logical_state(a, b)));
  }
  j["encoder_samples"] = samples;
  j["encoder_fidelity_min"] = min_fid;

  if (format == "table") {
    std::ostringstream os;
    os << "five-qubit code verification\n";
    os << "  stabilizer expectations |0_L>:";
    for (double v : code5::stabilizer_expectations(code5::logical_zero()))
      os << " " << fmt_num(v, 3);
    os << "\n  stabilizer expectations |1_L>:";
    for (double v : code5::stabilizer_expectations(code5::logical_one()))
      os << " " << fmt_num(v, 3);
    os << "\n  gate census: " << cost.n_1q << " H, " << cost.n_2q << " CNOT\n";
    os << "  encoder-vs-table fidelity (min over " << samples
       << " random inputs): " << fmt_num(min_fid, 15) << "\n";
    return {kExitOk, os.str()};
  }
  return {kExitOk, dump(j)};
}

// ----------------------------------------------------------------------- bell

CommandResult cmd_bell(std::uint64_t seed, int shots, const std::string& format) {
  const auto chsh = bell::builtin_functional(bell::FunctionalKind::Chsh);
  const auto i5 = bell::builtin_functional(bell::FunctionalKind::I5);
  const auto chsh_strat = bell::optimal_strategy(bell::FunctionalKind::Chsh);
  const auto i5_strat = bell::optimal_strategy(bell::FunctionalKind::I5);

  qsim::Vec bell_amp = qsim::Vec::Zero(4);
  bell_amp(0) = bell_amp(3) = 1.0 / std::sqrt(2.0);
  const qsim::Statevector bell_pair(2, std::move(bell_amp));

  qsim::Rng rng(seed);
  const auto chsh_sample = bell::sample_estimate(chsh, chsh_strat, bell_pair, shots, rng);
  const auto i5_sample = bell::sample_estimate(i5, i5_strat, code5::logical_zero(), shots, rng);

  json j;
  j["chsh"] = {{"classical_bound", bell::classical_maximum(chsh).value},
               {"quantum_bound", chsh.quantum_bound},
               {"exact_on_bell_pair", bell::evaluate(chsh, chsh_strat, bell_pair)},
               {"sampled_estimate", chsh_sample.estimate},
               {"sampled_stderr", chsh_sample.stderr},
               {"sos_residual", bell::sos_residual(chsh_strat, bell::FunctionalKind::Chsh)}};
  j["i5"] = {{"classical_bound", bell::classical_maximum(i5).value},
             {"quantum_bound", i5.quantum_bound},
             {"exact_on_logical_zero", bell::evaluate(i5, i5_strat, code5::logical_zero())},
             {"sampled_estimate", i5_sample.estimate},
             {"sampled_stderr", i5_sample.stderr},
             {"sos_residual", bell::sos_residual(i5_strat, bell::FunctionalKind::I5)}};
  j["shots_per_term"] = shots;
  j["seed"] = seed;

  if (format == "table") {
    std::ostringstream os;
    os << "functional  classical  quantum    exact       sampled (stderr)\n";
    os << "chsh        " << fmt_num(j["chsh"]["classical_bound"].get<double>(), 6) << "          "
       << fmt_num(chsh.quantum_bound, 8) << "   "
       << fmt_num(j["chsh"]["exact_on_bell_pair"].get<double>(), 8) << "    "
       << fmt_num(chsh_sample.estimate, 6) << " (" << fmt_num(chsh_sample.stderr, 3) << ")\n";
    os << "i5          " << fmt_num(j["i5"]["classical_bound"].get<double>(), 6) << "          "
       << fmt_num(i5.quantum_bound, 8) << "   "
       << fmt_num(j["i5"]["exact_on_logical_zero"].get<double>(), 8) << "    "
       << fmt_num(i5_sample.estimate, 6) << " (" << fmt_num(i5_sample.stderr, 3) << ")\n";
    return {kExitOk, os.str()};
  }
  return {kExitOk, dump(j)};
}

// ------------------------------------------------------------ classical-bound

CommandResult cmd_classical_bound(const std::string& functional, const std::string& format) {
  const auto kind =
      functional == "chsh" ? bell::FunctionalKind::Chsh : bell::FunctionalKind::I5;
  const auto f = bell::builtin_functional(kind);
  const auto best = bell::classical_maximum(f);

  json j;
  j["functional"] = functional;
  j["bound"] = best.value;
  j["assignments_searched"] = 1L << (2 * f.parties);
  json assign = json::array();
  for (const auto& pair : best.assignment) assign.push_back({pair[0], pair[1]});
  j["argmax_assignment"] = std::move(assign);

  if (format == "table") {
    std::ostringstream os;
    os << functional << " classical bound: " << fmt_num(best.value, 10) << " (over "
       << j["assignments_searched"] << " deterministic strategies)\n";
    os << "argmax (A0, A1) per party:";
    for (const auto& pair : best.assignment) os << " (" << pair[0] << "," << pair[1] << ")";
    os << "\n";
    return {kExitOk, os.str()};
  }
  return {kExitOk, dump(j)};
}

// --------------------------------------------------------------- attack-sweep

json outcome_to_json(const adversary::AttackOutcome& row) {
  json j = {{"attack", row.label},
            {"i5_value", row.i5_value},
            {"certified", row.certified},
            {"corrected", row.corrected}};
  j["syndrome"] = row.syndrome ? json(*row.syndrome) : json();
  j["i5_after_correction"] =
      row.i5_after_correction ? json(*row.i5_after_correction) : json();
  return j;
}

CommandResult cmd_attack_sweep(const std::string& attacks, double threshold,
                               const std::string& format) {
  std::vector<adversary::AttackModel> models;
  if (attacks == "all-single-pauli") {
    models = adversary::single_pauli_attacks();
  } else if (attacks == "depolarizing") {
    for (int i = 0; i <= 10; ++i)
      models.push_back(adversary::Depolarizing{i / 10.0, {0, 1, 2, 3, 4}});
  } else if (attacks == "replacement") {
    models.push_back(adversary::StateReplacement{adversary::best_classical_product_state()});
    models.push_back(
        adversary::StateReplacement{qsim::DensityMatrix::maximally_mixed(code5::kNumQubits)});
  } else if (attacks == "none") {
    models.push_back(adversary::NoAttack{});
  } else {
    throw std::invalid_argument("unknown attack set: " + attacks);
  }

  const auto rows = adversary::attack_sweep(models, threshold);

  if (format == "csv") {
    std::ostringstream os;
    os << "attack,i5_value,certified,syndrome,corrected,i5_after_correction\n";
    for (const auto& row : rows) {
      os << row.label << "," << fmt_num(row.i5_value, 15) << ","
         << (row.certified ? 1 : 0) << ",";
      if (row.syndrome)
        for (int b : row.syndrome->bits) os << b;
      os << "," << (row.corrected ? 1 : 0) << ",";
      if (row.i5_after_correction) os << fmt_num(*row.i5_after_correction, 15);
      os << "\n";
    }
    return {kExitOk, os.str()};
  }
  if (format == "table") {
    std::ostringstream os;
    os << "attack                 i5        certified  syndrome  corrected\n";
    for (const auto& row : rows) {
      os << row.label;
      for (std::size_t i = row.label.size(); i < 23; ++i) os << ' ';
      os << fmt_num(row.i5_value, 6) << "   " << (row.certified ? "yes" : "no ") << "       ";
      if (row.syndrome)
        for (int b : row.syndrome->bits) os << b;
      else
        os << "-   ";
      os << "      " << (row.corrected ? "yes" : "no") << "\n";
    }
    return {kExitOk, os.str()};
  }
  json j;
  j["threshold"] = threshold;
  j["rows"] = json::array();
  for (const auto& row : rows) j["rows"].push_back(outcome_to_json(row));
  return {kExitOk, dump(j)};
}

// ------------------------------------------------------------------- hardware

json profile_report(const resource::HardwareProfile& p) {
  const auto cost = resource::circuit_cost(code5::encoding_circuit());
  json j;
  j["profile"] = p;
  j["circuit_cost"] = {{"n_1q", cost.n_1q}, {"n_2q", cost.n_2q},
                       {"d_1q", cost.d_1q}, {"d_2q", cost.d_2q}};
  j["t_total_s"] = resource::total_time(p, cost);
  j["f_circuit_bound"] = resource::fidelity_bound(p, cost);
  return j;
}

CommandResult cmd_hardware(const std::string& profile, const std::string& profile_file,
                           const std::string& format) {
  std::vector<resource::HardwareProfile> profiles;
  if (!profile_file.empty()) {
    resource::HardwareProfile p = load_json_file(profile_file);
    profiles.push_back(std::move(p));
  } else if (profile == "all") {
    profiles = resource::builtin_profiles();
  } else {
    profiles.push_back(resource::profile_by_name(profile));
  }

  if (format == "table") {
    std::ostringstream os;
    os << "profile           t_1q       t_2q       t_total     F_1q      F_2q     F_circuit\n";
    for (const auto& p : profiles) {
      const auto j = profile_report(p);
      os << p.name;
      for (std::size_t i = p.name.size(); i < 18; ++i) os << ' ';
      os << fmt_time(p.t_1q) << "     " << fmt_time(p.t_2q) << "      "
         << fmt_time(j["t_total_s"].get<double>()) << "    " << fmt_percent(p.f_1q) << "    "
         << fmt_percent(p.f_2q) << "    " << fmt_percent(j["f_circuit_bound"].get<double>())
         << "\n";
    }
    return {kExitOk, os.str()};
  }
  json j = json::array();
  for (const auto& p : profiles) j.push_back(profile_report(p));
  return {kExitOk, dump(j)};
}

// ------------------------------------------------------------------- position

CommandResult cmd_position(const std::string& scenario_path, const std::string& format) {
  const json scenario = load_json_file(scenario_path);
  const auto sats = scenario.at("satellites").get<std::vector<geo::SatelliteEpoch>>();

  std::vector<geo::Pseudorange> ranges;
  if (scenario.contains("pseudoranges")) {
    ranges = scenario.at("pseudoranges").get<std::vector<geo::Pseudorange>>();
  } else if (scenario.contains("truth")) {
    const auto truth = scenario.at("truth").get<geo::EcefPoint>();
    const double bias = scenario.value("truth_clock_bias_s", 0.0);
    ranges = geo::forward_pseudoranges(truth, bias, sats);
  } else {
    throw std::invalid_argument("scenario needs either pseudoranges or truth");
  }

  geo::SolverConfig cfg;
  if (scenario.contains("solver")) scenario.at("solver").get_to(cfg);

  json j;
  bool converged = false;
  if (scenario.contains("starts")) {
    std::vector<std::pair<geo::EcefPoint, double>> starts;
    for (const auto& s : scenario.at("starts"))
      starts.emplace_back(s.at("position").get<geo::EcefPoint>(), s.value("bias_s", 0.0));
    const auto roots = geo::enumerate_roots(sats, ranges, cfg, starts);
    j["roots"] = roots;
    converged = !roots.empty();
  } else {
    const auto fix = geo::solve_fix(sats, ranges, cfg);
    j["fix"] = fix;
    converged = fix.converged;
  }

  if (format == "table") {
    std::ostringstream os;
    if (j.contains("fix")) {
      const auto& f = j["fix"];
      os << "position fix: (" << fmt_num(f["position"]["x_m"].get<double>(), 12) << ", "
         << fmt_num(f["position"]["y_m"].get<double>(), 12) << ", "
         << fmt_num(f["position"]["z_m"].get<double>(), 12) << ") m\n"
         << "clock bias: " << fmt_num(f["clock_bias_s"].get<double>(), 12) << " s\n"
         << "residual: " << fmt_num(f["residual_norm_m"].get<double>(), 6) << " m in "
         << f["iterations"] << " iterations, converged="
         << (f["converged"].get<bool>() ? "yes" : "no") << "\n";
    } else {
      os << j["roots"].size() << " distinct root(s)\n";
    }
    return {converged ? kExitOk : kExitNoFix, os.str()};
  }
  return {converged ? kExitOk : kExitNoFix, dump(j)};
}

// --------------------------------------------------------------- protocol-run

CommandResult cmd_protocol_run(const std::string& config_path, bool seed_overridden,
                               std::uint64_t seed, const std::string& format) {
  protocol::ProtocolConfig cfg = load_json_file(config_path);
  if (seed_overridden) cfg.seed = seed;

  const auto report = protocol::run_task(cfg);

  int exit_code = kExitNoFix;
  if (report.fix && report.fix->converged)
    exit_code = kExitOk;
  else if (!report.detection_events.empty())
    exit_code = kExitDetectionOnly;

  if (format == "table") {
    std::ostringstream os;
    os << "round  satellite  i5 (stderr)          certified  events\n";
    for (const auto& r : report.rounds) {
      os << "  " << r.round_index << "    " << r.satellite_id;
      for (std::size_t i = r.satellite_id.size(); i < 11; ++i) os << ' ';
      if (r.discarded) {
        os << "jammed\n";
        continue;
      }
      os << fmt_num(r.i5_estimate, 6) << " (" << fmt_num(r.i5_stderr, 3) << ")   "
         << (r.certified ? "yes" : "no ");
      if (r.syndrome && !r.syndrome->is_trivial()) os << "       corrected";
      os << "\n";
    }
    if (report.fix) {
      os << "fix: (" << fmt_num(report.fix->position.x, 12) << ", "
         << fmt_num(report.fix->position.y, 12) << ", " << fmt_num(report.fix->position.z, 12)
         << ") m, bias " << fmt_num(report.fix->clock_bias, 9) << " s\n";
    } else {
      os << "no fix (" << report.detection_events.size() << " detection events)\n";
    }
    return {exit_code, os.str()};
  }
  return {exit_code, dump(json(report))};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"desk-scale toolkit for Bell-certified five-qubit-code positioning"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::string output;
  app.add_option("--seed", seed, "RNG seed (default 42)");
  app.add_option("--format", format, "json|table (attack-sweep also: csv)")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--output", output, "write the report to this path");

  auto* verify = app.add_subcommand("verify-code", "code-space and encoder checks");
  int samples = 20;
  verify->add_option("--samples", samples, "random encoder inputs")->check(CLI::PositiveNumber);

  auto* bell_cmd = app.add_subcommand("bell", "exact and sampled I2/I5 values");
  int shots = 10000;
  bell_cmd->add_option("--shots", shots, "shots per correlator")->check(CLI::PositiveNumber);

  auto* classical = app.add_subcommand("classical-bound", "brute-force deterministic bound");
  std::string functional = "i5";
  classical->add_option("--functional", functional, "chsh|i5")
      ->check(CLI::IsMember({"chsh", "i5"}));

  auto* sweep = app.add_subcommand("attack-sweep", "exact attack outcomes");
  std::string attacks = "all-single-pauli";
  double threshold = 5.0;
  sweep->add_option("--attacks", attacks, "all-single-pauli|depolarizing|replacement|none");
  sweep->add_option("--threshold", threshold, "certification threshold (default 5)");

  auto* hardware = app.add_subcommand("hardware", "platform cost model");
  std::string profile = "all";
  std::string profile_file;
  hardware->add_option("--profile", profile, "superconducting|trapped-ion|all");
  hardware->add_option("--profile-file", profile_file, "JSON HardwareProfile path");

  auto* position = app.add_subcommand("position", "solve a positioning scenario");
  std::string scenario_path;
  position->add_option("--scenario", scenario_path, "scenario JSON path")->required();

  auto* protocol_cmd = app.add_subcommand("protocol-run", "full quantum-secured task");
  std::string config_path;
  protocol_cmd->add_option("--config", config_path, "ProtocolConfig JSON path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream os;
      os << app.help();
      return {kExitOk, os.str()};
    }
    return {kExitConfigError, dump(json{{"error", e.what()}})};
  }

  try {
    CommandResult result;
    if (*verify)
      result = cmd_verify_code(seed, samples, format);
    else if (*bell_cmd)
      result = cmd_bell(seed, shots, format);
    else if (*classical)
      result = cmd_classical_bound(functional, format);
    else if (*sweep)
      result = cmd_attack_sweep(attacks, threshold, format);
    else if (*hardware)
      result = cmd_hardware(profile, profile_file, format);
    else if (*position)
      result = cmd_position(scenario_path, format);
    else
      result = cmd_protocol_run(config_path, app.count("--seed") > 0, seed, format);

    if (!output.empty()) {
      std::ofstream out(output);
      if (!out) throw std::invalid_argument("cannot write output file: " + output);
      out << result.output;
    }
    return result;
  } catch (const geo::SolverError& e) {
    return {kExitNoFix, dump(json{{"error", e.what()}})};
  } catch (const nlohmann::json::exception& e) {
    return {kExitConfigError, dump(json{{"error", e.what()}})};
  } catch (const std::invalid_argument& e) {
    return {kExitConfigError, dump(json{{"error", e.what()}})};
  } catch (const std::exception& e) {
    return {kExitInternalError, dump(json{{"error", e.what()}})};
  }
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  const CommandResult result = run_command(args);
  std::cout << result.output;
  return result.exit_code;
}

}  // namespace qgps::cli
