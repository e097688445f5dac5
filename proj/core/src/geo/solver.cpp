#include <cmath>
#include <map>

#include <Eigen/Dense>

#include "qgps/geo/geo.hpp"

namespace qgps::geo {

namespace {

std::vector<double> aligned_ranges(const std::vector<SatelliteEpoch>& sats,
                                   const std::vector<Pseudorange>& ranges) {
  if (sats.size() != ranges.size())
    throw std::invalid_argument("satellite/pseudorange count mismatch");
  std::map<std::string, double> by_id;
  for (const auto& r : ranges) {
    if (!by_id.emplace(r.satellite_id, r.rho).second)
      throw std::invalid_argument("duplicate pseudorange id: " + r.satellite_id);
  }
  std::vector<double> out;
  out.reserve(sats.size());
  for (const auto& s : sats) {
    auto it = by_id.find(s.id);
    if (it == by_id.end())
      throw std::invalid_argument("missing pseudorange for satellite " + s.id);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

void residual_and_jacobian(const std::vector<SatelliteEpoch>& sats,
                           const std::vector<Pseudorange>& ranges, const EcefPoint& x,
                           double bias_meters, std::vector<double>& residual,
                           std::vector<std::array<double, 4>>& jacobian) {
  const auto rho = aligned_ranges(sats, ranges);
  const std::size_t m = sats.size();
  residual.assign(m, 0.0);
  jacobian.assign(m, {});
  for (std::size_t i = 0; i < m; ++i) {
    const EcefPoint d = x - sats[i].position;
    const double dist = d.norm();
    if (dist <= 0.0) throw SolverError("iterate coincides with a satellite");
    residual[i] = dist + bias_meters - rho[i];
    jacobian[i] = {d.x / dist, d.y / dist, d.z / dist, 1.0};
  }
}

PositionFix solve_fix(const std::vector<SatelliteEpoch>& sats,
                      const std::vector<Pseudorange>& ranges, const SolverConfig& cfg) {
  if (sats.size() < 4) throw std::invalid_argument("at least 4 satellites required");
  if (cfg.max_iterations < 1 || cfg.tolerance <= 0.0)
    throw std::invalid_argument("invalid solver configuration");

  const auto m = static_cast<Eigen::Index>(sats.size());
  EcefPoint x = cfg.initial_guess;
  double u = kSpeedOfLight * cfg.initial_bias;  // bias in meters

  std::vector<double> res;
  std::vector<std::array<double, 4>> jac;
  PositionFix fix;

  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    residual_and_jacobian(sats, ranges, x, u, res, jac);
    Eigen::MatrixXd J(m, 4);
    Eigen::VectorXd r(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      r(i) = res[i];
      for (int c = 0; c < 4; ++c) J(i, c) = jac[i][c];
    }

    Eigen::Vector4d step;
    if (m == 4 && cfg.damping == 0.0) {
      Eigen::FullPivLU<Eigen::Matrix4d> lu(J);
      if (lu.rank() < 4) throw SolverError("singular Jacobian: degenerate geometry");
      step = lu.solve(-r);
    } else {
      Eigen::Matrix4d normal = J.transpose() * J;
      normal += cfg.damping * Eigen::Matrix4d::Identity();
      Eigen::FullPivLU<Eigen::Matrix4d> lu(normal);
      if (lu.rank() < 4) throw SolverError("singular normal equations: degenerate geometry");
      step = lu.solve(-J.transpose() * r);
    }

    x.x += step(0);
    x.y += step(1);
    x.z += step(2);
    u += step(3);
    fix.iterations = iter;
    if (step.norm() < cfg.tolerance) {
      fix.converged = true;
      break;
    }
  }

  residual_and_jacobian(sats, ranges, x, u, res, jac);
  double rn = 0.0;
  for (double v : res) rn += v * v;
  fix.position = x;
  fix.clock_bias = u / kSpeedOfLight;
  fix.residual_norm = std::sqrt(rn);
  return fix;
}

std::vector<PositionFix> enumerate_roots(
    const std::vector<SatelliteEpoch>& sats, const std::vector<Pseudorange>& ranges,
    const SolverConfig& cfg, const std::vector<std::pair<EcefPoint, double>>& starts) {
  std::vector<PositionFix> roots;
  for (const auto& [pos, bias] : starts) {
    SolverConfig local = cfg;
    local.initial_guess = pos;
    local.initial_bias = bias;
    PositionFix fix;
    try {
      fix = solve_fix(sats, ranges, local);
    } catch (const SolverError&) {
      continue;
    }
    if (!fix.converged) continue;
    bool duplicate = false;
    for (const auto& seen : roots)
      if (distance(seen.position, fix.position) < 1.0) {
        duplicate = true;
        break;
      }
    if (!duplicate) roots.push_back(fix);
  }
  return roots;
}

}  // namespace qgps::geo
