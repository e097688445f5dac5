#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgps::geo {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact

/// Raised for degenerate geometry (singular normal equations).
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EcefPoint {
  double x = 0.0, y = 0.0, z = 0.0;  // meters

  EcefPoint operator+(const EcefPoint& o) const { return {x + o.x, y + o.y, z + o.z}; }
  EcefPoint operator-(const EcefPoint& o) const { return {x - o.x, y - o.y, z - o.z}; }
  double norm() const;
};

double distance(const EcefPoint& a, const EcefPoint& b);

struct SatelliteEpoch {
  std::string id;
  EcefPoint position;
  double transmit_time = 0.0;  // seconds
};

struct Pseudorange {
  std::string satellite_id;
  double rho = 0.0;  // meters
};

struct PositionFix {
  EcefPoint position;
  double clock_bias = 0.0;     // seconds
  double residual_norm = 0.0;  // meters, final misfit |r|_2
  int iterations = 0;
  bool converged = false;
};

struct SolverConfig {
  int max_iterations = 50;
  double tolerance = 1e-9;  // meters, on the update step
  EcefPoint initial_guess{0.0, 0.0, 0.0};
  double initial_bias = 0.0;  // seconds
  double damping = 0.0;       // Levenberg parameter, 0 = plain Gauss-Newton
};

/// rho_i = |p_i - truth| + c * bias for every satellite.
std::vector<Pseudorange> forward_pseudoranges(const EcefPoint& truth, double bias,
                                              const std::vector<SatelliteEpoch>& sats);

/// Gauss-Newton on r_i(x, b) = |p_i - x| + c b - rho_i. Four satellites give a
/// square Newton system; more give normal-equation least squares. The clock
/// bias is solved in meters (c*b) internally for conditioning.
PositionFix solve_fix(const std::vector<SatelliteEpoch>& sats,
                      const std::vector<Pseudorange>& ranges,
                      const SolverConfig& cfg = {});

/// Residual vector and Jacobian rows [(x - p_i)^T / |x - p_i|, 1] at (x, cb).
/// Exposed for verification against finite differences.
void residual_and_jacobian(const std::vector<SatelliteEpoch>& sats,
                           const std::vector<Pseudorange>& ranges, const EcefPoint& x,
                           double bias_meters, std::vector<double>& residual,
                           std::vector<std::array<double, 4>>& jacobian);

/// Runs solve_fix from every start and deduplicates converged fixes at 1 m
/// granularity. A symmetric four-satellite geometry can return two roots.
std::vector<PositionFix> enumerate_roots(const std::vector<SatelliteEpoch>& sats,
                                         const std::vector<Pseudorange>& ranges,
                                         const SolverConfig& cfg,
                                         const std::vector<std::pair<EcefPoint, double>>& starts);

}  // namespace qgps::geo
