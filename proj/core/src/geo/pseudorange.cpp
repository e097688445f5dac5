#include <cmath>

#include "qgps/geo/geo.hpp"

namespace qgps::geo {

double EcefPoint::norm() const { return std::sqrt(x * x + y * y + z * z); }

double distance(const EcefPoint& a, const EcefPoint& b) { return (a - b).norm(); }

std::vector<Pseudorange> forward_pseudoranges(const EcefPoint& truth, double bias,
                                              const std::vector<SatelliteEpoch>& sats) {
  std::vector<Pseudorange> out;
  out.reserve(sats.size());
  for (const auto& sat : sats) {
    const double d = distance(sat.position, truth);
    if (d <= 0.0) throw std::invalid_argument("satellite coincides with receiver");
    out.push_back({sat.id, d + kSpeedOfLight * bias});
  }
  return out;
}

}  // namespace qgps::geo
