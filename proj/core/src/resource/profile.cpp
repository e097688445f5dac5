#include "qgps/resource/resource.hpp"

namespace qgps::resource {

void validate(const HardwareProfile& profile) {
  qsim::require(profile.t_1q > 0.0 && profile.t_2q > 0.0, "gate times must be positive");
  qsim::require(profile.f_1q > 0.0 && profile.f_1q <= 1.0 &&
                    profile.f_2q > 0.0 && profile.f_2q <= 1.0,
                "gate fidelities must lie in (0, 1]");
}

const std::vector<HardwareProfile>& builtin_profiles() {
  static const std::vector<HardwareProfile> profiles = {
      {"superconducting", 8.2e-9, 25e-9, 0.99997, 0.998},
      {"trapped-ion", 1.32e-6, 60e-6, 0.9999985, 0.9997},
  };
  return profiles;
}

HardwareProfile profile_by_name(const std::string& name) {
  for (const auto& p : builtin_profiles())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown hardware profile: " + name);
}

}  // namespace qgps::resource
