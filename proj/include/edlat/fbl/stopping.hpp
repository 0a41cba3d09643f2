#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "edlat/fbl/channel.hpp"
#include "edlat/numerics/quadrature.hpp"

namespace edlat {

/// Time-resolved stopping statistics of the sequential decision rule.
///
/// eps_values samples the block-error profile over grid; the undetected mass
/// eps(1) is treated as a forced decision at the symbol end, which makes
///   E[tau]   = integral of eps over [0,1]
///   E[tau^2] = 2 * integral of t*eps(t) over [0,1]
/// by integration by parts.
struct StoppingProfile {
  std::vector<double> grid;
  std::vector<double> eps_values;
  double mean_stop = 0.0;
  double second_moment_stop = 0.0;
  double residual_mass = 0.0;
};

inline constexpr std::size_t kDefaultProfileGridPoints = 4096;

/// Rate left after the half-log blocklength correction; the error profile
/// decreases from 1 only when this is positive.
inline double effective_rate(const CodeSpec& code) {
  const double nn = static_cast<double>(code.n);
  return code.rate - 0.5 * std::log2(nn) / nn;
}

inline StoppingProfile stopping_profile(const ChannelSpec& channel, const CodeSpec& code,
                                        std::size_t grid_points = kDefaultProfileGridPoints) {
  if (grid_points < 64) {
    throw std::domain_error("stopping_profile: grid_points must be >= 64");
  }
  if (!(effective_rate(code) > 0.0)) {
    throw std::domain_error(
        "stopping_profile: effective rate must be positive for a decreasing error profile");
  }
  StoppingProfile profile;
  profile.grid.resize(grid_points);
  profile.eps_values.resize(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    profile.grid[i] = t;
    profile.eps_values[i] = bler_at(channel, code, t);
  }
  profile.residual_mass = profile.eps_values.back();

  constexpr double rel_tol = 1e-9;
  const auto eps_fn = [&](double t) { return bler_at(channel, code, t); };
  profile.mean_stop = integrate(eps_fn, 0.0, 1.0, rel_tol).value;
  const auto weighted = [&](double t) { return t * bler_at(channel, code, t); };
  profile.second_moment_stop = 2.0 * integrate(weighted, 0.0, 1.0, rel_tol).value;
  return profile;
}

}  // namespace edlat
