#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "edlat/errors.hpp"
#include "edlat/fbl/stopping.hpp"
#include "edlat/numerics/rng.hpp"

namespace edlat {

enum class PhaseModel { uniform01, fixed };

/// Multi-hop relay chain: hop count plus the per-hop alignment phase model.
struct MultihopSpec {
  std::size_t hops = 1;
  double mean_phase = 0.5;
  PhaseModel phase_model = PhaseModel::uniform01;

  static MultihopSpec uniform(std::size_t hops) {
    return MultihopSpec{hops, 0.5, PhaseModel::uniform01};
  }
  static MultihopSpec fixed_phase(std::size_t hops, double phase) {
    if (!(phase >= 0.0 && phase <= 1.0)) {
      throw std::domain_error("MultihopSpec: phase must lie in [0,1]");
    }
    return MultihopSpec{hops, phase, PhaseModel::fixed};
  }
};

/// One-hop latency of a synchronous decoder, in normalized symbols.
inline double latency_sync(std::size_t n) {
  if (n < 1) throw std::domain_error("latency_sync: n must be >= 1");
  return static_cast<double>(n);
}

/// Store-and-forward chain of h synchronous hops.
inline double latency_sync_df(std::size_t n, std::size_t h) {
  if (h < 1) throw std::domain_error("latency_sync_df: h must be >= 1");
  return static_cast<double>(h) * latency_sync(n);
}

/// Mean latency when every relay forwards at its sequential decision time:
/// n + (h-1)*n*E[tau].
inline double latency_ed_df(std::size_t n, std::size_t h, double mean_stop) {
  if (!(mean_stop >= 0.0 && mean_stop <= 1.0)) {
    throw std::domain_error("latency_ed_df: mean_stop must lie in [0,1]");
  }
  if (h < 1) throw std::domain_error("latency_ed_df: h must be >= 1");
  return static_cast<double>(n) + static_cast<double>(h - 1) * static_cast<double>(n) * mean_stop;
}

/// Continuous-transmission chain with synchronous detection:
/// (E[phi] + 1) * h * n.
inline double latency_ctsd(std::size_t n, std::size_t h, const MultihopSpec& spec) {
  return (spec.mean_phase + 1.0) * latency_sync_df(n, h);
}

/// Provable envelope for continuous-transmission early detection:
/// E[phi]*h*n <= L <= E[phi]*h*n + latency_ed_df.
inline std::pair<double, double> cted_bounds(std::size_t n, std::size_t h,
                                             const MultihopSpec& spec, double mean_stop) {
  const double lower = spec.mean_phase * latency_sync_df(n, h);
  return {lower, lower + latency_ed_df(n, h, mean_stop)};
}

/// Point model inside the envelope: each relay forwards at the later of its
/// phase offset and its decision time, so the per-hop delay is
/// n*E[max(phi, tau)] = n*(1 + E[tau^2])/2 for phi uniform on [0,1].
inline double cted_max_model(std::size_t n, std::size_t h, const MultihopSpec& spec,
                             double second_moment_stop) {
  if (spec.phase_model != PhaseModel::uniform01) {
    throw UnsupportedModelError("cted_max_model: only the uniform01 phase model is supported");
  }
  if (!(second_moment_stop >= 0.0 && second_moment_stop <= 1.0)) {
    throw std::domain_error("cted_max_model: second moment must lie in [0,1]");
  }
  return static_cast<double>(h) * static_cast<double>(n) * 0.5 * (1.0 + second_moment_stop);
}

/// Stopping-time draw from a sampled profile: inverse CDF of 1 - eps(t) with
/// the residual mass mapped to t = 1.
inline double sample_stop_fraction(const StoppingProfile& profile, double u) {
  const auto& eps = profile.eps_values;
  const auto& grid = profile.grid;
  const double target = 1.0 - u;  // find t with eps(t) = target
  if (target >= eps.front()) return grid.front();
  if (target < profile.residual_mass) return 1.0;
  // eps is non-increasing: first index where eps[j] <= target.
  const auto it = std::lower_bound(eps.begin(), eps.end(), target, std::greater<double>());
  const std::size_t j = static_cast<std::size_t>(it - eps.begin());
  if (j == 0) return grid.front();
  if (j >= eps.size()) return 1.0;
  const double span = eps[j - 1] - eps[j];
  const double frac = span > 0.0 ? (eps[j - 1] - target) / span : 1.0;
  return grid[j - 1] + frac * (grid[j] - grid[j - 1]);
}

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
};

/// Samples the max-model latency: per hop, phi ~ U[0,1] against a stopping
/// fraction drawn from the profile; accumulates sum of n*max(phi, tau).
inline MonteCarloEstimate cted_monte_carlo(std::size_t n, std::size_t h,
                                           const StoppingProfile& profile, std::uint64_t trials,
                                           std::uint64_t seed) {
  if (trials < 1000) throw std::domain_error("cted_monte_carlo: trials must be >= 1000");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    RngStream rng(seed, trial);
    double total = 0.0;
    for (std::size_t hop = 0; hop < h; ++hop) {
      const double phase = rng.uniform01();
      const double stop = sample_stop_fraction(profile, rng.uniform01());
      total += static_cast<double>(n) * std::max(phase, stop);
    }
    sum += total;
    sum_sq += total * total;
  }
  const double mean = sum / static_cast<double>(trials);
  const double var = std::max(0.0, sum_sq / static_cast<double>(trials) - mean * mean);
  return {mean, std::sqrt(var / static_cast<double>(trials)), trials};
}

/// Latency reduction in percent: 100 * (1 - cted / ctsd).
inline double reduction_percent(double ctsd, double cted) {
  if (!(ctsd > 0.0)) throw std::domain_error("reduction_percent: ctsd must be > 0");
  return 100.0 * (1.0 - cted / ctsd);
}

/// All multi-hop latency figures for one operating point.
struct LatencyReport {
  double l_sd = 0.0;
  double l_sd_df = 0.0;
  double l_ed_df_mean = 0.0;
  double l_ctsd = 0.0;
  double l_cted_lower = 0.0;
  double l_cted_upper = 0.0;
  double l_cted_model = 0.0;
  double reduction_lower_pct = 0.0;  // reduction reached at the lower envelope edge
  double reduction_upper_pct = 0.0;  // reduction reached at the upper envelope edge
  double reduction_model_pct = 0.0;
};

inline LatencyReport make_latency_report(std::size_t n, const MultihopSpec& spec,
                                         const StoppingProfile& profile) {
  LatencyReport report;
  report.l_sd = latency_sync(n);
  report.l_sd_df = latency_sync_df(n, spec.hops);
  report.l_ed_df_mean = latency_ed_df(n, spec.hops, profile.mean_stop);
  report.l_ctsd = latency_ctsd(n, spec.hops, spec);
  const auto [lower, upper] = cted_bounds(n, spec.hops, spec, profile.mean_stop);
  report.l_cted_lower = lower;
  report.l_cted_upper = upper;
  report.l_cted_model = cted_max_model(n, spec.hops, spec, profile.second_moment_stop);
  report.reduction_lower_pct = reduction_percent(report.l_ctsd, report.l_cted_lower);
  report.reduction_upper_pct = reduction_percent(report.l_ctsd, report.l_cted_upper);
  report.reduction_model_pct = reduction_percent(report.l_ctsd, report.l_cted_model);
  return report;
}

}  // namespace edlat
