#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "edlat/detect/codebook.hpp"
#include "edlat/numerics/rng.hpp"

namespace edlat {

struct TrialOutcome {
  std::size_t true_message = 0;
  std::size_t decided_message = 0;
  double stop_fraction = 1.0;
  bool stopped_early = false;
  bool correct = false;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

inline constexpr std::size_t kStopHistogramBins = 20;

struct CampaignStats {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double empirical_bler = 0.0;
  double mean_stop_fraction = 0.0;
  double early_stop_share = 0.0;
  std::array<std::uint64_t, kStopHistogramBins> stop_histogram{};

  friend bool operator==(const CampaignStats&, const CampaignStats&) = default;
};

namespace detail {

/// Core sequential-detection trial run against an already-positioned stream.
inline TrialOutcome run_trial(const Codebook& cb, const ThresholdSet& th, std::size_t true_m,
                              std::size_t steps, RngStream& rng, double noise_scale) {
  if (steps < 10) throw std::domain_error("simulate_trial: steps must be >= 10");
  if (true_m >= cb.M) throw std::domain_error("simulate_trial: true message out of range");
  if (th.s_values.size() != cb.M) {
    throw std::domain_error("simulate_trial: one threshold per message required");
  }

  const double dt = 1.0 / static_cast<double>(steps);
  const double noise_sd = noise_scale * std::sqrt(dt);

  std::vector<double> accumulated(cb.n, 0.0);
  std::vector<double> post(cb.M);

  TrialOutcome outcome;
  outcome.true_message = true_m;

  for (std::size_t j = 1; j <= steps; ++j) {
    const double t = j == steps ? 1.0 : static_cast<double>(j) * dt;
    for (std::size_t i = 0; i < cb.n; ++i) {
      accumulated[i] += cb.word(true_m, i) * dt + noise_sd * rng.normal();
    }
    posterior_into(cb, accumulated, t, post);
    bool crossed = false;
    for (std::size_t m = 0; m < cb.M; ++m) {
      if (post[m] > th.s_values[m]) {
        crossed = true;
        break;
      }
    }
    if (crossed) {
      const auto best = std::max_element(post.begin(), post.end());
      outcome.decided_message = static_cast<std::size_t>(best - post.begin());
      outcome.stop_fraction = t;
      outcome.stopped_early = true;
      outcome.correct = outcome.decided_message == true_m;
      return outcome;
    }
  }

  // Threshold never reached: forced decision at the symbol end, ties to the
  // lowest message index.
  const auto best = std::max_element(post.begin(), post.end());
  outcome.decided_message = static_cast<std::size_t>(best - post.begin());
  outcome.stop_fraction = 1.0;
  outcome.stopped_early = false;
  outcome.correct = outcome.decided_message == true_m;
  return outcome;
}

struct TrialRecord {
  double stop_fraction;
  std::uint8_t stopped_early;
  std::uint8_t correct;
};

}  // namespace detail

/// One sequential-detection trial. The continuous observation is simulated by
/// its per-coordinate sufficient statistics: at each of `steps` increments the
/// accumulator gains drift x_i/steps plus N(0, 1/steps) noise, so the noise
/// variance per coordinate reaches 1 at the symbol end. The trial stops at the
/// first grid time where some posterior exceeds its threshold; otherwise the
/// decision falls back to the posterior argmax at t = 1.
inline TrialOutcome simulate_trial(const Codebook& cb, const ThresholdSet& th, std::size_t true_m,
                                   std::size_t steps, RngStreamSpec rng_spec,
                                   double noise_scale = 1.0) {
  RngStream rng(rng_spec);
  return detail::run_trial(cb, th, true_m, steps, rng, noise_scale);
}

/// Monte Carlo campaign over independent trials. Each trial owns stream
/// (seed, trial index) and draws its true message as the stream's first use,
/// so the outcome set is identical for any thread partitioning; the reduction
/// runs in index order. threads = 0 picks the hardware concurrency.
inline CampaignStats run_campaign(const Codebook& cb, const ThresholdSet& th, std::uint64_t trials,
                                  std::size_t steps, std::uint64_t seed, double noise_scale = 1.0,
                                  unsigned threads = 0) {
  if (trials < 1) throw std::domain_error("run_campaign: trials must be >= 1");
  if (steps < 10) throw std::domain_error("run_campaign: steps must be >= 10");
  if (th.s_values.size() != cb.M) {
    throw std::domain_error("run_campaign: one threshold per message required");
  }

  std::vector<detail::TrialRecord> records(trials);
  const auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      RngStream rng(seed, i);
      const std::size_t true_m = static_cast<std::size_t>(rng.uniform_below(cb.M));
      const TrialOutcome outcome = detail::run_trial(cb, th, true_m, steps, rng, noise_scale);
      records[i] = {outcome.stop_fraction, static_cast<std::uint8_t>(outcome.stopped_early),
                    static_cast<std::uint8_t>(outcome.correct)};
    }
  };

  const unsigned hw =
      threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  if (hw > 1 && trials > 1) {
    const std::uint64_t chunk = (trials + hw - 1) / hw;
    std::vector<std::thread> pool;
    for (std::uint64_t begin = 0; begin < trials; begin += chunk) {
      pool.emplace_back(worker, begin, std::min(begin + chunk, trials));
    }
    for (auto& t : pool) t.join();
  } else {
    worker(0, trials);
  }

  CampaignStats stats;
  stats.trials = trials;
  double stop_sum = 0.0;
  std::uint64_t early = 0;
  for (const auto& rec : records) {
    if (!rec.correct) ++stats.errors;
    if (rec.stopped_early) ++early;
    stop_sum += rec.stop_fraction;
    const auto bin = std::min<std::size_t>(
        static_cast<std::size_t>(rec.stop_fraction * kStopHistogramBins), kStopHistogramBins - 1);
    ++stats.stop_histogram[bin];
  }
  stats.empirical_bler = static_cast<double>(stats.errors) / static_cast<double>(trials);
  stats.mean_stop_fraction = stop_sum / static_cast<double>(trials);
  stats.early_stop_share = static_cast<double>(early) / static_cast<double>(trials);
  return stats;
}

}  // namespace edlat
