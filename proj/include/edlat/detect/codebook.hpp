#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "edlat/errors.hpp"
#include "edlat/numerics/hadamard.hpp"
#include "edlat/numerics/qfunc.hpp"

namespace edlat {

// Two-sided noise spectral density; makes the per-coordinate noise variance
// over a full symbol equal to 1, matching the unit-variance discrete channel.
inline constexpr double kNoiseSpectralDensity = 2.0;

/// Orthogonal signaling codebook: the first M rows of a Sylvester-Hadamard
/// matrix scaled to amplitude sqrt(gamma). Rows meet the power constraint
/// with equality and pairwise squared distances grow linearly in time.
struct Codebook {
  std::size_t M = 0;
  std::size_t n = 0;
  double gamma = 0.0;
  double amplitude = 0.0;
  std::vector<double> words;  // M x n, row major

  double word(std::size_t m, std::size_t i) const { return words[m * n + i]; }
  std::span<const double> row(std::size_t m) const { return {words.data() + m * n, n}; }
  double row_energy() const { return static_cast<double>(n) * gamma; }
};

inline Codebook build_codebook(std::size_t M, std::size_t n, double gamma) {
  if (n == 0 || (n & (n - 1)) != 0) {
    throw ConfigError("build_codebook: blocklength must be a power of two");
  }
  if (M < 2 || M > n) {
    throw ConfigError("build_codebook: message count must satisfy 2 <= M <= n");
  }
  if (!(gamma > 0.0)) {
    throw ConfigError("build_codebook: gamma must be > 0");
  }
  int order = 0;
  while ((std::size_t{1} << order) < n) ++order;
  const HadamardMatrix h = sylvester_hadamard(order);

  Codebook cb;
  cb.M = M;
  cb.n = n;
  cb.gamma = gamma;
  cb.amplitude = std::sqrt(gamma);
  cb.words.resize(M * n);
  for (std::size_t m = 0; m < M; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      cb.words[m * n + i] = cb.amplitude * h(m, i);
    }
  }
  return cb;
}

/// Squared distance between two codewords accumulated up to time fraction t.
/// Linear in t by the orthogonal construction.
inline double pairwise_distance_sq(const Codebook& cb, std::size_t m, std::size_t m2, double t) {
  if (m >= cb.M || m2 >= cb.M) throw std::domain_error("pairwise_distance_sq: index out of range");
  if (m == m2) throw std::domain_error("pairwise_distance_sq: codewords must differ");
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("pairwise_distance_sq: t must lie in [0,1]");
  double full = 0.0;
  for (std::size_t i = 0; i < cb.n; ++i) {
    const double d = cb.word(m, i) - cb.word(m2, i);
    full += d * d;
  }
  return t * full;
}

/// Per-message posterior stopping thresholds.
struct ThresholdSet {
  std::vector<double> s_values;
};

namespace detail {

inline ThresholdSet thresholds_impl(const Codebook& cb, double leading_factor) {
  ThresholdSet set;
  set.s_values.resize(cb.M);
  for (std::size_t m = 0; m < cb.M; ++m) {
    double sum = 0.0;
    for (std::size_t m2 = 0; m2 < cb.M; ++m2) {
      if (m2 == m) continue;
      const double d_sq = pairwise_distance_sq(cb, m, m2, 1.0);
      sum += q_func(std::sqrt(d_sq / (2.0 * kNoiseSpectralDensity)));
    }
    set.s_values[m] = 1.0 / (1.0 + leading_factor * sum);
  }
  return set;
}

}  // namespace detail

/// Binary SPRT guideline thresholds:
/// S_m = 1 / (1 + M * sum_{m' != m} Q(sqrt(d^2_{mm'} / (2 N0)))).
inline ThresholdSet thresholds(const Codebook& cb) {
  return detail::thresholds_impl(cb, static_cast<double>(cb.M));
}

/// Error-budget thresholds: S_m = 1 / (1 + sum_{m' != m} Q(...)).
///
/// The posterior of the decided message at the stopping time is itself the
/// conditional success probability, so stopping above S_m caps the sequential
/// error near 1 - S_m; this calibration sets that cap to the pairwise union
/// bound. Campaigns targeting a block-error budget use these.
inline ThresholdSet thresholds_union_budget(const Codebook& cb) {
  return detail::thresholds_impl(cb, 1.0);
}

/// Posterior over messages given the integrated observation at fraction t,
/// assuming equiprobable messages. Stable softmax of the correlation scores
/// (2/N0) * (<accumulated, x_m> - t * |x_m|^2 / 2).
inline void posterior_into(const Codebook& cb, std::span<const double> accumulated, double t,
                           std::span<double> out) {
  if (accumulated.size() != cb.n) {
    throw std::domain_error("posterior: accumulated observation must have n coordinates");
  }
  if (out.size() != cb.M) throw std::domain_error("posterior: output must have M entries");
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("posterior: t must lie in [0,1]");

  double max_score = -1e300;
  for (std::size_t m = 0; m < cb.M; ++m) {
    double dot = 0.0;
    const double* w = cb.words.data() + m * cb.n;
    for (std::size_t i = 0; i < cb.n; ++i) dot += accumulated[i] * w[i];
    const double score = (2.0 / kNoiseSpectralDensity) * (dot - 0.5 * t * cb.row_energy());
    out[m] = score;
    max_score = std::max(max_score, score);
  }
  double norm = 0.0;
  for (std::size_t m = 0; m < cb.M; ++m) {
    out[m] = std::exp(out[m] - max_score);
    norm += out[m];
  }
  for (std::size_t m = 0; m < cb.M; ++m) out[m] /= norm;
}

inline std::vector<double> posterior(const Codebook& cb, std::span<const double> accumulated,
                                     double t) {
  std::vector<double> out(cb.M);
  posterior_into(cb, accumulated, t, out);
  return out;
}

}  // namespace edlat
