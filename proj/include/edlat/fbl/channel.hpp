#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "edlat/errors.hpp"
#include "edlat/numerics/qfunc.hpp"

namespace edlat {

/// AWGN link budget. gamma is the linear SNR (signal power times the
/// normalized symbol duration); the symbol duration itself is 1.
struct ChannelSpec {
  double snr_db = 0.0;
  double gamma = 1.0;
  double symbol_duration = 1.0;

  static ChannelSpec from_snr_db(double db) {
    return ChannelSpec{db, std::pow(10.0, db / 10.0), 1.0};
  }
};

/// One block code operating point. k_bits is real-valued so rate sweeps can
/// report fractional information blocksizes.
struct CodeSpec {
  std::size_t n = 1;
  double k_bits = 0.0;
  double rate = 0.0;
  double target_eps = 0.5;

  static CodeSpec with_rate(std::size_t n, double rate, double target_eps) {
    validate(n, rate, target_eps);
    return CodeSpec{n, rate * static_cast<double>(n), rate, target_eps};
  }

  static CodeSpec with_bits(std::size_t n, double k_bits, double target_eps) {
    const double rate = k_bits / static_cast<double>(n);
    validate(n, rate, target_eps);
    return CodeSpec{n, k_bits, rate, target_eps};
  }

 private:
  static void validate(std::size_t n, double rate, double eps) {
    if (n < 1) throw std::domain_error("CodeSpec: blocklength must be >= 1");
    if (!(rate >= 0.0)) throw std::domain_error("CodeSpec: rate must be >= 0");
    if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("CodeSpec: target_eps must lie in (0,1)");
  }
};

/// Shannon capacity in bits per channel use after observing the given
/// fraction of the symbol: 0.5*log2(1 + gamma*t).
inline double capacity(const ChannelSpec& channel, double time_fraction = 1.0) {
  if (!(channel.gamma > 0.0)) throw std::domain_error("capacity: gamma must be > 0");
  if (!(time_fraction >= 0.0 && time_fraction <= 1.0)) {
    throw std::domain_error("capacity: time_fraction must lie in [0,1]");
  }
  return 0.5 * std::log2(1.0 + channel.gamma * time_fraction);
}

/// Channel dispersion (squared bits per channel use) at a partial
/// observation: with s = gamma*t, (s/2)*(s+2)/(s+1)^2 * log2(e)^2.
inline double dispersion(const ChannelSpec& channel, double time_fraction = 1.0) {
  if (!(channel.gamma > 0.0)) throw std::domain_error("dispersion: gamma must be > 0");
  if (!(time_fraction >= 0.0 && time_fraction <= 1.0)) {
    throw std::domain_error("dispersion: time_fraction must lie in [0,1]");
  }
  const double s = channel.gamma * time_fraction;
  const double log2e = std::numbers::log2e;
  return 0.5 * s * (s + 2.0) / ((s + 1.0) * (s + 1.0)) * log2e * log2e;
}

/// Normal-approximation achievable rate C - sqrt(V/n)*Qinv(eps) + log2(n)/(2n).
/// May be negative for short blocks; the caller decides feasibility.
inline double achievable_rate(const ChannelSpec& channel, std::size_t n, double eps) {
  if (n < 1) throw std::domain_error("achievable_rate: n must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("achievable_rate: eps must lie in (0,1)");
  const double nn = static_cast<double>(n);
  const double c = capacity(channel);
  const double v = dispersion(channel);
  return c - std::sqrt(v / nn) * q_inv(eps) + 0.5 * std::log2(nn) / nn;
}

/// Closed-form blocklength estimate (Qinv(eps)/(C-R))^2 * V, solved by a short
/// fixed-point pass on R = k_bits/n. Approximate; see min_blocklength for the
/// exact search.
inline double blocklength_estimate(const ChannelSpec& channel, double eps, double k_bits) {
  if (!(k_bits > 0.0)) throw std::domain_error("blocklength_estimate: k_bits must be > 0");
  const double c = capacity(channel);
  const double v = dispersion(channel);
  const double qi = q_inv(eps);
  double n = k_bits / c * 1.5 + 10.0;
  for (int it = 0; it < 16; ++it) {
    const double gap = std::max(c - k_bits / n, 1e-3 * c);
    n = (qi / gap) * (qi / gap) * v;
    n = std::max(n, k_bits / c);
  }
  return n;
}

inline constexpr std::size_t kDefaultBlocklengthCap = 10'000'000;

/// Smallest n with n*achievable_rate(n, eps) >= k_bits.
///
/// The scan starts at a provable lower bound (n*rate never exceeds
/// n*C + 0.5*log2(n)) and walks up, so the returned n is the exact argmin:
/// n meets the rate inequality and n-1 does not. The comparison carries a
/// 1e-12 relative slack so targets quoted with ~15 significant digits still
/// land on the intended boundary blocklength.
inline std::size_t min_blocklength(const ChannelSpec& channel, double eps, double k_bits,
                                   std::size_t max_n = kDefaultBlocklengthCap) {
  if (!(k_bits > 0.0)) throw std::domain_error("min_blocklength: k_bits must be > 0");
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("min_blocklength: eps must lie in (0,1)");
  const double c = capacity(channel);
  const double v = dispersion(channel);
  const double qi = q_inv(eps);
  const auto achievable_bits = [&](std::size_t n) {
    const double nn = static_cast<double>(n);
    return nn * c - std::sqrt(nn * v) * qi + 0.5 * std::log2(nn);
  };
  const double target = k_bits * (1.0 - 1e-12);
  const double log_cap = 0.5 * std::log2(static_cast<double>(max_n));
  const double lower = std::floor((k_bits - log_cap) / c);
  std::size_t n = lower > 1.0 ? static_cast<std::size_t>(lower) : 1;
  for (; n <= max_n; ++n) {
    if (achievable_bits(n) >= target) return n;
  }
  throw InfeasibleError("min_blocklength: no feasible blocklength below cap " +
                        std::to_string(max_n));
}

namespace detail {
// Below this fraction the block-error profile is pinned to its limit value 1.
inline constexpr double kTimeFractionFloor = 1e-9;
}  // namespace detail

/// Block-error probability when the decision is forced after observing a
/// fraction t of the symbol: Q((C(t) - R + log2(n)/(2n)) / sqrt(V(t)/n)).
/// Defined as 1 at t = 0.
inline double bler_at(const ChannelSpec& channel, const CodeSpec& code, double time_fraction) {
  if (!(time_fraction >= 0.0 && time_fraction <= 1.0)) {
    throw std::domain_error("bler_at: time_fraction must lie in [0,1]");
  }
  if (time_fraction <= detail::kTimeFractionFloor) return 1.0;
  const double nn = static_cast<double>(code.n);
  const double c = capacity(channel, time_fraction);
  const double v = dispersion(channel, time_fraction);
  const double arg = (c - code.rate + 0.5 * std::log2(nn) / nn) / std::sqrt(v / nn);
  return q_func(arg);
}

}  // namespace edlat
