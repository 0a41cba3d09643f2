#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace edlat {

namespace detail {

// Acklam's rational approximation of the standard normal quantile,
// relative error below 1.15e-9 over the full open unit interval.
inline double norm_quantile_acklam(double p) {
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

inline double norm_pdf(double x) {
  constexpr double inv_sqrt_2pi = 0.3989422804014327;  // 1/sqrt(2*pi)
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

}  // namespace detail

/// Gaussian tail probability Q(x) = P[N(0,1) > x].
inline double q_func(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("q_func: argument must be finite");
  }
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

/// Inverse of q_func on the open unit interval: returns x with Q(x) = p.
///
/// Acklam's quantile approximation seeds Newton iterations carried out on
/// log Q(x), which stays well conditioned down to p near 1e-300.
inline double q_inv(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("q_inv: probability must lie strictly inside (0,1)");
  }
  // Q^{-1}(p) = -Phi^{-1}(p); small p maps to the accurate lower-tail branch.
  double x = -detail::norm_quantile_acklam(p);
  const double log_p = std::log(p);
  for (int it = 0; it < 4; ++it) {
    const double q = q_func(x);
    const double pdf = detail::norm_pdf(x);
    if (!(q > 0.0) || !(pdf > 0.0)) break;
    const double step = (std::log(q) - log_p) * (q / pdf);
    x += step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

}  // namespace edlat
