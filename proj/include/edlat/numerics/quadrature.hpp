#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace edlat {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Thrown when the adaptive subdivision bottoms out before meeting the
/// requested tolerance; carries the best estimate reached so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_estimate(best) {}
  QuadratureResult best_estimate;
};

namespace detail {

inline constexpr int kMaxQuadratureDepth = 40;
inline constexpr double kAbsTolFloor = 1e-14;

template <typename F>
struct AdaptiveSimpson {
  F& f;
  double value = 0.0;
  double err = 0.0;
  std::size_t evaluations = 0;
  bool exhausted = false;

  double eval(double x) {
    ++evaluations;
    return f(x);
  }

  // Accepts a panel once the Richardson error estimate meets the local budget.
  void refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
              int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = (left + right) - whole;
    if (std::abs(delta) <= 15.0 * tol || depth >= kMaxQuadratureDepth || !(m > a && m < b)) {
      if (std::abs(delta) > 15.0 * tol) exhausted = true;
      value += left + right + delta / 15.0;
      err += std::abs(delta) / 15.0;
      return;
    }
    refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
    refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace detail

/// Adaptive-Simpson quadrature of f over [a, b], targeting
/// |value - true| <= rel_tol*|true| + 1e-14.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol) {
  if (!(a <= b)) throw std::domain_error("integrate: requires a <= b");
  if (!(rel_tol >= 1e-12)) throw std::domain_error("integrate: rel_tol must be >= 1e-12");

  detail::AdaptiveSimpson<F> state{f};
  if (a == b) {
    // Degenerate interval; still sample the integrand.
    (void)state.eval(a);
    (void)state.eval(a);
    (void)state.eval(a);
    return {0.0, 0.0, state.evaluations};
  }

  // A coarse composite pass fixes the absolute budget before adapting.
  constexpr int kBasePanels = 8;
  const double h = (b - a) / kBasePanels;
  double fx[2 * kBasePanels + 1];
  for (int i = 0; i <= 2 * kBasePanels; ++i) {
    fx[i] = state.eval(a + 0.5 * h * i);
  }
  double coarse = 0.0;
  for (int i = 0; i < kBasePanels; ++i) {
    coarse += h / 6.0 * (fx[2 * i] + 4.0 * fx[2 * i + 1] + fx[2 * i + 2]);
  }
  const double abs_tol = rel_tol * std::abs(coarse) + detail::kAbsTolFloor;

  for (int i = 0; i < kBasePanels; ++i) {
    const double pa = a + h * i;
    const double pb = pa + h;
    const double whole = h / 6.0 * (fx[2 * i] + 4.0 * fx[2 * i + 1] + fx[2 * i + 2]);
    state.refine(pa, pb, fx[2 * i], fx[2 * i + 1], fx[2 * i + 2], whole, abs_tol / kBasePanels, 0);
  }

  QuadratureResult result{state.value, state.err, state.evaluations};
  if (state.exhausted) {
    throw QuadratureError("integrate: max subdivision depth reached before tolerance", result);
  }
  return result;
}

}  // namespace edlat
