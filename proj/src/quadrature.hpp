#pragma once

#include <cmath>
#include <functional>

#include "error.hpp"

namespace halfline {

namespace detail {

inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw NumericError("adaptive_simpson: max depth reached");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson on [a, b]. tol is absolute. The interval is pre-split
// into panels so narrow features away from the midpoint are not missed.
inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-11, int panels = 64) {
  if (!(b >= a)) throw std::domain_error("integrate: b < a");
  if (a == b) return 0.0;
  double total = 0.0;
  const double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double x0 = a + k * h, x1 = (k + 1 == panels) ? b : a + (k + 1) * h;
    const double xm = 0.5 * (x0 + x1);
    const double f0 = f(x0), fm = f(xm), f1 = f(x1);
    const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    total += detail::adaptive_simpson_rec(f, x0, x1, f0, fm, f1, whole,
                                          tol / panels, 48);
  }
  return total;
}

}  // namespace halfline
