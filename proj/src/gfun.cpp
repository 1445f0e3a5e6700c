#include "gfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "complex_util.hpp"

namespace halfline {

namespace {

// Squared objective 1 - 2 e^{-y} cos(a y) + e^{-2y}; cheaper to search.
inline double objective_sq(double a, double y) {
  const double e = std::exp(-y);
  return 1.0 - 2.0 * e * std::cos(a * y) + e * e;
}

constexpr int kScanPoints = 4096;
constexpr double kInvGolden = 0.61803398874989484820;

}  // namespace

double g_objective(double a, double y) {
  require_finite(a, "a");
  if (!(y >= 0.0)) throw std::domain_error("g_objective: y must be >= 0");
  const double v = objective_sq(a, y);
  return std::sqrt(v > 0.0 ? v : 0.0);
}

GFunResult g(double a) {
  require_finite(a, "a");
  GFunResult res;
  res.a = a;
  if (a == 0.0) {
    res.value = 1.0;
    res.attained = false;
    return res;
  }
  const double aa = std::abs(a);

  // Any maximizer has phase t = |a| y in (pi/3, pi]. Scan that bracket on
  // a fixed grid; on ties keep the later point so that a numerically flat
  // objective (tiny a, e^{-y} underflows) still reports a phase in range.
  const double t_lo = kPi / 3.0, t_hi = kPi;
  const double step = (t_hi - t_lo) / kScanPoints;
  double best = -1.0;
  int best_k = 0;
  for (int k = 0; k <= kScanPoints; ++k) {
    const double v = objective_sq(a, (t_lo + step * k) / aa);
    if (v >= best) {
      best = v;
      best_k = k;
    }
  }

  // Golden-section refinement, clamped to the winning cell and its
  // neighbors so it can never leave the bracket.
  double lo = (t_lo + step * (best_k > 0 ? best_k - 1 : 0)) / aa;
  double hi = (t_lo + step * (best_k < kScanPoints ? best_k + 1 : kScanPoints)) / aa;
  const double width_floor =
      1e-14 + 8.0 * std::numeric_limits<double>::epsilon() * hi;
  double x1 = hi - kInvGolden * (hi - lo);
  double x2 = lo + kInvGolden * (hi - lo);
  double f1 = objective_sq(a, x1);
  double f2 = objective_sq(a, x2);
  while (hi - lo > width_floor) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvGolden * (hi - lo);
      f2 = objective_sq(a, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvGolden * (hi - lo);
      f1 = objective_sq(a, x1);
    }
  }
  double y0 = 0.5 * (lo + hi);
  double v0 = objective_sq(a, y0);
  if (best > v0) {
    y0 = (t_lo + step * best_k) / aa;
    v0 = best;
  }
  res.value = std::sqrt(v0);
  // The sup is strictly below 2; keep that when e^{-pi/|a|} rounds to 1.
  if (res.value >= 2.0) res.value = std::nextafter(2.0, 0.0);
  res.argmax = y0;
  res.attained = true;
  return res;
}

GEnvelopes g_envelopes(double a) {
  require_finite(a, "a");
  if (!(a > 0.0)) throw std::domain_error("g_envelopes: a must be > 0");
  GEnvelopes env;
  env.lower = 1.0 + std::exp(-kPi / a);
  env.upper = 1.0 + std::exp(-kPi / (3.0 * a));
  return env;
}

}  // namespace halfline
