#pragma once

#include <optional>

namespace halfline {

struct GFunResult {
  double a = 0.0;
  double value = 1.0;            // the sup, always in [1, 2)
  std::optional<double> argmax;  // maximizing y when the sup is attained
  bool attained = false;
};

// |e^{iay} - e^{-y}| for y >= 0.
double g_objective(double a, double y);

// g(a) = sup_{y >= 0} |e^{iay} - e^{-y}|. Even in a. For a = 0 the sup
// equals 1 and is only approached as y -> infinity, so argmax is empty.
// For a != 0 the maximizer satisfies pi/3 < |a| * y <= pi.
GFunResult g(double a);

struct GEnvelopes {
  double lower = 1.0;
  double upper = 2.0;
};

// 1 + e^{-pi/a} <= g(a) <= 1 + e^{-pi/(3a)}, for a > 0.
GEnvelopes g_envelopes(double a);

}  // namespace halfline
