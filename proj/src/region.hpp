#pragma once

#include <vector>

#include "complex_util.hpp"

namespace halfline {

enum class BoundaryKind { kDirichlet, kNeumann, kRobin, kWholeLine };

struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::kDirichlet;
  double sigma = 0.0;  // Robin parameter, >= 0

  static BoundaryCondition dirichlet() { return {BoundaryKind::kDirichlet, 0.0}; }
  static BoundaryCondition neumann() { return {BoundaryKind::kNeumann, 0.0}; }
  static BoundaryCondition robin(double sigma);
  static BoundaryCondition whole_line() { return {BoundaryKind::kWholeLine, 0.0}; }
};

const char* boundary_name(BoundaryKind kind);

struct SpectralPoint {
  complexd lambda;
  double modulus = 0.0;
  double theta = 0.0;  // in (0, 2*pi)

  // Rejects lambda on [0, inf).
  static SpectralPoint from(complexd lambda);
};

// Radius of the enclosure disc at angle theta for a potential with
// integral norm v_norm:
//   Dirichlet:      (v g(cot(theta/2)) / 2)^2
//   Neumann/Robin:  v^2
//   whole line:     (v / 2)^2
double bound_radius(double theta, double v_norm, const BoundaryCondition& bc);

struct Containment {
  bool inside = false;
  double margin = 0.0;  // bound_radius - |lambda|, >= 0 when inside
};

Containment contains(const SpectralPoint& p, double v_norm, const BoundaryCondition& bc);

// Dirichlet boundary curve in units of (v/2)^2: radius4 = g(cot(theta/2))^2.
double curve_radius4(double theta);

struct CurvePoint {
  double theta = 0.0;
  double radius4 = 0.0;
  complexd z;  // radius4 * e^{i theta}
};

struct CurveSample {
  std::vector<CurvePoint> points;
  double wholeline_radius4 = 1.0;
};

// n interior points theta_k = 2 pi k / (n + 1), k = 1..n. n >= 2.
CurveSample curve_sample(int n);

// Gamma(gamma+1) / (sqrt(pi) Gamma(gamma+3/2)) *
//   ((gamma-1/2) / (gamma+1/2))^(gamma-1/2), for gamma > 1/2.
double keller_constant(double gamma);

struct CoshRatioSup {
  double sup = 0.0;
  double t_star = 0.0;
};

// sup_{t >= 0} (1/2) t^{gamma-1/2} / (1+t^2)^{(gamma+1/2)/2}, attained at
// t = sqrt(gamma - 1/2). Decreasing in gamma; tends to 1/2 as
// gamma -> 1/2 from above.
CoshRatioSup cosh_ratio_sup(double gamma);

}  // namespace halfline
