#include "region.hpp"

#include <cmath>
#include <stdexcept>

#include "gfun.hpp"
#include "parallel.hpp"

namespace halfline {

namespace {

// Lanczos approximation, g = 7, n = 9; relative error below 1e-13 on the
// arguments used here (all > 1).
double gamma_fn(double x) {
  static const double coef[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection; not hit by keller_constant (arguments exceed 1).
    return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
  }
  x -= 1.0;
  double acc = coef[0];
  for (int i = 1; i < 9; ++i) acc += coef[i] / (x + i);
  const double t = x + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

double validated_theta(double theta) {
  require_finite(theta, "theta");
  if (!(theta > 0.0 && theta < 2.0 * kPi))
    throw std::domain_error("theta must lie in (0, 2*pi)");
  return theta;
}

}  // namespace

BoundaryCondition BoundaryCondition::robin(double sigma) {
  require_finite(sigma, "sigma");
  if (!(sigma >= 0.0)) throw std::domain_error("robin: sigma must be >= 0");
  return {BoundaryKind::kRobin, sigma};
}

const char* boundary_name(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::kDirichlet: return "dirichlet";
    case BoundaryKind::kNeumann: return "neumann";
    case BoundaryKind::kRobin: return "robin";
    case BoundaryKind::kWholeLine: return "whole-line";
  }
  return "?";
}

SpectralPoint SpectralPoint::from(complexd lambda) {
  require_finite(lambda, "lambda");
  SpectralPoint p;
  p.lambda = lambda;
  p.modulus = std::abs(lambda);
  p.theta = polar_angle(lambda);
  return p;
}

double bound_radius(double theta, double v_norm, const BoundaryCondition& bc) {
  validated_theta(theta);
  require_finite(v_norm, "v_norm");
  if (!(v_norm >= 0.0)) throw std::domain_error("v_norm must be >= 0");
  switch (bc.kind) {
    case BoundaryKind::kDirichlet: {
      const double a = std::cos(0.5 * theta) / std::sin(0.5 * theta);
      const double r = 0.5 * v_norm * g(a).value;
      return r * r;
    }
    case BoundaryKind::kNeumann:
    case BoundaryKind::kRobin:
      if (bc.kind == BoundaryKind::kRobin && !(bc.sigma >= 0.0))
        throw std::domain_error("robin: sigma must be >= 0");
      return v_norm * v_norm;
    case BoundaryKind::kWholeLine: {
      const double r = 0.5 * v_norm;
      return r * r;
    }
  }
  throw std::domain_error("bound_radius: unknown boundary kind");
}

Containment contains(const SpectralPoint& p, double v_norm, const BoundaryCondition& bc) {
  Containment c;
  c.margin = bound_radius(p.theta, v_norm, bc) - p.modulus;
  c.inside = c.margin >= 0.0;
  return c;
}

double curve_radius4(double theta) {
  validated_theta(theta);
  const double a = std::cos(0.5 * theta) / std::sin(0.5 * theta);
  const double gv = g(a).value;
  return gv * gv;
}

CurveSample curve_sample(int n) {
  if (n < 2) throw std::domain_error("curve_sample: n must be >= 2");
  CurveSample s;
  s.points.resize(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const double theta = 2.0 * kPi * static_cast<double>(i + 1) / (n + 1);
    CurvePoint& pt = s.points[i];
    pt.theta = theta;
    pt.radius4 = curve_radius4(theta);
    pt.z = pt.radius4 * complexd(std::cos(theta), std::sin(theta));
  });
  s.wholeline_radius4 = 1.0;
  return s;
}

double keller_constant(double gamma) {
  require_finite(gamma, "gamma");
  if (!(gamma > 0.5)) throw std::domain_error("keller_constant: gamma must be > 1/2");
  const double ratio = gamma_fn(gamma + 1.0) / (std::sqrt(kPi) * gamma_fn(gamma + 1.5));
  const double x = gamma - 0.5;
  return ratio * std::pow(x / (gamma + 0.5), x);
}

CoshRatioSup cosh_ratio_sup(double gamma) {
  require_finite(gamma, "gamma");
  if (!(gamma > 0.5)) throw std::domain_error("cosh_ratio_sup: gamma must be > 1/2");
  CoshRatioSup r;
  r.t_star = std::sqrt(gamma - 0.5);
  r.sup = 0.5 * std::pow(r.t_star, gamma - 0.5) *
          std::pow(1.0 + r.t_star * r.t_star, -0.5 * (gamma + 0.5));
  return r;
}

}  // namespace halfline
