#include "shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "birman_schwinger.hpp"
#include "error.hpp"
#include "parallel.hpp"

namespace halfline {

namespace {

struct State {
  complexd psi, dpsi;
};

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                 kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33,
                 kA63 = 46732.0 / 5247, kA64 = 49.0 / 176,
                 kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 35.0 / 384 - 5179.0 / 57600,
                 kE3 = 500.0 / 1113 - 7571.0 / 16695,
                 kE4 = 125.0 / 192 - 393.0 / 640,
                 kE5 = -2187.0 / 6784 + 92097.0 / 339200,
                 kE6 = 11.0 / 84 - 187.0 / 2100, kE7 = -1.0 / 40;
constexpr double kC2 = 1.0 / 5, kC3 = 3.0 / 10, kC4 = 4.0 / 5, kC5 = 8.0 / 9;

}  // namespace

WaveData integrate_inward(const PotentialFn& p, complexd lambda,
                          const ShootingConfig& cfg, bool from_left,
                          double x_end) {
  require_finite(lambda, "lambda");
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
    throw std::domain_error("shooting: tolerances must be > 0");
  if (from_left && p.domain() != Domain::kWholeLine)
    throw std::domain_error("shooting: left start needs a whole-line potential");
  if (!from_left && p.domain() == Domain::kHalfline && x_end < 0.0)
    throw std::domain_error("shooting: x_end must be >= 0 on the halfline");
  const complexd s = sqrt_mu(-lambda);
  const double radius = p.support_radius();
  const double x0 = from_left ? -radius : radius;
  if (from_left ? !(x_end >= x0) : !(x_end <= x0))
    throw std::domain_error("shooting: x_end outside the integration range");

  const complexd mu = -lambda;
  auto rhs = [&](double x, const State& y) {
    return State{y.dpsi, (p(x) + mu) * y.psi};
  };

  WaveData w;
  w.psi = 1.0;
  w.dpsi = from_left ? s : -s;
  w.log_scale = -s * radius;
  w.max_log_mod = w.log_scale.real();

  double x = x0;
  const double span = std::abs(x_end - x0);
  if (span == 0.0) return w;
  const double dir = from_left ? 1.0 : -1.0;
  double h = dir * std::min(span, 0.01 * span + 1e-4);
  State y{w.psi, w.dpsi};
  State k1 = rhs(x, y);
  long steps = 0;

  while (dir * (x_end - x) > 0.0) {
    if (++steps > 300000) throw NumericError("shooting: step budget exhausted");
    if (std::abs(h) < 4e-15 * (1.0 + std::abs(x)))
      throw NumericError("shooting: step size underflow");
    double hs = h;
    bool clipped = false;
    if (dir * (x + hs - x_end) >= 0.0) {
      hs = x_end - x;
      clipped = true;
    }

    auto stage = [&](std::initializer_list<std::pair<double, const State*>> terms) {
      State r = y;
      for (const auto& [a, st] : terms) {
        r.psi += hs * a * st->psi;
        r.dpsi += hs * a * st->dpsi;
      }
      return r;
    };
    const State k2 = rhs(x + kC2 * hs, stage({{kA21, &k1}}));
    const State k3 = rhs(x + kC3 * hs, stage({{kA31, &k1}, {kA32, &k2}}));
    const State k4 = rhs(x + kC4 * hs, stage({{kA41, &k1}, {kA42, &k2}, {kA43, &k3}}));
    const State k5 = rhs(x + kC5 * hs,
                         stage({{kA51, &k1}, {kA52, &k2}, {kA53, &k3}, {kA54, &k4}}));
    const State k6 = rhs(x + hs, stage({{kA61, &k1}, {kA62, &k2}, {kA63, &k3},
                                        {kA64, &k4}, {kA65, &k5}}));
    State ynew = stage({{kB1, &k1}, {kB3, &k3}, {kB4, &k4}, {kB5, &k5}, {kB6, &k6}});
    const State k7 = rhs(x + hs, ynew);

    const complexd err_psi =
        hs * (kE1 * k1.psi + kE3 * k3.psi + kE4 * k4.psi + kE5 * k5.psi +
              kE6 * k6.psi + kE7 * k7.psi);
    const complexd err_dpsi =
        hs * (kE1 * k1.dpsi + kE3 * k3.dpsi + kE4 * k4.dpsi + kE5 * k5.dpsi +
              kE6 * k6.dpsi + kE7 * k7.dpsi);
    const double sc_psi =
        cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y.psi), std::abs(ynew.psi));
    const double sc_dpsi =
        cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y.dpsi), std::abs(ynew.dpsi));
    const double err =
        std::max(std::abs(err_psi) / sc_psi, std::abs(err_dpsi) / sc_dpsi);

    if (err <= 1.0 || std::abs(hs) <= 1e-13 * (1.0 + std::abs(x))) {
      x = clipped ? x_end : x + hs;
      y = ynew;
      k1 = k7;  // first-same-as-last
      const double mag = std::max(std::abs(y.psi), std::abs(y.dpsi));
      if (mag > 1e100) {
        y.psi /= mag;
        y.dpsi /= mag;
        k1.psi /= mag;
        k1.dpsi /= mag;
        w.log_scale += std::log(mag);
      }
      if (y.psi != complexd(0.0))
        w.max_log_mod = std::max(
            w.max_log_mod, std::log(std::abs(y.psi)) + w.log_scale.real());
    }
    const double grow =
        err > 0.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
    h = hs * grow;
  }

  w.psi = y.psi;
  w.dpsi = y.dpsi;
  return w;
}

complexd miss(const PotentialFn& p, complexd lambda, const BoundaryCondition& bc,
              const ShootingConfig& cfg) {
  const complexd s = sqrt_mu(-lambda);
  if (bc.kind == BoundaryKind::kWholeLine) {
    if (p.domain() != Domain::kWholeLine)
      throw std::domain_error("miss: whole-line condition needs a whole-line potential");
    const WaveData r = integrate_inward(p, lambda, cfg, false, 0.0);
    const WaveData l = integrate_inward(p, lambda, cfg, true, 0.0);
    const complexd bracket = l.psi * r.dpsi - l.dpsi * r.psi;
    const complexd expo = l.log_scale + r.log_scale -
                          complexd(l.max_log_mod + r.max_log_mod, 0.0);
    return bracket * std::exp(expo) / (1.0 + 2.0 * std::abs(s));
  }
  if (p.domain() != Domain::kHalfline)
    throw std::domain_error("miss: halfline condition needs a halfline potential");
  const WaveData w = integrate_inward(p, lambda, cfg, false, 0.0);
  const complexd expo = w.log_scale - complexd(w.max_log_mod, 0.0);
  switch (bc.kind) {
    case BoundaryKind::kDirichlet:
      return w.psi * std::exp(expo);
    case BoundaryKind::kNeumann:
    case BoundaryKind::kRobin: {
      if (!(bc.sigma >= 0.0)) throw std::domain_error("robin: sigma must be >= 0");
      return (w.dpsi - bc.sigma * w.psi) * std::exp(expo) /
             (1.0 + std::abs(s) + bc.sigma);
    }
    default:
      throw std::domain_error("miss: unknown boundary kind");
  }
}

complexd wholeline_wronskian(const PotentialFn& p, complexd lambda,
                             const ShootingConfig& cfg, double x_eval) {
  if (p.domain() != Domain::kWholeLine)
    throw std::domain_error("wronskian: needs a whole-line potential");
  const WaveData r = integrate_inward(p, lambda, cfg, false, x_eval);
  const WaveData l = integrate_inward(p, lambda, cfg, true, x_eval);
  const complexd bracket = l.psi * r.dpsi - l.dpsi * r.psi;
  return bracket * std::exp(l.log_scale + r.log_scale);
}

std::vector<complexd> default_seed_grid(double v_norm) {
  require_finite(v_norm, "v_norm");
  if (!(v_norm > 0.0)) return {};
  std::vector<complexd> seeds;
  seeds.reserve(64);
  for (double scale : {0.01, 0.1, 1.0, 10.0}) {
    const double m = scale * v_norm * v_norm;
    for (int j = 0; j < 16; ++j) {
      const double phi = -kPi + 2.0 * kPi * (j + 0.5) / 16.0;
      seeds.push_back(-std::polar(m, phi));
    }
  }
  return seeds;
}

EigenSearch find_eigenvalues(const PotentialFn& p, const BoundaryCondition& bc,
                             const std::vector<complexd>& seeds,
                             const ShootingConfig& cfg) {
  if (!(cfg.newton_tol > 0.0) || cfg.max_newton < 1)
    throw std::domain_error("find_eigenvalues: bad newton configuration");
  const bool wants_whole = bc.kind == BoundaryKind::kWholeLine;
  if (wants_whole != (p.domain() == Domain::kWholeLine))
    throw std::domain_error("find_eigenvalues: boundary condition does not match the potential domain");

  enum class SeedState { kFailed, kConverged };
  std::vector<std::pair<SeedState, complexd>> slots(
      seeds.size(), {SeedState::kFailed, complexd(0.0)});

  parallel_for(seeds.size(), [&](std::size_t i) {
    complexd lam = seeds[i];
    for (int it = 0; it < cfg.max_newton; ++it) {
      if (!(std::isfinite(lam.real()) && std::isfinite(lam.imag()))) return;
      if (std::abs(lam) > 1e5) return;
      if (distance_to_nonnegative_axis(lam) < 1e-6 * (1.0 + std::abs(lam)))
        return;
      complexd f;
      try {
        f = miss(p, lam, bc, cfg);
      } catch (const NumericError&) {
        return;
      }
      if (std::abs(f) <= cfg.newton_tol) {
        slots[i] = {SeedState::kConverged, lam};
        return;
      }
      const double h = 1e-7 * (1.0 + std::abs(lam));
      complexd d;
      try {
        d = (miss(p, lam + h, bc, cfg) - miss(p, lam - h, bc, cfg)) / (2.0 * h);
      } catch (const NumericError&) {
        return;
      }
      if (!(std::abs(d) > 0.0) || !std::isfinite(std::abs(d))) return;
      complexd step = f / d;
      const double cap = 0.3 * (1.0 + std::abs(lam));
      if (std::abs(step) > cap) step *= cap / std::abs(step);
      lam -= step;
    }
  });

  EigenSearch out;
  for (const auto& [state, lam] : slots) {
    if (state != SeedState::kConverged) {
      ++out.failed_seeds;
      continue;
    }
    ++out.converged_seeds;
    bool dup = false;
    for (const complexd& r : out.roots)
      if (std::abs(r - lam) <= 1e-8 * (1.0 + std::abs(lam))) dup = true;
    if (!dup) out.roots.push_back(lam);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](complexd a, complexd b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

AuditReport enclosure_audit(const PotentialFn& p, const BoundaryCondition& bc,
                            const std::vector<complexd>& seeds,
                            const ShootingConfig& cfg, int certificate_nodes) {
  if (certificate_nodes < 2)
    throw std::domain_error("enclosure_audit: certificate_nodes must be >= 2");
  AuditReport rep;
  rep.v_norm = p.l1_norm();
  const EigenSearch search = find_eigenvalues(p, bc, seeds, cfg);
  rep.converged_seeds = search.converged_seeds;
  rep.failed_seeds = search.failed_seeds;
  rep.pass = true;
  if (search.roots.empty()) return rep;

  const SampledPotential sampled = sample_potential(p, certificate_nodes);
  rep.entries.resize(search.roots.size());
  parallel_for(search.roots.size(), [&](std::size_t i) {
    AuditEntry& e = rep.entries[i];
    e.lambda = search.roots[i];
    const Containment c = contains(SpectralPoint::from(e.lambda), rep.v_norm, bc);
    e.margin = c.margin;
    e.inside = c.inside;
    try {
      e.certificate = eigenvalue_certificate(sampled, e.lambda, bc);
    } catch (const NumericError&) {
      e.certificate = std::numeric_limits<double>::infinity();
    }
  });
  for (const AuditEntry& e : rep.entries)
    if (!(e.margin >= -1e-6) || !(e.certificate <= 1e-3)) rep.pass = false;
  return rep;
}

}  // namespace halfline
