#include "potential.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "quadrature.hpp"
#include "rng.hpp"

namespace halfline {

struct PotentialFn::Impl {
  Eval eval;
  double support_radius;
  Domain domain;
  std::string name;
  mutable std::once_flag norm_once;
  mutable double norm = 0.0;
};

PotentialFn::PotentialFn(Eval eval, double support_radius, Domain domain,
                         std::string name)
    : impl_(std::make_shared<Impl>()) {
  require_finite(support_radius, "support_radius");
  if (!(support_radius > 0.0))
    throw std::domain_error("potential: support_radius must be > 0");
  if (!eval) throw std::domain_error("potential: missing evaluator");
  impl_->eval = std::move(eval);
  impl_->support_radius = support_radius;
  impl_->domain = domain;
  impl_->name = std::move(name);
}

complexd PotentialFn::operator()(double x) const { return impl_->eval(x); }

double PotentialFn::support_radius() const { return impl_->support_radius; }

Domain PotentialFn::domain() const { return impl_->domain; }

const std::string& PotentialFn::name() const { return impl_->name; }

double PotentialFn::l1_norm() const {
  std::call_once(impl_->norm_once, [this] {
    const double r = impl_->support_radius;
    const double lo = impl_->domain == Domain::kHalfline ? 0.0 : -r;
    impl_->norm = integrate([this](double x) { return std::abs(impl_->eval(x)); },
                            lo, r, 1e-10, 128);
  });
  return impl_->norm;
}

PotentialFn random_potential(const RandomPotentialSpec& spec) {
  if (spec.n_bumps < 0) throw std::domain_error("random_potential: n_bumps must be >= 0");
  require_finite(spec.amplitude_scale, "amplitude_scale");
  require_finite(spec.support, "support");
  if (!(spec.support > 0.0)) throw std::domain_error("random_potential: support must be > 0");
  if (!(spec.amplitude_scale >= 0.0))
    throw std::domain_error("random_potential: amplitude_scale must be >= 0");

  DetRng rng(spec.seed);
  struct Bump { double center, width; complexd amp; };
  std::vector<Bump> bumps(spec.n_bumps);
  const double r = spec.support;
  const double lo = spec.domain == Domain::kHalfline ? 0.12 * r : -0.72 * r;
  const double hi = spec.domain == Domain::kHalfline ? 0.85 * r : 0.72 * r;
  for (Bump& b : bumps) {
    b.center = rng.uniform(lo, hi);
    b.width = rng.uniform(0.04 * r, 0.12 * r);
    b.amp = complexd(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) *
            spec.amplitude_scale;
  }
  auto eval = [bumps](double x) {
    complexd acc = 0.0;
    for (const Bump& b : bumps) {
      const double t = (x - b.center) / b.width;
      acc += b.amp * std::exp(-0.5 * t * t);
    }
    return acc;
  };
  return PotentialFn(eval, r, spec.domain,
                     "gaussian-bumps[" + std::to_string(spec.seed) + "]");
}

PotentialFn sech2_potential(complexd alpha) {
  require_finite(alpha, "alpha");
  const complexd strength = -alpha * (alpha + 1.0);
  auto eval = [strength](double x) {
    const double c = std::cosh(x);
    return strength / (c * c);
  };
  return PotentialFn(eval, 17.5, Domain::kWholeLine, "sech2");
}

PotentialFn mollified_delta(complexd c, double b, double width) {
  require_finite(c, "c");
  require_finite(b, "b");
  require_finite(width, "width");
  if (!(b >= 0.0)) throw std::domain_error("mollified_delta: b must be >= 0");
  if (!(width > 0.0)) throw std::domain_error("mollified_delta: width must be > 0");
  const double norm = 1.0 / (width * std::sqrt(2.0 * kPi));
  auto eval = [c, b, width, norm](double x) {
    const double t = (x - b) / width;
    return t * t > 1400.0 ? complexd(0.0) : c * norm * std::exp(-0.5 * t * t);
  };
  return PotentialFn(eval, b + 12.0 * width, Domain::kHalfline, "mollified-delta");
}

PotentialFn potential_from_samples(const SampledPotential& s, Domain domain) {
  s.validate(domain == Domain::kWholeLine);
  auto nodes = std::make_shared<std::vector<double>>(s.nodes);
  auto values = std::make_shared<std::vector<complexd>>(s.values);
  auto eval = [nodes, values](double x) -> complexd {
    const std::vector<double>& xs = *nodes;
    if (x <= xs.front() || x >= xs.back()) {
      if (x == xs.front()) return values->front();
      if (x == xs.back()) return values->back();
      return 0.0;
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return (*values)[j - 1] * (1.0 - t) + (*values)[j] * t;
  };
  const double radius = std::max(std::abs(s.nodes.front()), std::abs(s.nodes.back()));
  return PotentialFn(eval, radius, domain, "sampled");
}

PotentialFn even_extension(const PotentialFn& p) {
  PotentialFn inner = p;
  auto eval = [inner](double x) { return inner(std::abs(x)); };
  return PotentialFn(eval, p.support_radius(), Domain::kWholeLine,
                     p.name() + "-even");
}

SampledPotential sample_potential(const PotentialFn& p, int n) {
  if (n < 2) throw std::domain_error("sample_potential: need n >= 2");
  const double r = p.support_radius();
  const double lo = p.domain() == Domain::kHalfline ? 0.0 : -r;
  return SampledPotential::uniform(lo, r, n, [&p](double x) { return p(x); });
}

}  // namespace halfline
