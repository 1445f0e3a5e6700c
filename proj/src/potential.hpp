#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "birman_schwinger.hpp"
#include "complex_util.hpp"

namespace halfline {

enum class Domain { kHalfline, kWholeLine };

// Complex potential with compact numerical support: |V| is negligible
// beyond support_radius (halfline: [0, R], whole line: [-R, R]).
class PotentialFn {
 public:
  using Eval = std::function<complexd(double)>;

  PotentialFn(Eval eval, double support_radius, Domain domain, std::string name);

  complexd operator()(double x) const;
  double support_radius() const;
  Domain domain() const;
  const std::string& name() const;

  // Adaptive quadrature of |V| over the support; cached.
  double l1_norm() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

struct RandomPotentialSpec {
  int n_bumps = 3;
  double amplitude_scale = 1.0;
  double support = 8.0;
  std::uint64_t seed = 0;
  Domain domain = Domain::kHalfline;
};

// Sum of complex Gaussian bumps with centers, widths, and amplitudes
// drawn deterministically from the seed.
PotentialFn random_potential(const RandomPotentialSpec& spec);

// -alpha (alpha + 1) / cosh^2(x) on the whole line; for Re alpha > 0 its
// eigenvalue closest to fitting a single bound state is lambda = -alpha^2.
PotentialFn sech2_potential(complexd alpha);

// c * (Gaussian of the given width centered at b); integrates to c as
// width -> 0 and approximates c delta(x - b).
PotentialFn mollified_delta(complexd c, double b, double width);

// Piecewise-linear interpolant of samples, zero outside the node range.
PotentialFn potential_from_samples(const SampledPotential& s, Domain domain);

// V(|x|) on the whole line.
PotentialFn even_extension(const PotentialFn& p);

// n uniform samples across the support with trapezoid weights.
SampledPotential sample_potential(const PotentialFn& p, int n);

}  // namespace halfline
