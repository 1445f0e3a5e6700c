#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "birman_schwinger.hpp"
#include "delta.hpp"
#include "doctest.h"
#include "potential.hpp"
#include "region.hpp"
#include "shooting.hpp"

using halfline::BoundaryCondition;
using halfline::complexd;
using halfline::Domain;
using halfline::EigenSearch;
using halfline::find_eigenvalues;
using halfline::miss;
using halfline::PotentialFn;
using halfline::ShootingConfig;

namespace {

const ShootingConfig kCfg{};

std::vector<complexd> coarse_seeds(double v_norm) {
  std::vector<complexd> seeds;
  for (double scale : {0.05, 0.4, 1.5}) {
    for (double ang : {0.6, 2.2, 3.9, 5.6}) {
      seeds.push_back(std::polar(scale * v_norm * v_norm, ang - halfline::kPi));
    }
  }
  return seeds;
}

}  // namespace

TEST_SUITE_BEGIN("shooting");

TEST_CASE("sech2 potentials hit the closed-form eigenvalue") {
  const complexd alphas[] = {complexd(0.5, 0.0), complexd(1.0, 0.0),
                             complexd(0.7, 0.4)};
  for (const complexd& alpha : alphas) {
    const PotentialFn p = halfline::sech2_potential(alpha);
    const complexd lambda = -alpha * alpha;
    const complexd m = miss(p, lambda, BoundaryCondition::whole_line(), kCfg);
    CHECK(std::abs(m) <= 1e-6);
  }
}

TEST_CASE("newton recovers the eigenvalue from a perturbed seed") {
  const PotentialFn p = halfline::sech2_potential(complexd(1.0, 0.0));
  const EigenSearch search =
      find_eigenvalues(p, BoundaryCondition::whole_line(),
                       {complexd(-1.05, 0.03)}, kCfg);
  REQUIRE(search.roots.size() == 1);
  CHECK(search.converged_seeds == 1);
  CHECK(search.failed_seeds == 0);
  CHECK(std::abs(search.roots[0] - complexd(-1.0, 0.0)) <= 1e-8);
}

TEST_CASE("a repulsive potential has no eigenvalues") {
  // positive real V: the operator is self-adjoint and nonnegative
  const halfline::SampledPotential s = halfline::SampledPotential::uniform(
      0.0, 6.0, 240,
      [](double x) { return complexd(2.0 * std::exp(-(x - 2.0) * (x - 2.0)), 0.0); });
  const PotentialFn p = halfline::potential_from_samples(s, Domain::kHalfline);
  const EigenSearch search = find_eigenvalues(
      p, BoundaryCondition::dirichlet(), coarse_seeds(p.l1_norm()), kCfg);
  CHECK(search.roots.empty());
}

TEST_CASE("wronskian of the two inward solutions is constant") {
  const PotentialFn p = halfline::random_potential({2, 1.1, 6.0, 11, Domain::kWholeLine});
  const complexd lambda(-1.3, 0.4);
  const complexd w0 = halfline::wholeline_wronskian(p, lambda, kCfg, 0.0);
  for (double x : {-2.0, -0.5, 0.7, 2.4}) {
    const complexd w = halfline::wholeline_wronskian(p, lambda, kCfg, x);
    CHECK(std::abs(w - w0) <= 1e-8 * (1.0 + std::abs(w0)));
  }
}

TEST_CASE("mollified extremal delta keeps its eigenvalue near the target") {
  const auto target = halfline::extremal_delta(1.0, halfline::kPi / 2.0);
  const PotentialFn p =
      halfline::mollified_delta(target.delta.c, target.delta.b, 0.02);
  const EigenSearch search = find_eigenvalues(
      p, BoundaryCondition::dirichlet(), {target.lambda}, kCfg);
  REQUIRE(search.roots.size() == 1);
  CHECK(std::abs(search.roots[0] - target.lambda) <= 5e-3);
  // the mollified potential is admissible, so its eigenvalue obeys the bound
  const auto point = halfline::SpectralPoint::from(search.roots[0]);
  const auto hold = halfline::contains(point, p.l1_norm(),
                                       BoundaryCondition::dirichlet());
  CHECK(hold.margin >= -1e-9);
}

TEST_CASE("dirichlet eigenvalues survive even extension to the whole line") {
  int matched = 0;
  for (int variant = 0; variant < 10; ++variant) {
    halfline::RandomPotentialSpec spec;
    spec.n_bumps = 2;
    spec.amplitude_scale = 1.6;
    spec.support = 5.0;
    spec.seed = 300 + static_cast<std::uint64_t>(variant);
    spec.domain = Domain::kHalfline;
    const PotentialFn p = halfline::random_potential(spec);
    const EigenSearch search = find_eigenvalues(
        p, BoundaryCondition::dirichlet(), coarse_seeds(p.l1_norm()), kCfg);
    const PotentialFn even = halfline::even_extension(p);
    for (const complexd& root : search.roots) {
      // an odd reflection of the halfline eigenfunction solves the
      // whole-line problem at the same energy
      const EigenSearch wl = find_eigenvalues(
          even, BoundaryCondition::whole_line(), {root}, kCfg);
      REQUIRE(wl.roots.size() == 1);
      CHECK(std::abs(wl.roots[0] - root) <= 1e-6 * (1.0 + std::abs(root)));
      ++matched;
    }
  }
  CHECK(matched >= 5);
}

TEST_CASE("validation") {
  const PotentialFn whole = halfline::sech2_potential(complexd(1.0, 0.0));
  const PotentialFn half = halfline::random_potential({2, 1.0, 5.0, 3, Domain::kHalfline});
  CHECK_THROWS_AS(miss(whole, complexd(-1.0, 0.0), BoundaryCondition::dirichlet(), kCfg),
                  std::domain_error);
  CHECK_THROWS_AS(miss(half, complexd(-1.0, 0.0), BoundaryCondition::whole_line(), kCfg),
                  std::domain_error);
  CHECK_THROWS_AS(miss(half, complexd(0.5, 0.0), BoundaryCondition::dirichlet(), kCfg),
                  std::domain_error);
  CHECK_THROWS_AS(find_eigenvalues(half, BoundaryCondition::whole_line(),
                                   {complexd(-1.0, 0.1)}, kCfg),
                  std::domain_error);
}

TEST_CASE("default seed grid scales with the potential norm") {
  CHECK(halfline::default_seed_grid(0.0).empty());
  const auto seeds = halfline::default_seed_grid(2.0);
  CHECK(seeds.size() == 64);
  for (const complexd& s : seeds) {
    CHECK(halfline::distance_to_nonnegative_axis(s) > 1e-6 * (1.0 + std::abs(s)));
    CHECK(std::abs(s) <= 10.0 * 4.0 + 1e-9);
    CHECK(std::abs(s) >= 0.01 * 4.0 * (1.0 - 1e-12));
  }
}

TEST_SUITE_END();
