#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "delta.hpp"
#include "doctest.h"
#include "region.hpp"
#include "rng.hpp"

using halfline::complexd;
using halfline::DeltaPotential;
using halfline::dirichlet_bs_number;
using halfline::dirichlet_delta_eigenvalues;
using halfline::ExtremalResult;
using halfline::extremal_delta;
using halfline::kPi;
using halfline::SBox;

TEST_SUITE_BEGIN("delta");

TEST_CASE("birman-schwinger number at a known root") {
  const DeltaPotential d{complexd(4.0, 0.0), 10.0};
  const complexd bs = dirichlet_bs_number(d, complexd(4.0, 0.0));
  CHECK(std::abs(bs - 1.0) <= 1e-15);
  // small mu limit: c (1 - e^{-2sb}) / (2s) -> c b
  const complexd small = dirichlet_bs_number(d, complexd(1e-18, 0.0));
  CHECK(std::abs(small - complexd(40.0, 0.0)) <= 1e-12);
}

TEST_CASE("strong real coupling has the fixed-point eigenvalue") {
  // s solves 4 (1 - e^{-20 s}) = 2 s, i.e. s = 2 - 2 e^{-40} + ...
  const auto eigs = dirichlet_delta_eigenvalues({complexd(4.0, 0.0), 10.0});
  REQUIRE(eigs.size() == 1);
  CHECK(std::abs(eigs[0] - complexd(-4.0, 0.0)) <= 1e-12);
}

TEST_CASE("no eigenvalue cases") {
  CHECK(dirichlet_delta_eigenvalues({complexd(0.0, 0.0), 3.0}).empty());
  CHECK(dirichlet_delta_eigenvalues({complexd(2.0, 1.0), 0.0}).empty());
  // weak coupling: |c| b << 1 admits no root with Re s > 0
  CHECK(dirichlet_delta_eigenvalues({complexd(0.1, 0.05), 1.0}).empty());
}

TEST_CASE("extremal delta at theta = pi/2") {
  const ExtremalResult r = extremal_delta(1.0, kPi / 2.0);
  CHECK(r.g_value == doctest::Approx(1.0694322449184150).epsilon(1e-12));
  CHECK(r.y0 == doctest::Approx(2.2841022973938258).epsilon(1e-9));
  CHECK(r.delta.b == doctest::Approx(3.0204891073471601).epsilon(1e-9));
  CHECK(r.delta.c.real() == doctest::Approx(0.75620279240136399).epsilon(1e-9));
  CHECK(r.delta.c.imag() == doctest::Approx(-0.65433732643368251).epsilon(1e-9));
  CHECK(std::abs(r.delta.c) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(r.lambda) == doctest::Approx(0.28592133161781021).epsilon(1e-12));
  CHECK(std::abs(r.lambda - complexd(0.0, 0.28592133161781021)) <= 1e-12);
  CHECK(r.bs_residual <= 1e-10);
}

TEST_CASE("extremal eigenvalue sits on the enclosure boundary") {
  halfline::DetRng rng(77);
  for (double m : {0.5, 2.0}) {
    for (double theta : {0.7, 2.5, 4.0, 5.6}) {
      const ExtremalResult r = extremal_delta(m, theta);
      CHECK(std::abs(r.delta.c) == doctest::Approx(m).epsilon(1e-12));
      CHECK(r.bs_residual <= 1e-10);
      const double radius =
          halfline::bound_radius(theta, m, halfline::BoundaryCondition::dirichlet());
      CHECK(std::abs(r.lambda) == doctest::Approx(radius).epsilon(1e-12));
      // the certified search finds exactly this eigenvalue and no other
      const auto eigs = dirichlet_delta_eigenvalues(r.delta);
      REQUIRE(eigs.size() == 1);
      CHECK(std::abs(eigs[0] - r.lambda) <= 1e-9 * (1.0 + std::abs(r.lambda)));
    }
  }
}

TEST_CASE("extremal input validation") {
  CHECK_THROWS_AS(extremal_delta(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(extremal_delta(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(extremal_delta(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(extremal_delta(1.0, kPi), std::domain_error);
  CHECK_THROWS_AS(extremal_delta(1.0, 2.0 * kPi), std::domain_error);
  CHECK_THROWS_AS(extremal_delta(1.0, 7.0), std::domain_error);
}

TEST_CASE("random couplings: roots verify and stay in the disc bound") {
  halfline::DetRng rng(31);
  int with_roots = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const complexd c = rng.uniform_disc(4.0);
    const double b = rng.uniform(0.2, 8.0);
    const DeltaPotential d{c, b};
    const auto eigs = dirichlet_delta_eigenvalues(d);
    if (!eigs.empty()) ++with_roots;
    for (const complexd& lambda : eigs) {
      const complexd mu = -lambda;
      CHECK(std::abs(dirichlet_bs_number(d, mu) - 1.0) <= 1e-9);
      // any root satisfies |s| <= |c|
      CHECK(std::abs(std::sqrt(mu)) <= std::abs(c) + 1e-9);
    }
    // a larger box finds the same set
    const double radius = 2.0 * std::abs(c) + 1.0;
    const SBox big{1e-6, 2.0 * radius, -2.0 * radius, 2.0 * radius};
    const auto again = dirichlet_delta_eigenvalues(d, big);
    REQUIRE(again.size() == eigs.size());
    for (std::size_t i = 0; i < eigs.size(); ++i)
      CHECK(std::abs(again[i] - eigs[i]) <= 1e-8 * (1.0 + std::abs(eigs[i])));
  }
  CHECK(with_roots >= 3);  // the sample is not vacuous
}

TEST_CASE("box validation") {
  const DeltaPotential d{complexd(2.0, 0.5), 1.0};
  CHECK_THROWS_AS(dirichlet_delta_eigenvalues(d, SBox{0.0, 1.0, -1.0, 1.0}),
                  std::domain_error);
  CHECK_THROWS_AS(dirichlet_delta_eigenvalues(d, SBox{2.0, 1.0, -1.0, 1.0}),
                  std::domain_error);
}

TEST_CASE("neumann and robin delta eigenvalues") {
  const complexd c(1.0, 0.5);
  const complexd lam = halfline::neumann_delta_eigenvalue(c);
  CHECK(std::abs(lam - (-c * c)) <= 1e-15);
  CHECK_THROWS_AS(halfline::neumann_delta_eigenvalue(complexd(-0.1, 2.0)),
                  std::domain_error);
  CHECK_THROWS_AS(halfline::neumann_delta_eigenvalue(complexd(0.0, 1.0)),
                  std::domain_error);

  const complexd c2(2.0, 1.0);
  const double sigma = 0.5;
  const complexd lam2 = halfline::robin_delta_eigenvalue(c2, sigma);
  const complexd shifted = c2 - sigma;
  CHECK(std::abs(lam2 - (-shifted * shifted)) <= 1e-15);
  CHECK(std::abs(halfline::robin_delta_eigenvalue(c, 0.0) - lam) <= 1e-15);
  CHECK_THROWS_AS(halfline::robin_delta_eigenvalue(complexd(0.4, 1.0), 0.5),
                  std::domain_error);
}

TEST_CASE("robin sharpness sequence approaches the corner") {
  const auto seq = halfline::robin_sharpness_sequence(kPi / 2.0, 1.0,
                                                      {10.0, 100.0, 1000.0});
  REQUIRE(seq.size() == 3);
  double prev = 0.0;
  for (const auto& pt : seq) {
    REQUIRE(!pt.skipped);
    // c_k = -i k e^{i theta / 2}: modulus k, positive real part
    CHECK(std::abs(pt.c) == doctest::Approx(pt.k).epsilon(1e-14));
    CHECK(pt.c.real() > 0.0);
    CHECK(pt.ratio > prev);
    CHECK(pt.ratio < 1.0);
    CHECK(1.0 - pt.ratio <= 10.0 / pt.k);
    prev = pt.ratio;
  }
  // small k with large sigma cannot satisfy Re(c - sigma) > 0
  const auto skipped = halfline::robin_sharpness_sequence(0.1, 5.0, {10.0, 1000.0});
  REQUIRE(skipped.size() == 2);
  CHECK(skipped[0].skipped);
  CHECK(!skipped[1].skipped);
}

TEST_SUITE_END();
