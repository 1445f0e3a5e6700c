#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "halfline/halfline.h"

namespace {

hs_boundary dirichlet() { return {HS_BC_DIRICHLET, 0.0}; }
hs_boundary neumann() { return {HS_BC_NEUMANN, 0.0}; }
hs_boundary robin(double sigma) { return {HS_BC_ROBIN, sigma}; }
hs_boundary whole_line() { return {HS_BC_WHOLE_LINE, 0.0}; }

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("gfun values and error reporting") {
  double value = 0.0, argmax = 0.0;
  int attained = 0;
  REQUIRE(hs_gfun(1.0, &value, &argmax, &attained) == HS_OK);
  CHECK(value == doctest::Approx(1.0694322449184150).epsilon(1e-12));
  CHECK(argmax == doctest::Approx(2.2841022973938258).epsilon(1e-9));
  CHECK(attained == 1);
  CHECK(std::strlen(hs_last_error()) == 0);

  REQUIRE(hs_gfun(0.0, &value, &argmax, &attained) == HS_OK);
  CHECK(value == 1.0);
  CHECK(attained == 0);
  CHECK(std::isnan(argmax));

  CHECK(hs_gfun(1.0, nullptr, nullptr, nullptr) == HS_ERR_DOMAIN);
  CHECK(std::strlen(hs_last_error()) > 0);
  const double bad = std::nan("");
  CHECK(hs_gfun(bad, &value, nullptr, nullptr) == HS_ERR_DOMAIN);

  double lower = 0.0, upper = 0.0;
  REQUIRE(hs_gfun_envelopes(0.5, &lower, &upper) == HS_OK);
  CHECK(lower <= value);
  CHECK(hs_gfun_envelopes(-1.0, &lower, &upper) == HS_ERR_DOMAIN);
}

TEST_CASE("region bounds and containment") {
  double radius = 0.0;
  REQUIRE(hs_bound_radius(1.3, 1.7, neumann(), &radius) == HS_OK);
  CHECK(radius == doctest::Approx(1.7 * 1.7).epsilon(1e-15));
  CHECK(hs_bound_radius(0.0, 1.0, dirichlet(), &radius) == HS_ERR_DOMAIN);
  CHECK(hs_bound_radius(1.0, 1.0, robin(-2.0), &radius) == HS_ERR_DOMAIN);
  CHECK(hs_bound_radius(1.0, 1.0, {9, 0.0}, &radius) == HS_ERR_DOMAIN);

  int inside = 0;
  double margin = 0.0;
  REQUIRE(hs_contains({-2.0, 0.0}, 1.7, neumann(), &inside, &margin) == HS_OK);
  CHECK(inside == 1);
  CHECK(margin == doctest::Approx(1.7 * 1.7 - 2.0).epsilon(1e-14));
  CHECK(hs_contains({2.0, 0.0}, 1.7, neumann(), &inside, &margin) == HS_ERR_DOMAIN);

  double radius4 = 0.0;
  REQUIRE(hs_curve_radius4(3.14159265358979323846, &radius4) == HS_OK);
  CHECK(radius4 == doctest::Approx(1.0).epsilon(1e-15));

  double keller = 0.0, sup = 0.0, t_star = 0.0;
  REQUIRE(hs_keller_constant(1.5, &keller) == HS_OK);
  CHECK(keller == doctest::Approx(0.1875).epsilon(1e-12));
  REQUIRE(hs_cosh_ratio_sup(1.5, &sup, &t_star) == HS_OK);
  CHECK(sup == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(t_star == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(hs_keller_constant(0.5, &keller) == HS_ERR_DOMAIN);
}

TEST_CASE("extremal delta and eigenvalue search") {
  hs_complex c{0, 0}, lambda{0, 0};
  double b = 0.0, g_value = 0.0, residual = 0.0;
  REQUIRE(hs_extremal_delta(1.0, 1.5707963267948966, &c, &b, &lambda, &g_value,
                            &residual) == HS_OK);
  CHECK(std::hypot(c.re, c.im) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b == doctest::Approx(3.0204891073471601).epsilon(1e-9));
  CHECK(residual <= 1e-10);
  CHECK(hs_extremal_delta(1.0, 3.14159265358979323846, &c, &b, &lambda, &g_value,
                          &residual) == HS_ERR_DOMAIN);

  hs_complex eigs[4];
  size_t count = 0;
  REQUIRE(hs_delta_eigenvalues({4.0, 0.0}, 10.0, eigs, 4, &count) == HS_OK);
  REQUIRE(count == 1);
  CHECK(eigs[0].re == doctest::Approx(-4.0).epsilon(1e-10));
  CHECK(std::abs(eigs[0].im) <= 1e-10);

  // too-small capacity reports the true count
  count = 0;
  CHECK(hs_delta_eigenvalues({4.0, 0.0}, 10.0, eigs, 0, &count) == HS_ERR_DOMAIN);
  CHECK(count == 1);

  hs_complex nl{0, 0};
  REQUIRE(hs_neumann_delta_eigenvalue({1.0, 0.5}, &nl) == HS_OK);
  CHECK(nl.re == doctest::Approx(-0.75).epsilon(1e-14));
  CHECK(nl.im == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(hs_neumann_delta_eigenvalue({-1.0, 0.5}, &nl) == HS_ERR_DOMAIN);
  REQUIRE(hs_robin_delta_eigenvalue({1.0, 0.5}, 0.0, &nl) == HS_OK);
  CHECK(nl.re == doctest::Approx(-0.75).epsilon(1e-14));
}

TEST_CASE("potential handles") {
  hs_potential* p = nullptr;
  REQUIRE(hs_potential_gaussian_bumps(3, 1.0, 8.0, 42, 0, &p) == HS_OK);
  REQUIRE(p != nullptr);
  double norm = 0.0, support = 0.0;
  REQUIRE(hs_potential_l1_norm(p, &norm) == HS_OK);
  CHECK(norm > 0.0);
  REQUIRE(hs_potential_support(p, &support) == HS_OK);
  CHECK(support == doctest::Approx(8.0).epsilon(1e-12));
  hs_complex v{0, 0};
  REQUIRE(hs_potential_eval(p, 1.0, &v) == HS_OK);
  CHECK(std::isfinite(v.re));
  CHECK(std::isfinite(v.im));
  hs_potential_free(p);

  CHECK(hs_potential_gaussian_bumps(-1, 1.0, 8.0, 42, 0, &p) == HS_ERR_DOMAIN);
  CHECK(hs_potential_eval(nullptr, 1.0, &v) == HS_ERR_DOMAIN);

  TempFile csv("capi_potential_tmp.csv");
  {
    std::ofstream out(csv.path, std::ios::binary);
    out << "x,re_v,im_v\n0,1,0\n1,2,0.5\n2,0,0\n";
  }
  hs_potential* q = nullptr;
  REQUIRE(hs_potential_from_csv(csv.path.c_str(), 0, &q) == HS_OK);
  REQUIRE(hs_potential_eval(q, 0.5, &v) == HS_OK);
  CHECK(v.re == doctest::Approx(1.5).epsilon(1e-14));  // linear interpolation
  CHECK(v.im == doctest::Approx(0.25).epsilon(1e-14));
  hs_potential_free(q);
  CHECK(hs_potential_from_csv("missing_file.csv", 0, &q) == HS_ERR_IO);
}

TEST_CASE("birman-schwinger interface") {
  hs_complex k{0, 0};
  REQUIRE(hs_bs_kernel(0.0, 1.7, {1.3, 0.8}, dirichlet(), &k) == HS_OK);
  CHECK(std::hypot(k.re, k.im) <= 1e-15);
  CHECK(hs_bs_kernel(-1.0, 1.0, {1.3, 0.8}, dirichlet(), &k) == HS_ERR_DOMAIN);

  double sup = 0.0;
  REQUIRE(hs_dirichlet_kernel_sup({0.0, 1.0}, &sup) == HS_OK);
  CHECK(sup > 1.0);
  CHECK(sup < 2.0);
  double factor = 0.0;
  REQUIRE(hs_robin_sup_factor({2.0, 1.0}, 1.3, &factor) == HS_OK);
  CHECK(factor == doctest::Approx(1.07707555738).epsilon(1e-6));

  hs_potential* p = nullptr;
  REQUIRE(hs_potential_gaussian_bumps(2, 1.0, 6.0, 7, 0, &p) == HS_OK);
  double norm = 0.0, rhs = 0.0;
  int ok = 0;
  REQUIRE(hs_verify_norm_bound(p, 150, {1.0, 0.5}, dirichlet(), &norm, &rhs, &ok) ==
          HS_OK);
  CHECK(ok == 1);
  CHECK(norm <= rhs * (1 + 1e-8) + 1e-12);
  double norm_only = 0.0;
  REQUIRE(hs_bs_operator_norm(p, 150, {1.0, 0.5}, dirichlet(), &norm_only) == HS_OK);
  CHECK(norm_only == doctest::Approx(norm).epsilon(1e-12));
  hs_potential_free(p);
}

TEST_CASE("shooting and audit") {
  hs_potential* sech = nullptr;
  REQUIRE(hs_potential_sech2({1.0, 0.0}, &sech) == HS_OK);
  hs_complex m{0, 0};
  REQUIRE(hs_miss(sech, {-1.0, 0.0}, whole_line(), nullptr, &m) == HS_OK);
  CHECK(std::hypot(m.re, m.im) <= 1e-6);
  // boundary kind and potential domain must agree
  CHECK(hs_miss(sech, {-1.0, 0.0}, dirichlet(), nullptr, &m) == HS_ERR_DOMAIN);

  const hs_complex seed{-1.05, 0.03};
  hs_complex roots[4];
  size_t count = 0;
  int converged = 0, failed = 0;
  REQUIRE(hs_find_eigenvalues(sech, whole_line(), nullptr, &seed, 1, roots, 4,
                              &count, &converged, &failed) == HS_OK);
  REQUIRE(count == 1);
  CHECK(converged == 1);
  CHECK(failed == 0);
  CHECK(std::hypot(roots[0].re + 1.0, roots[0].im) <= 1e-8);
  hs_potential_free(sech);

  hs_potential* mol = nullptr;
  REQUIRE(hs_potential_mollified_delta({1.5, 0.0}, 0.8, 0.05, &mol) == HS_OK);
  hs_complex lambdas[8];
  double margins[8], certificates[8], v_norm = 0.0;
  size_t n_entries = 0;
  int pass = 0;
  REQUIRE(hs_enclosure_audit(mol, neumann(), nullptr, 800, lambdas, margins,
                             certificates, 8, &n_entries, &v_norm, &pass) == HS_OK);
  CHECK(pass == 1);
  REQUIRE(n_entries >= 1);
  CHECK(v_norm == doctest::Approx(1.5).epsilon(1e-3));
  for (size_t i = 0; i < n_entries; ++i) {
    CHECK(margins[i] >= -1e-6);
    CHECK(certificates[i] <= 1e-3);
  }
  hs_potential_free(mol);
}

TEST_CASE("scenario entry points") {
  TempFile out("capi_scenario_tmp.csv");
  const std::string sc =
      std::string(R"({"command":"keller","gamma":1.5,"out":")") + out.path + "\"}";
  REQUIRE(hs_scenario_run_json(sc.c_str()) == HS_OK);
  std::ifstream in(out.path);
  CHECK(in.good());

  CHECK(hs_scenario_run_json("{bad json") == HS_ERR_DOMAIN);
  CHECK(hs_scenario_run_json(nullptr) == HS_ERR_DOMAIN);
  CHECK(hs_scenario_run_file("missing_scenario.json") == HS_ERR_IO);

  // a failed audit maps to the numeric error class
  TempFile audit("capi_audit_tmp.json");
  const std::string bad_audit =
      std::string(
          R"({"command":"audit","potential":{"family":"mollified-delta","c_re":1.5,"c_im":0.0,"b":0.8,"width":0.05},"bc":"neumann","certificate_nodes":2,"out":")") +
      audit.path + "\"}";
  CHECK(hs_scenario_run_json(bad_audit.c_str()) == HS_ERR_NUMERIC);
  std::ifstream report(audit.path);
  CHECK(report.good());
}
