#include "halfline/halfline.h"

#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "birman_schwinger.hpp"
#include "complex_util.hpp"
#include "delta.hpp"
#include "error.hpp"
#include "gfun.hpp"
#include "potential.hpp"
#include "region.hpp"
#include "scenario.hpp"
#include "shooting.hpp"

struct hs_potential {
  halfline::PotentialFn fn;
};

namespace {

using halfline::complexd;

thread_local std::string t_last_error;

hs_status fail(hs_status code, const char* what) {
  t_last_error = what;
  return code;
}

template <typename F>
hs_status guard(F&& body) {
  try {
    body();
    t_last_error.clear();
    return HS_OK;
  } catch (const std::domain_error& e) {
    return fail(HS_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HS_ERR_DOMAIN, e.what());
  } catch (const halfline::IoError& e) {
    return fail(HS_ERR_IO, e.what());
  } catch (const halfline::NumericError& e) {
    return fail(HS_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(HS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HS_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) throw std::domain_error(std::string(name) + " must not be null");
}

complexd to_cx(hs_complex z) { return {z.re, z.im}; }
hs_complex from_cx(complexd z) { return {z.real(), z.imag()}; }

halfline::BoundaryCondition to_bc(hs_boundary bc) {
  switch (bc.kind) {
    case HS_BC_DIRICHLET:
      return halfline::BoundaryCondition::dirichlet();
    case HS_BC_NEUMANN:
      return halfline::BoundaryCondition::neumann();
    case HS_BC_ROBIN:
      return halfline::BoundaryCondition::robin(bc.sigma);
    case HS_BC_WHOLE_LINE:
      return halfline::BoundaryCondition::whole_line();
    default:
      throw std::domain_error("unknown boundary kind");
  }
}

halfline::ShootingConfig to_config(const hs_shoot_config* cfg) {
  halfline::ShootingConfig out;
  if (cfg == nullptr) return out;
  if (cfg->rel_tol > 0) out.rel_tol = cfg->rel_tol;
  if (cfg->abs_tol > 0) out.abs_tol = cfg->abs_tol;
  if (cfg->newton_tol > 0) out.newton_tol = cfg->newton_tol;
  if (cfg->max_newton > 0) out.max_newton = cfg->max_newton;
  return out;
}

}  // namespace

extern "C" {

const char* hs_last_error(void) { return t_last_error.c_str(); }

hs_status hs_gfun(double a, double* value, double* argmax, int* attained) {
  return guard([&] {
    need(value, "value");
    const halfline::GFunResult r = halfline::g(a);
    *value = r.value;
    if (argmax != nullptr)
      *argmax = r.argmax ? *r.argmax : std::numeric_limits<double>::quiet_NaN();
    if (attained != nullptr) *attained = r.attained ? 1 : 0;
  });
}

hs_status hs_gfun_envelopes(double a, double* lower, double* upper) {
  return guard([&] {
    need(lower, "lower");
    need(upper, "upper");
    const halfline::GEnvelopes env = halfline::g_envelopes(a);
    *lower = env.lower;
    *upper = env.upper;
  });
}

hs_status hs_bound_radius(double theta, double v_norm, hs_boundary bc,
                          double* radius) {
  return guard([&] {
    need(radius, "radius");
    *radius = halfline::bound_radius(theta, v_norm, to_bc(bc));
  });
}

hs_status hs_contains(hs_complex lambda, double v_norm, hs_boundary bc,
                      int* inside, double* margin) {
  return guard([&] {
    need(inside, "inside");
    const auto point = halfline::SpectralPoint::from(to_cx(lambda));
    const auto r = halfline::contains(point, v_norm, to_bc(bc));
    *inside = r.inside ? 1 : 0;
    if (margin != nullptr) *margin = r.margin;
  });
}

hs_status hs_curve_radius4(double theta, double* radius4) {
  return guard([&] {
    need(radius4, "radius4");
    *radius4 = halfline::curve_radius4(theta);
  });
}

hs_status hs_keller_constant(double gamma, double* value) {
  return guard([&] {
    need(value, "value");
    *value = halfline::keller_constant(gamma);
  });
}

hs_status hs_cosh_ratio_sup(double gamma, double* sup, double* t_star) {
  return guard([&] {
    need(sup, "sup");
    const auto r = halfline::cosh_ratio_sup(gamma);
    *sup = r.sup;
    if (t_star != nullptr) *t_star = r.t_star;
  });
}

hs_status hs_extremal_delta(double m, double theta, hs_complex* c, double* b,
                            hs_complex* lambda, double* g_value,
                            double* bs_residual) {
  return guard([&] {
    const auto r = halfline::extremal_delta(m, theta);
    if (c != nullptr) *c = from_cx(r.delta.c);
    if (b != nullptr) *b = r.delta.b;
    if (lambda != nullptr) *lambda = from_cx(r.lambda);
    if (g_value != nullptr) *g_value = r.g_value;
    if (bs_residual != nullptr) *bs_residual = r.bs_residual;
  });
}

hs_status hs_delta_eigenvalues(hs_complex c, double b, hs_complex* out,
                               size_t cap, size_t* count) {
  return guard([&] {
    need(count, "count");
    const auto roots =
        halfline::dirichlet_delta_eigenvalues({to_cx(c), b});
    *count = roots.size();
    if (roots.size() > cap)
      throw std::domain_error("output capacity too small for eigenvalue list");
    if (!roots.empty()) need(out, "out");
    for (size_t i = 0; i < roots.size(); ++i) out[i] = from_cx(roots[i]);
  });
}

hs_status hs_neumann_delta_eigenvalue(hs_complex c, hs_complex* lambda) {
  return guard([&] {
    need(lambda, "lambda");
    *lambda = from_cx(halfline::neumann_delta_eigenvalue(to_cx(c)));
  });
}

hs_status hs_robin_delta_eigenvalue(hs_complex c, double sigma,
                                    hs_complex* lambda) {
  return guard([&] {
    need(lambda, "lambda");
    *lambda = from_cx(halfline::robin_delta_eigenvalue(to_cx(c), sigma));
  });
}

hs_status hs_potential_gaussian_bumps(int n_bumps, double amplitude,
                                      double support, uint64_t seed,
                                      int whole_line, hs_potential** out) {
  return guard([&] {
    need(out, "out");
    halfline::RandomPotentialSpec spec;
    spec.n_bumps = n_bumps;
    spec.amplitude_scale = amplitude;
    spec.support = support;
    spec.seed = seed;
    spec.domain =
        whole_line ? halfline::Domain::kWholeLine : halfline::Domain::kHalfline;
    *out = new hs_potential{halfline::random_potential(spec)};
  });
}

hs_status hs_potential_sech2(hs_complex alpha, hs_potential** out) {
  return guard([&] {
    need(out, "out");
    *out = new hs_potential{halfline::sech2_potential(to_cx(alpha))};
  });
}

hs_status hs_potential_mollified_delta(hs_complex c, double b, double width,
                                       hs_potential** out) {
  return guard([&] {
    need(out, "out");
    *out = new hs_potential{halfline::mollified_delta(to_cx(c), b, width)};
  });
}

hs_status hs_potential_from_csv(const char* path, int whole_line,
                                hs_potential** out) {
  return guard([&] {
    need(out, "out");
    need(path, "path");
    const auto s = halfline::SampledPotential::read_csv(path);
    const auto domain =
        whole_line ? halfline::Domain::kWholeLine : halfline::Domain::kHalfline;
    *out = new hs_potential{halfline::potential_from_samples(s, domain)};
  });
}

void hs_potential_free(hs_potential* p) { delete p; }

hs_status hs_potential_eval(const hs_potential* p, double x, hs_complex* v) {
  return guard([&] {
    need(p, "potential");
    need(v, "v");
    *v = from_cx(p->fn(x));
  });
}

hs_status hs_potential_l1_norm(const hs_potential* p, double* norm) {
  return guard([&] {
    need(p, "potential");
    need(norm, "norm");
    *norm = p->fn.l1_norm();
  });
}

hs_status hs_potential_support(const hs_potential* p, double* radius) {
  return guard([&] {
    need(p, "potential");
    need(radius, "radius");
    *radius = p->fn.support_radius();
  });
}

hs_status hs_bs_kernel(double x, double y, hs_complex mu, hs_boundary bc,
                       hs_complex* value) {
  return guard([&] {
    need(value, "value");
    *value = from_cx(halfline::kernel(x, y, to_cx(mu), to_bc(bc)));
  });
}

hs_status hs_dirichlet_kernel_sup(hs_complex mu, double* sup) {
  return guard([&] {
    need(sup, "sup");
    *sup = halfline::dirichlet_kernel_sup(to_cx(mu));
  });
}

hs_status hs_robin_sup_factor(hs_complex mu, double sigma, double* factor) {
  return guard([&] {
    need(factor, "factor");
    *factor = halfline::robin_sup_factor(to_cx(mu), sigma);
  });
}

hs_status hs_bs_operator_norm(const hs_potential* p, int nodes, hs_complex mu,
                              hs_boundary bc, double* norm) {
  return guard([&] {
    need(p, "potential");
    need(norm, "norm");
    const auto sampled = halfline::sample_potential(p->fn, nodes);
    *norm = halfline::operator_norm(
        halfline::assemble(sampled, to_cx(mu), to_bc(bc)));
  });
}

hs_status hs_verify_norm_bound(const hs_potential* p, int nodes, hs_complex mu,
                               hs_boundary bc, double* norm, double* rhs,
                               int* ok) {
  return guard([&] {
    need(p, "potential");
    need(ok, "ok");
    const auto sampled = halfline::sample_potential(p->fn, nodes);
    const auto report =
        halfline::verify_norm_bound(sampled, to_cx(mu), to_bc(bc));
    if (norm != nullptr) *norm = report.norm;
    if (rhs != nullptr) *rhs = report.rhs;
    *ok = report.ok ? 1 : 0;
  });
}

hs_status hs_eigenvalue_certificate(const hs_potential* p, int nodes,
                                    hs_complex lambda, hs_boundary bc,
                                    double* certificate) {
  return guard([&] {
    need(p, "potential");
    need(certificate, "certificate");
    const auto sampled = halfline::sample_potential(p->fn, nodes);
    *certificate =
        halfline::eigenvalue_certificate(sampled, to_cx(lambda), to_bc(bc));
  });
}

hs_status hs_miss(const hs_potential* p, hs_complex lambda, hs_boundary bc,
                  const hs_shoot_config* cfg, hs_complex* value) {
  return guard([&] {
    need(p, "potential");
    need(value, "value");
    *value =
        from_cx(halfline::miss(p->fn, to_cx(lambda), to_bc(bc), to_config(cfg)));
  });
}

hs_status hs_find_eigenvalues(const hs_potential* p, hs_boundary bc,
                              const hs_shoot_config* cfg,
                              const hs_complex* seeds, size_t n_seeds,
                              hs_complex* out, size_t cap, size_t* count,
                              int* converged, int* failed) {
  return guard([&] {
    need(p, "potential");
    need(count, "count");
    std::vector<complexd> seed_list;
    if (seeds != nullptr && n_seeds > 0) {
      seed_list.reserve(n_seeds);
      for (size_t i = 0; i < n_seeds; ++i) seed_list.push_back(to_cx(seeds[i]));
    } else {
      seed_list = halfline::default_seed_grid(p->fn.l1_norm());
    }
    const auto search =
        halfline::find_eigenvalues(p->fn, to_bc(bc), seed_list, to_config(cfg));
    *count = search.roots.size();
    if (converged != nullptr) *converged = search.converged_seeds;
    if (failed != nullptr) *failed = search.failed_seeds;
    if (search.roots.size() > cap)
      throw std::domain_error("output capacity too small for eigenvalue list");
    if (!search.roots.empty()) need(out, "out");
    for (size_t i = 0; i < search.roots.size(); ++i)
      out[i] = from_cx(search.roots[i]);
  });
}

hs_status hs_enclosure_audit(const hs_potential* p, hs_boundary bc,
                             const hs_shoot_config* cfg, int certificate_nodes,
                             hs_complex* lambdas, double* margins,
                             double* certificates, size_t cap, size_t* count,
                             double* v_norm, int* pass) {
  return guard([&] {
    need(p, "potential");
    need(count, "count");
    need(pass, "pass");
    const auto condition = to_bc(bc);
    const auto seeds = halfline::default_seed_grid(p->fn.l1_norm());
    const auto report = halfline::enclosure_audit(
        p->fn, condition, seeds, to_config(cfg),
        certificate_nodes > 0 ? certificate_nodes : 400);
    *count = report.entries.size();
    *pass = report.pass ? 1 : 0;
    if (v_norm != nullptr) *v_norm = report.v_norm;
    if (report.entries.size() > cap)
      throw std::domain_error("output capacity too small for audit entries");
    for (size_t i = 0; i < report.entries.size(); ++i) {
      if (lambdas != nullptr) lambdas[i] = from_cx(report.entries[i].lambda);
      if (margins != nullptr) margins[i] = report.entries[i].margin;
      if (certificates != nullptr)
        certificates[i] = report.entries[i].certificate;
    }
  });
}

hs_status hs_scenario_run_json(const char* json_text) {
  return guard([&] {
    need(json_text, "json_text");
    halfline::run_scenario_json(json_text);
  });
}

hs_status hs_scenario_run_file(const char* path) {
  return guard([&] {
    need(path, "path");
    halfline::run_scenario_file(path);
  });
}

}  // extern "C"
