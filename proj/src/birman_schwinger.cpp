#include "birman_schwinger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "error.hpp"
#include "gfun.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "textio.hpp"

namespace halfline {

namespace {

constexpr std::uint64_t kNormSeed = 0x5DEECE66Dull;
constexpr std::uint64_t kCertSeed = 0xB5297A4D3ull;

std::vector<complexd> random_unit_vector(int n, std::uint64_t seed) {
  DetRng rng(seed);
  std::vector<complexd> v(n);
  for (complexd& z : v) z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  const double nv = vec_norm(v);
  if (nv > 0.0) vec_scale(v, 1.0 / nv);
  return v;
}

complexd reflection_coefficient(complexd s, const BoundaryCondition& bc) {
  switch (bc.kind) {
    case BoundaryKind::kDirichlet: return -1.0;
    case BoundaryKind::kNeumann: return 1.0;
    case BoundaryKind::kRobin: {
      if (!(bc.sigma >= 0.0)) throw std::domain_error("robin: sigma must be >= 0");
      return (s - bc.sigma) / (s + bc.sigma);
    }
    case BoundaryKind::kWholeLine: return 0.0;
  }
  throw std::domain_error("kernel: unknown boundary kind");
}

}  // namespace

double SampledPotential::l1_norm() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    acc += weights[i] * std::abs(values[i]);
  return acc;
}

void SampledPotential::validate(bool allow_negative_nodes) const {
  const std::size_t n = nodes.size();
  if (n == 0) throw std::domain_error("sampled potential: empty");
  if (values.size() != n || weights.size() != n)
    throw std::domain_error("sampled potential: mismatched array lengths");
  for (std::size_t i = 0; i < n; ++i) {
    require_finite(nodes[i], "node");
    require_finite(values[i], "value");
    require_finite(weights[i], "weight");
    if (!(weights[i] > 0.0))
      throw std::domain_error("sampled potential: weights must be > 0");
    if (i > 0 && !(nodes[i] > nodes[i - 1]))
      throw std::domain_error("sampled potential: nodes must be strictly increasing");
    if (!allow_negative_nodes && nodes[i] < 0.0)
      throw std::domain_error("sampled potential: negative node on the halfline");
  }
}

SampledPotential SampledPotential::from_nodes(std::vector<double> nodes,
                                              std::vector<complexd> values) {
  if (nodes.size() != values.size() || nodes.size() < 2)
    throw std::domain_error("sampled potential: need >= 2 matching nodes/values");
  SampledPotential p;
  p.nodes = std::move(nodes);
  p.values = std::move(values);
  const std::size_t n = p.nodes.size();
  p.weights.resize(n);
  p.weights[0] = 0.5 * (p.nodes[1] - p.nodes[0]);
  p.weights[n - 1] = 0.5 * (p.nodes[n - 1] - p.nodes[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i)
    p.weights[i] = 0.5 * (p.nodes[i + 1] - p.nodes[i - 1]);
  return p;
}

SampledPotential SampledPotential::uniform(double x0, double x1, int n,
                                           const std::function<complexd(double)>& f) {
  if (!(x1 > x0)) throw std::domain_error("sampled potential: x1 must exceed x0");
  if (n < 2) throw std::domain_error("sampled potential: need n >= 2");
  std::vector<double> xs(n);
  std::vector<complexd> vs(n);
  const double h = (x1 - x0) / (n - 1);
  for (int i = 0; i < n; ++i) {
    xs[i] = (i == n - 1) ? x1 : x0 + h * i;
    vs[i] = f(xs[i]);
  }
  return from_nodes(std::move(xs), std::move(vs));
}

SampledPotential SampledPotential::read_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw IoError("potential csv: empty file " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,re_v,im_v")
    throw IoError("potential csv: expected header x,re_v,im_v in " + path);
  std::vector<double> xs;
  std::vector<complexd> vs;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const char* p = line.c_str();
    char* end = nullptr;
    double cols[3];
    for (int k = 0; k < 3; ++k) {
      cols[k] = std::strtod(p, &end);
      if (end == p)
        throw IoError("potential csv: bad number at line " + std::to_string(lineno));
      p = end;
      if (k < 2) {
        if (*p != ',')
          throw IoError("potential csv: expected comma at line " + std::to_string(lineno));
        ++p;
      }
    }
    if (*p != '\0')
      throw IoError("potential csv: trailing junk at line " + std::to_string(lineno));
    xs.push_back(cols[0]);
    vs.emplace_back(cols[1], cols[2]);
  }
  if (xs.size() < 2) throw IoError("potential csv: need at least two rows in " + path);
  return from_nodes(std::move(xs), std::move(vs));
}

std::string SampledPotential::to_csv() const {
  std::string out = "x,re_v,im_v\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out += format_double(nodes[i]);
    out += ',';
    out += format_double(values[i].real());
    out += ',';
    out += format_double(values[i].imag());
    out += '\n';
  }
  return out;
}

complexd kernel(double x, double y, complexd mu, const BoundaryCondition& bc) {
  require_finite(x, "x");
  require_finite(y, "y");
  const complexd s = sqrt_mu(mu);
  if (bc.kind != BoundaryKind::kWholeLine && (x < 0.0 || y < 0.0))
    throw std::domain_error("kernel: halfline kernels need x, y >= 0");
  const complexd direct = std::exp(-s * std::abs(x - y));
  if (bc.kind == BoundaryKind::kWholeLine) return direct / (2.0 * s);
  const complexd refl = reflection_coefficient(s, bc);
  return (direct + refl * std::exp(-s * (x + y))) / (2.0 * s);
}

double dirichlet_kernel_sup(complexd mu) {
  const complexd s = sqrt_mu(mu);
  return g(s.imag() / s.real()).value;
}

double robin_sup_factor(complexd mu, double sigma) {
  require_finite(sigma, "sigma");
  if (!(sigma >= 0.0)) throw std::domain_error("robin: sigma must be >= 0");
  const complexd s = sqrt_mu(mu);
  const complexd r = (s - sigma) / (s + sigma);
  const double rho = std::abs(r);
  if (rho < 1e-300) return 1.0;
  const double p = s.real(), q = s.imag();

  auto f = [&](double y) { return std::abs(1.0 + r * std::exp(-2.0 * s * y)); };

  // |1 + r e^{-2sy}| has envelope 1 + rho e^{-2py} and phase advancing at
  // rate 2q. The global sup over [0, inf) is attained by y = 0, by the
  // first phase alignment (at most 1.5 periods out), or in the decay range
  // 2py <= 70; beyond the scan window the envelope is below every aligned
  // peak inside it.
  double window = 35.0 / p;
  if (std::abs(q) > 1e-12 * (1.0 + p)) {
    const double period = kPi / std::abs(q);
    double first = std::fmod(std::arg(r) / (2.0 * q), period);
    if (first < 0.0) first += period;
    window = std::min(first + 1.5 * period, window);
  }

  constexpr int kN = 4096;
  double best = std::max(f(0.0), 1.0);
  double best_y = 0.0;
  bool have_cell = false;
  const double h = window / kN;
  double prev2 = f(0.0), prev1 = f(h);
  for (int k = 2; k <= kN; ++k) {
    const double v = f(h * k);
    if (prev1 >= prev2 && prev1 >= v) {
      // local maximum cell [k-2, k]; golden refinement
      double lo = h * (k - 2), hi = h * k;
      double x1 = hi - 0.61803398874989484820 * (hi - lo);
      double x2 = lo + 0.61803398874989484820 * (hi - lo);
      double f1 = f(x1), f2 = f(x2);
      while (hi - lo > 1e-13 * (1.0 + hi)) {
        if (f1 < f2) {
          lo = x1; x1 = x2; f1 = f2;
          x2 = lo + 0.61803398874989484820 * (hi - lo);
          f2 = f(x2);
        } else {
          hi = x2; x2 = x1; f2 = f1;
          x1 = hi - 0.61803398874989484820 * (hi - lo);
          f1 = f(x1);
        }
      }
      const double y = 0.5 * (lo + hi);
      const double v0 = f(y);
      if (v0 > best) { best = v0; best_y = y; have_cell = true; }
    }
    prev2 = prev1;
    prev1 = v;
  }
  (void)best_y;
  (void)have_cell;
  return best;
}

BSMatrix assemble(const SampledPotential& pot, complexd mu,
                  const BoundaryCondition& bc) {
  pot.validate(bc.kind == BoundaryKind::kWholeLine);
  const complexd s = sqrt_mu(mu);
  const complexd refl = reflection_coefficient(s, bc);
  const int n = pot.size();
  BSMatrix out{ComplexMatrix(n), mu, bc};

  const bool whole = bc.kind == BoundaryKind::kWholeLine;
  std::vector<double> half(n);    // sqrt(w_i) |V_i|^{1/2}
  std::vector<complexd> phase(n); // V_i / |V_i|
  std::vector<complexd> edge(n);  // e^{-s x_i}
  for (int i = 0; i < n; ++i) {
    const double av = std::abs(pot.values[i]);
    half[i] = std::sqrt(pot.weights[i]) * std::sqrt(av);
    phase[i] = av == 0.0 ? complexd(1.0) : pot.values[i] / av;
    edge[i] = whole ? complexd(0.0) : std::exp(-s * pot.nodes[i]);
  }
  const complexd inv2s = 1.0 / (2.0 * s);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t iu) {
    const int i = static_cast<int>(iu);
    complexd* row = out.m.a.data() + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      complexd k = std::exp(-s * std::abs(pot.nodes[i] - pot.nodes[j]));
      if (!whole) k += refl * edge[i] * edge[j];
      row[j] = half[i] * phase[i] * k * inv2s * half[j];
    }
  });
  return out;
}

double operator_norm(const BSMatrix& a) {
  const int n = a.m.n;
  if (n == 0) return 0.0;
  std::vector<complexd> v = random_unit_vector(n, kNormSeed);
  double prev = -1.0;
  int stable = 0;
  for (int it = 0; it < 10000; ++it) {
    std::vector<complexd> w = matvec(a.m, v);
    const double sigma = vec_norm(w);
    if (sigma == 0.0) return 0.0;
    std::vector<complexd> u = adjoint_matvec(a.m, w);
    const double nu = vec_norm(u);
    if (nu == 0.0) return sigma;
    vec_scale(u, 1.0 / nu);
    v = std::move(u);
    if (prev >= 0.0 && std::abs(sigma - prev) <= 1e-10 * std::max(sigma, 1e-300)) {
      if (++stable >= 2) return sigma;
    } else {
      stable = 0;
    }
    prev = sigma;
  }
  throw NumericError("operator_norm: power iteration did not converge");
}

NormBoundReport verify_norm_bound(const SampledPotential& pot, complexd mu,
                                  const BoundaryCondition& bc) {
  NormBoundReport rep;
  rep.norm = operator_norm(assemble(pot, mu, bc));
  double sup2sk = 1.0;
  switch (bc.kind) {
    case BoundaryKind::kDirichlet: sup2sk = dirichlet_kernel_sup(mu); break;
    case BoundaryKind::kNeumann: sup2sk = robin_sup_factor(mu, 0.0); break;
    case BoundaryKind::kRobin: sup2sk = robin_sup_factor(mu, bc.sigma); break;
    case BoundaryKind::kWholeLine: sup2sk = 1.0; break;
  }
  rep.rhs = sup2sk / (2.0 * std::sqrt(std::abs(mu))) * pot.l1_norm();
  rep.ok = rep.norm <= rep.rhs * (1.0 + 1e-8) + 1e-12;
  return rep;
}

double eigenvalue_certificate(const SampledPotential& pot, complexd lambda,
                              const BoundaryCondition& bc) {
  require_finite(lambda, "lambda");
  const BSMatrix bs = assemble(pot, -lambda, bc);
  const int n = bs.m.n;
  const double scale = frobenius_norm(bs.m) + 1.0;
  complexd shift = 1.0;
  ComplexMatrix shifted = bs.m;
  for (int i = 0; i < n; ++i) shifted.at(i, i) -= shift;
  LuFactor lu = lu_factor(shifted);
  if (lu.singular) return 0.0;

  std::vector<complexd> v = random_unit_vector(n, kCertSeed);
  complexd nu = 0.0;
  int refactors = 0;
  for (int it = 0; it < 400; ++it) {
    std::vector<complexd> w = lu_solve(lu, v);
    const double nw = vec_norm(w);
    if (!(nw > 0.0)) break;
    vec_scale(w, 1.0 / nw);
    v = std::move(w);
    std::vector<complexd> av = matvec(bs.m, v);
    nu = vec_dot(v, av);
    double resid = 0.0;
    for (int i = 0; i < n; ++i) resid += std::norm(av[i] - nu * v[i]);
    resid = std::sqrt(resid);
    if (resid <= 1e-9 * scale) return std::abs(nu - 1.0);
    if (it % 12 == 11 && refactors < 8 && std::abs(nu - shift) > 1e-13 * scale) {
      shift = nu;
      shifted = bs.m;
      for (int i = 0; i < n; ++i) shifted.at(i, i) -= shift;
      lu = lu_factor(shifted);
      ++refactors;
      if (lu.singular) return std::abs(nu - 1.0);
    }
  }
  throw NumericError("eigenvalue_certificate: inverse iteration did not converge");
}

}  // namespace halfline
