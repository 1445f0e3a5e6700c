#pragma once

#include <functional>
#include <string>
#include <vector>

#include "complex_util.hpp"
#include "linalg.hpp"
#include "region.hpp"

namespace halfline {

// Potential tabulated at quadrature nodes. Nodes must be strictly
// increasing with positive weights; sum(w |V|) approximates the integral
// norm.
struct SampledPotential {
  std::vector<double> nodes;
  std::vector<complexd> values;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
  double l1_norm() const;
  void validate(bool allow_negative_nodes) const;

  // Trapezoid weights on the node set.
  static SampledPotential from_nodes(std::vector<double> nodes,
                                     std::vector<complexd> values);
  // n uniform nodes on [x0, x1] with trapezoid weights.
  static SampledPotential uniform(double x0, double x1, int n,
                                  const std::function<complexd(double)>& f);
  // CSV with header x,re_v,im_v.
  static SampledPotential read_csv(const std::string& path);
  std::string to_csv() const;
};

// Resolvent kernel at energy lambda = -mu:
//   Dirichlet:  (e^{-s|x-y|} - e^{-s(x+y)}) / (2s)
//   Robin:      (e^{-s|x-y|} + r e^{-s(x+y)}) / (2s), r = (s-sigma)/(s+sigma)
//   Neumann:    Robin with sigma = 0
//   whole line: e^{-s|x-y|} / (2s)
// with s = sqrt(mu), Re s > 0. Halfline kernels need x, y >= 0.
complexd kernel(double x, double y, complexd mu, const BoundaryCondition& bc);

// sup_{x,y} |2 s K(x,y)| for the Dirichlet kernel = g(cot(theta/2)).
double dirichlet_kernel_sup(complexd mu);

// sup_{y >= 0} |1 + r e^{-2sy}| for the Robin kernel; always <= 2.
double robin_sup_factor(complexd mu, double sigma);

struct BSMatrix {
  ComplexMatrix m;
  complexd mu;
  BoundaryCondition bc;
};

// Nystrom discretization with symmetric |V|^{1/2} weighting:
//   A_ij = sqrt(w_i) V_i/|V_i| |V_i|^{1/2} K(x_i, x_j) |V_j|^{1/2} sqrt(w_j).
BSMatrix assemble(const SampledPotential& pot, complexd mu, const BoundaryCondition& bc);

// Largest singular value via power iteration on A^H A; deterministic
// start, relative tolerance 1e-10, at most 10^4 iterations.
double operator_norm(const BSMatrix& a);

struct NormBoundReport {
  double norm = 0.0;  // discrete operator norm
  double rhs = 0.0;   // kernel sup bound times sum(w |V|)
  bool ok = false;    // norm <= rhs up to iteration tolerance
};

// Checks ||A|| <= sup|2sK| / (2 |mu|^{1/2}) * sum(w |V|), which holds for
// the discretized operator by construction; a violation indicates a bug
// or a failed iteration.
NormBoundReport verify_norm_bound(const SampledPotential& pot, complexd mu,
                                  const BoundaryCondition& bc);

// min_j |nu_j - 1| over eigenvalues nu_j of the discretized
// Birman-Schwinger operator at lambda; near zero exactly when lambda is
// close to an eigenvalue of the Schrodinger operator.
double eigenvalue_certificate(const SampledPotential& pot, complexd lambda,
                              const BoundaryCondition& bc);

}  // namespace halfline
