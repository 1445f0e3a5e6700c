#pragma once

#include <vector>

#include "complex_util.hpp"

namespace halfline {

// V = c * delta(x - b) on the halfline, b >= 0.
struct DeltaPotential {
  complexd c;
  double b = 0.0;
};

// Birman-Schwinger number c (1 - e^{-2 sqrt(mu) b}) / (2 sqrt(mu)) for the
// Dirichlet halfline; eigenvalues of -d^2/dx^2 + V at lambda = -mu are
// exactly the mu where this equals 1.
complexd dirichlet_bs_number(const DeltaPotential& d, complexd mu);

// Search box in the s = sqrt(mu) halfplane, Re s > 0.
struct SBox {
  double re_min = 0.0, re_max = 0.0;
  double im_min = 0.0, im_max = 0.0;
};

// All eigenvalues lambda = -s^2 with s in the box, found by winding-number
// subdivision of c (1 - e^{-2sb}) = 2s plus Newton polish. The default box
// is [1e-6, 2|c|] x [-2|c|, 2|c|], which contains every root since any
// root has |s| <= |c|. Returned sorted by (Re, Im); duplicates within 1e-9
// are merged. Degenerate scrapes of roots against the box boundary are
// retried with slightly perturbed boxes and reported as errors if they
// persist.
std::vector<complexd> dirichlet_delta_eigenvalues(const DeltaPotential& d);
std::vector<complexd> dirichlet_delta_eigenvalues(const DeltaPotential& d, const SBox& box);

struct ExtremalResult {
  DeltaPotential delta;
  complexd lambda;          // (m^2/4) g^2 e^{i theta}
  double g_value = 0.0;     // g(cot(theta/2))
  double y0 = 0.0;          // maximizer of the g objective
  double bs_residual = 0.0; // |BS number at lambda - 1|
};

// Delta potential with |c| = m whose single Dirichlet eigenvalue sits on
// the enclosure boundary at angle theta. Requires m > 0 and theta in
// (0, 2*pi) with theta != pi.
ExtremalResult extremal_delta(double m, double theta);

// V = c delta(x) on the halfline with a Neumann edge: lambda = -c^2,
// valid iff Re c > 0 (domain error otherwise).
complexd neumann_delta_eigenvalue(complexd c);

// Robin edge with parameter sigma >= 0: lambda = -(c - sigma)^2, valid
// iff Re(c - sigma) > 0.
complexd robin_delta_eigenvalue(complexd c, double sigma);

struct RobinSharpnessPoint {
  double k = 0.0;
  complexd c;
  complexd lambda;
  double ratio = 0.0;  // |lambda|^{1/2} / |c|
  bool skipped = false;
};

// Couplings c_k = -i k e^{i theta/2} drive |lambda|^{1/2}/||V|| toward 1
// as k grows; entries where Re(c_k - sigma) <= 0 are marked skipped.
std::vector<RobinSharpnessPoint> robin_sharpness_sequence(
    double theta, double sigma, const std::vector<double>& k_values);

}  // namespace halfline
