#pragma once

#include <vector>

#include "complex_util.hpp"
#include "potential.hpp"
#include "region.hpp"

namespace halfline {

struct ShootingConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double newton_tol = 1e-9;  // on the normalized miss value
  int max_newton = 40;
};

// Scaled wave data: the true solution is psi * e^{log_scale}, and
// max_log_mod is log of the largest |true psi| seen along the trajectory.
struct WaveData {
  complexd psi;
  complexd dpsi;
  complexd log_scale;
  double max_log_mod = 0.0;
};

// Integrates psi'' = (V + mu) psi from the decaying end of the support
// inward to x_end. from_left integrates from -R upward (whole line only);
// otherwise from +R downward. The start state is the exact free solution
// for a vanishing tail.
WaveData integrate_inward(const PotentialFn& p, complexd lambda,
                          const ShootingConfig& cfg, bool from_left,
                          double x_end);

// Boundary miss functional, zero exactly at eigenvalues, normalized by
// the solution's max modulus:
//   Dirichlet:     psi(0)
//   Neumann/Robin: psi'(0) - sigma psi(0)  (scaled by 1/(1+|s|+sigma))
//   whole line:    Wronskian of the two inward solutions at 0
//                  (scaled by 1/(1+2|s|))
complexd miss(const PotentialFn& p, complexd lambda,
              const BoundaryCondition& bc, const ShootingConfig& cfg);

// Unnormalized Wronskian psi_l psi_r' - psi_l' psi_r at x_eval; constant
// in x_eval, which makes it a cross-check of the integrator.
complexd wholeline_wronskian(const PotentialFn& p, complexd lambda,
                             const ShootingConfig& cfg, double x_eval);

// |mu| in {0.01, 0.1, 1, 10} * v_norm^2 crossed with 16 angles placed to
// avoid the branch cut; empty when v_norm = 0.
std::vector<complexd> default_seed_grid(double v_norm);

struct EigenSearch {
  std::vector<complexd> roots;
  int converged_seeds = 0;
  int failed_seeds = 0;
};

// Newton on the miss function from every seed; central finite differences
// with h = 1e-7 (1 + |lambda|). Roots closer than 1e-6 (1 + |lambda|) to
// [0, inf) are rejected; duplicates within 1e-8 (1 + |lambda|) merge.
EigenSearch find_eigenvalues(const PotentialFn& p, const BoundaryCondition& bc,
                             const std::vector<complexd>& seeds,
                             const ShootingConfig& cfg);

struct AuditEntry {
  complexd lambda;
  double margin = 0.0;       // enclosure radius minus |lambda|
  double certificate = 0.0;  // min |nu - 1| of the discretized BS operator
  bool inside = false;
};

struct AuditReport {
  double v_norm = 0.0;
  std::vector<AuditEntry> entries;
  int converged_seeds = 0;
  int failed_seeds = 0;
  bool pass = false;  // margins >= -1e-6 and certificates <= 1e-3
};

AuditReport enclosure_audit(const PotentialFn& p, const BoundaryCondition& bc,
                            const std::vector<complexd>& seeds,
                            const ShootingConfig& cfg,
                            int certificate_nodes = 400);

}  // namespace halfline
