#ifndef HALFLINE_H
#define HALFLINE_H

/* C interface to the halfline spectral-enclosure library. All functions
 * return hs_status; outputs are written through pointers only on HS_OK.
 * hs_last_error() describes the most recent failure on this thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifdef _WIN32
#define HS_API __declspec(dllexport)
#else
#define HS_API __attribute__((visibility("default")))
#endif

typedef enum hs_status {
  HS_OK = 0,
  HS_ERR_DOMAIN = 1,  /* invalid argument or configuration */
  HS_ERR_NUMERIC = 2, /* iteration failure or a violated verified bound */
  HS_ERR_IO = 3,      /* file could not be read or written */
  HS_ERR_INTERNAL = 4
} hs_status;

typedef struct hs_complex {
  double re;
  double im;
} hs_complex;

typedef enum hs_bc_kind {
  HS_BC_DIRICHLET = 0,
  HS_BC_NEUMANN = 1,
  HS_BC_ROBIN = 2,
  HS_BC_WHOLE_LINE = 3
} hs_bc_kind;

typedef struct hs_boundary {
  int kind;     /* hs_bc_kind */
  double sigma; /* Robin parameter, >= 0; ignored otherwise */
} hs_boundary;

/* Fields <= 0 fall back to the defaults (1e-9, 1e-12, 1e-9, 40). */
typedef struct hs_shoot_config {
  double rel_tol;
  double abs_tol;
  double newton_tol;
  int max_newton;
} hs_shoot_config;

typedef struct hs_potential hs_potential;

HS_API const char* hs_last_error(void);

/* ---- extremal g function ---- */

/* value = sup_y |e^{iay} - e^{-y}|; argmax gets NaN when the sup is only
 * approached (a = 0). argmax/attained may be NULL. */
HS_API hs_status hs_gfun(double a, double* value, double* argmax, int* attained);
HS_API hs_status hs_gfun_envelopes(double a, double* lower, double* upper);

/* ---- enclosure region ---- */

HS_API hs_status hs_bound_radius(double theta, double v_norm, hs_boundary bc,
                                 double* radius);
HS_API hs_status hs_contains(hs_complex lambda, double v_norm, hs_boundary bc,
                             int* inside, double* margin);
HS_API hs_status hs_curve_radius4(double theta, double* radius4);
HS_API hs_status hs_keller_constant(double gamma, double* value);
HS_API hs_status hs_cosh_ratio_sup(double gamma, double* sup, double* t_star);

/* ---- delta potentials ---- */

HS_API hs_status hs_extremal_delta(double m, double theta, hs_complex* c,
                                   double* b, hs_complex* lambda,
                                   double* g_value, double* bs_residual);
/* Writes up to cap eigenvalues; *count is the number found. Fails with
 * HS_ERR_DOMAIN when cap is too small (count still reports the total). */
HS_API hs_status hs_delta_eigenvalues(hs_complex c, double b, hs_complex* out,
                                      size_t cap, size_t* count);
HS_API hs_status hs_neumann_delta_eigenvalue(hs_complex c, hs_complex* lambda);
HS_API hs_status hs_robin_delta_eigenvalue(hs_complex c, double sigma,
                                           hs_complex* lambda);

/* ---- potentials (opaque handles) ---- */

HS_API hs_status hs_potential_gaussian_bumps(int n_bumps, double amplitude,
                                             double support, uint64_t seed,
                                             int whole_line, hs_potential** out);
HS_API hs_status hs_potential_sech2(hs_complex alpha, hs_potential** out);
HS_API hs_status hs_potential_mollified_delta(hs_complex c, double b,
                                              double width, hs_potential** out);
/* CSV columns x,re_v,im_v; samples interpolate linearly. */
HS_API hs_status hs_potential_from_csv(const char* path, int whole_line,
                                       hs_potential** out);
HS_API void hs_potential_free(hs_potential* p);
HS_API hs_status hs_potential_eval(const hs_potential* p, double x, hs_complex* v);
HS_API hs_status hs_potential_l1_norm(const hs_potential* p, double* norm);
HS_API hs_status hs_potential_support(const hs_potential* p, double* radius);

/* ---- Birman-Schwinger discretization ---- */

HS_API hs_status hs_bs_kernel(double x, double y, hs_complex mu, hs_boundary bc,
                              hs_complex* value);
HS_API hs_status hs_dirichlet_kernel_sup(hs_complex mu, double* sup);
HS_API hs_status hs_robin_sup_factor(hs_complex mu, double sigma, double* factor);
HS_API hs_status hs_bs_operator_norm(const hs_potential* p, int nodes,
                                     hs_complex mu, hs_boundary bc, double* norm);
HS_API hs_status hs_verify_norm_bound(const hs_potential* p, int nodes,
                                      hs_complex mu, hs_boundary bc,
                                      double* norm, double* rhs, int* ok);
HS_API hs_status hs_eigenvalue_certificate(const hs_potential* p, int nodes,
                                           hs_complex lambda, hs_boundary bc,
                                           double* certificate);

/* ---- complex shooting ---- */

HS_API hs_status hs_miss(const hs_potential* p, hs_complex lambda,
                         hs_boundary bc, const hs_shoot_config* cfg,
                         hs_complex* value);
/* seeds may be NULL with n_seeds = 0 to use the default grid. converged /
 * failed may be NULL. */
HS_API hs_status hs_find_eigenvalues(const hs_potential* p, hs_boundary bc,
                                     const hs_shoot_config* cfg,
                                     const hs_complex* seeds, size_t n_seeds,
                                     hs_complex* out, size_t cap, size_t* count,
                                     int* converged, int* failed);
/* Default seed grid; lambdas/margins/certificates hold up to cap entries. */
HS_API hs_status hs_enclosure_audit(const hs_potential* p, hs_boundary bc,
                                    const hs_shoot_config* cfg,
                                    int certificate_nodes, hs_complex* lambdas,
                                    double* margins, double* certificates,
                                    size_t cap, size_t* count, double* v_norm,
                                    int* pass);

/* ---- scenarios ---- */

/* Runs one scenario described as JSON (see the CLI documentation for the
 * accepted commands). A verification scenario whose check fails returns
 * HS_ERR_NUMERIC after writing its report. */
HS_API hs_status hs_scenario_run_json(const char* json_text);
HS_API hs_status hs_scenario_run_file(const char* path);

#ifdef __cplusplus
}
#endif

#endif /* HALFLINE_H */
