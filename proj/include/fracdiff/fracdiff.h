/*
 * C interface to the fracdiff library: time-fractional diffusion in 1D with
 * the L1 Caputo scheme, drift symmetrization and log-convexity analysis.
 *
 * Every fallible call returns an fd_status. On failure a description is
 * available from fd_last_error_message() on the calling thread. Handles are
 * opaque, immutable after creation and may be shared across threads;
 * each *_create / *_solve result must be released with its *_destroy.
 * Node arrays have m + 1 entries (x_i = i / m); fields are row-major with
 * n + 1 rows (t_k = k T / n) of m + 1 columns.
 */
#ifndef FRACDIFF_FRACDIFF_H
#define FRACDIFF_FRACDIFF_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(FRACDIFF_BUILDING_LIBRARY)
#    define FRACDIFF_API __declspec(dllexport)
#  else
#    define FRACDIFF_API __declspec(dllimport)
#  endif
#else
#  define FRACDIFF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fd_status {
    FD_OK = 0,
    FD_ERR_DOMAIN = 1,
    FD_ERR_ACCURACY = 2,
    FD_ERR_ARGUMENT = 3,
    FD_ERR_ELLIPTICITY = 4,
    FD_ERR_SINGULAR = 5,
    FD_ERR_BLOWUP = 6,
    FD_ERR_DEGENERATE_CURVE = 7,
    FD_ERR_PARSE = 8,
    FD_ERR_IO = 9,
    FD_ERR_INTERNAL = 10
} fd_status;

typedef struct fd_problem fd_problem;
typedef struct fd_solution fd_solution;
typedef struct fd_report fd_report;

/* Short lowercase name, e.g. "ellipticity". Never NULL. */
FRACDIFF_API const char* fd_status_name(fd_status status);
/* Message of the last failure on this thread; "" if none. */
FRACDIFF_API const char* fd_last_error_message(void);

/* ---- special functions ------------------------------------------------ */

FRACDIFF_API fd_status fd_gamma(double x, double* out);
FRACDIFF_API fd_status fd_mittag_leffler(double alpha, double z, double* out);
/* E_alpha(-pi^2 t^alpha) sin(pi x), the exact solution of preset 1. */
FRACDIFF_API fd_status fd_symmetric_exact(double alpha, double t, double x, double* out);

/* ---- L1 Caputo scheme ------------------------------------------------- */

/* Writes a_0..a_{k-1} into out[k]. */
FRACDIFF_API fd_status fd_l1_weights(double alpha, size_t k, double* out);
/* history holds u(t_0)..u(t_k), length >= 2. */
FRACDIFF_API fd_status fd_caputo_l1_apply(const double* history, size_t length, double alpha,
                                          double dt, double* out);

/* ---- spatial operator ------------------------------------------------- */

/* Coefficients have m + 1 node samples; bands have m - 1 entries. */
FRACDIFF_API fd_status fd_assemble(size_t m, const double* a_diff, const double* b_drift,
                                   const double* p_pot, double* lower, double* diagonal,
                                   double* upper);
FRACDIFF_API fd_status fd_thomas_solve(size_t size, const double* lower, const double* diagonal,
                                       const double* upper, const double* rhs, double* x);

/* ---- problems and solutions ------------------------------------------- */

FRACDIFF_API fd_status fd_problem_create(size_t m, size_t n, double t_final, double alpha,
                                         const double* a_diff, const double* b_drift,
                                         const double* p_pot, const double* initial,
                                         fd_problem** out);
/* example_id 1 (no drift), 2 (B = 1), 3 (B = Heaviside(x - 1/2)). */
FRACDIFF_API fd_status fd_problem_create_preset(int example_id, double alpha, size_t m, size_t n,
                                                double t_final, fd_problem** out);
FRACDIFF_API void fd_problem_destroy(fd_problem* problem);
FRACDIFF_API size_t fd_problem_nodes(const fd_problem* problem);
/* Copies the node samples; any output pointer may be NULL. */
FRACDIFF_API fd_status fd_problem_samples(const fd_problem* problem, double* a_diff,
                                          double* b_drift, double* p_pot, double* initial);

FRACDIFF_API fd_status fd_solve_forward(const fd_problem* problem, fd_solution** out);
/* Wraps stored values, e.g. a field read back from disk. */
FRACDIFF_API fd_status fd_solution_create(size_t m, size_t n, double t_final, double alpha,
                                          const double* values, fd_solution** out);
FRACDIFF_API void fd_solution_destroy(fd_solution* solution);
FRACDIFF_API size_t fd_solution_rows(const fd_solution* solution);
FRACDIFF_API size_t fd_solution_cols(const fd_solution* solution);
FRACDIFF_API double fd_solution_alpha(const fd_solution* solution);
FRACDIFF_API double fd_solution_t_final(const fd_solution* solution);
/* rows * cols values, row-major; valid for the lifetime of the handle. */
FRACDIFF_API const double* fd_solution_data(const fd_solution* solution);
FRACDIFF_API fd_status fd_scheme_residual(const fd_solution* solution, const fd_problem* problem,
                                          double* out);

/* ---- symmetrization --------------------------------------------------- */

typedef enum fd_direction { FD_TO_V = 0, FD_TO_U = 1 } fd_direction;

typedef struct fd_assumption_h {
    int feasible;
    int smooth_flag;
    double max_second_difference;
    double threshold;
    size_t jump_node;
} fd_assumption_h;

typedef struct fd_symmetrization {
    double b_sup_norm;
    int smooth_flag;
} fd_symmetrization;

FRACDIFF_API fd_status fd_potential_b(size_t m, const double* a_diff, const double* b_drift,
                                      double* b_out);
FRACDIFF_API fd_status fd_symmetrized_potential(size_t m, const double* a_diff,
                                                const double* p_pot, const double* b,
                                                double* q_out);
FRACDIFF_API fd_status fd_transform(const double* values, const double* b, size_t length,
                                    fd_direction direction, double* out);
FRACDIFF_API fd_status fd_check_assumption_h(size_t m, const double* a_diff,
                                             const double* b_drift, double jump_threshold,
                                             fd_assumption_h* out);
/* b_out and q_out (m + 1 entries each) may be NULL. */
FRACDIFF_API fd_status fd_problem_symmetrization(const fd_problem* problem, double jump_threshold,
                                                 fd_symmetrization* info, fd_assumption_h* check,
                                                 double* b_out, double* q_out);
/* Zero-drift problem with potential q and initial datum e^{b/2} u_0. */
FRACDIFF_API fd_status fd_problem_symmetrized(const fd_problem* problem, double jump_threshold,
                                              fd_problem** out);

typedef struct fd_equivalence {
    double max_discrepancy;
    double error_estimate_direct;
    double error_estimate_symmetrized;
    double tolerance;
    int passed;
} fd_equivalence;

/* Direct vs symmetrized solve of a preset; error estimates from a run with
 * m and n doubled. via_symmetrized (mapped back to u) may be NULL. */
FRACDIFF_API fd_status fd_symmetrization_check_preset(int example_id, double alpha, size_t m,
                                                      size_t n, double t_final,
                                                      double jump_threshold, fd_equivalence* out,
                                                      fd_solution** via_symmetrized);

/* ---- analysis --------------------------------------------------------- */

FRACDIFF_API fd_status fd_l2_norm(const double* samples, size_t length, double dx, double* out);
FRACDIFF_API fd_status fd_convexity_defect(const double* times, const double* norms,
                                           size_t length, double* out);
FRACDIFF_API fd_status fd_kappa_fit(const double* times, const double* norms, size_t length,
                                    double b_sup_norm, double* out);

typedef struct fd_report_summary {
    double alpha;
    double min_second_difference;
    double tolerance;
    int is_log_convex;
    double kappa_fit;
    double b_sup_norm;
    size_t points;
} fd_report_summary;

/* rel_tol <= 0 selects the default 1e-8. */
FRACDIFF_API fd_status fd_analyze(const fd_solution* solution, double b_sup_norm, double rel_tol,
                                  fd_report** out);
FRACDIFF_API void fd_report_destroy(fd_report* report);
FRACDIFF_API fd_status fd_report_get_summary(const fd_report* report, fd_report_summary* out);
/* Arrays of summary.points entries, valid for the lifetime of the handle. */
FRACDIFF_API const double* fd_report_times(const fd_report* report);
FRACDIFF_API const double* fd_report_norms(const fd_report* report);
FRACDIFF_API const double* fd_report_log_norms(const fd_report* report);

typedef struct fd_backward_probe {
    int applicable;
    double terminal_norm;
    double max_norm;
    double kappa;
    int kappa_fitted;
    double max_bound;
} fd_backward_probe;

/* bounds (rows entries) may be NULL; untouched when the probe is inapplicable. */
FRACDIFF_API fd_status fd_backward_uniqueness_probe(const fd_solution* solution, double threshold,
                                                    double b_sup_norm, fd_backward_probe* out,
                                                    double* bounds);

#ifdef __cplusplus
}
#endif

#endif /* FRACDIFF_FRACDIFF_H */
