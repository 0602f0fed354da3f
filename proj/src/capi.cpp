#include "fracdiff/fracdiff.h"

#include "fracdiff/analysis.hpp"
#include "fracdiff/caputo_l1.hpp"
#include "fracdiff/error.hpp"
#include "fracdiff/operator_1d.hpp"
#include "fracdiff/presets.hpp"
#include "fracdiff/solver.hpp"
#include "fracdiff/special_functions.hpp"
#include "fracdiff/symmetrization.hpp"

#include <algorithm>
#include <new>
#include <span>
#include <string>
#include <vector>

struct fd_problem {
    fracdiff::FractionalDiffusionProblem problem;
};

struct fd_solution {
    fracdiff::SolutionField field;
};

struct fd_report {
    fracdiff::LogConvexityReport report;
};

namespace {

thread_local std::string g_last_error;

fd_status to_status(fracdiff::ErrorCode code) {
    using fracdiff::ErrorCode;
    switch (code) {
    case ErrorCode::Domain: return FD_ERR_DOMAIN;
    case ErrorCode::Accuracy: return FD_ERR_ACCURACY;
    case ErrorCode::Argument: return FD_ERR_ARGUMENT;
    case ErrorCode::Ellipticity: return FD_ERR_ELLIPTICITY;
    case ErrorCode::Singular: return FD_ERR_SINGULAR;
    case ErrorCode::Blowup: return FD_ERR_BLOWUP;
    case ErrorCode::DegenerateCurve: return FD_ERR_DEGENERATE_CURVE;
    case ErrorCode::Parse: return FD_ERR_PARSE;
    case ErrorCode::Io: return FD_ERR_IO;
    }
    return FD_ERR_INTERNAL;
}

template <typename F>
fd_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return FD_OK;
    } catch (const fracdiff::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FD_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FD_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown exception";
        return FD_ERR_INTERNAL;
    }
}

void require(const void* ptr, const char* name) {
    if (ptr == nullptr) {
        throw fracdiff::Error(fracdiff::ErrorCode::Argument, std::string(name) + " is NULL");
    }
}

std::vector<double> copy_nodes(const double* data, std::size_t count, const char* name) {
    require(data, name);
    return {data, data + count};
}

fracdiff::CoefficientSet coefficients(std::size_t m, const double* a, const double* b,
                                      const double* p) {
    return {copy_nodes(a, m + 1, "a_diff"), copy_nodes(b, m + 1, "b_drift"),
            copy_nodes(p, m + 1, "p_pot")};
}

// Grid with a placeholder time axis for node-only operations.
fracdiff::Grid1D spatial_grid(std::size_t m) { return fracdiff::Grid1D(m, 1, 1.0); }

void write(std::span<const double> src, double* dst) {
    if (dst != nullptr) {
        std::copy(src.begin(), src.end(), dst);
    }
}

fd_assumption_h to_c(const fracdiff::AssumptionHReport& r) {
    return {r.feasible ? 1 : 0, r.smooth_flag ? 1 : 0, r.max_second_difference, r.threshold,
            r.jump_node};
}

} // namespace

extern "C" {

const char* fd_status_name(fd_status status) {
    switch (status) {
    case FD_OK: return "ok";
    case FD_ERR_DOMAIN: return "domain";
    case FD_ERR_ACCURACY: return "accuracy";
    case FD_ERR_ARGUMENT: return "argument";
    case FD_ERR_ELLIPTICITY: return "ellipticity";
    case FD_ERR_SINGULAR: return "singular";
    case FD_ERR_BLOWUP: return "blowup";
    case FD_ERR_DEGENERATE_CURVE: return "degenerate_curve";
    case FD_ERR_PARSE: return "parse";
    case FD_ERR_IO: return "io";
    case FD_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* fd_last_error_message(void) { return g_last_error.c_str(); }

fd_status fd_gamma(double x, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = fracdiff::gamma(x);
    });
}

fd_status fd_mittag_leffler(double alpha, double z, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = fracdiff::mittag_leffler(alpha, z);
    });
}

fd_status fd_symmetric_exact(double alpha, double t, double x, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = fracdiff::symmetric_exact(alpha, t, x);
    });
}

fd_status fd_l1_weights(double alpha, size_t k, double* out) {
    return guarded([&] {
        require(out, "out");
        write(fracdiff::l1_weights(alpha, k), out);
    });
}

fd_status fd_caputo_l1_apply(const double* history, size_t length, double alpha, double dt,
                             double* out) {
    return guarded([&] {
        require(history, "history");
        require(out, "out");
        *out = fracdiff::caputo_l1_apply({history, length}, alpha, dt);
    });
}

fd_status fd_assemble(size_t m, const double* a_diff, const double* b_drift, const double* p_pot,
                      double* lower, double* diagonal, double* upper) {
    return guarded([&] {
        require(lower, "lower");
        require(diagonal, "diagonal");
        require(upper, "upper");
        const auto mat = fracdiff::assemble(spatial_grid(m), coefficients(m, a_diff, b_drift, p_pot));
        write(mat.lower, lower);
        write(mat.diagonal, diagonal);
        write(mat.upper, upper);
    });
}

fd_status fd_thomas_solve(size_t size, const double* lower, const double* diagonal,
                          const double* upper, const double* rhs, double* x) {
    return guarded([&] {
        require(x, "x");
        fracdiff::TridiagonalMatrix mat;
        mat.lower = copy_nodes(lower, size, "lower");
        mat.diagonal = copy_nodes(diagonal, size, "diagonal");
        mat.upper = copy_nodes(upper, size, "upper");
        require(rhs, "rhs");
        write(fracdiff::thomas_solve(mat, {rhs, size}), x);
    });
}

fd_status fd_problem_create(size_t m, size_t n, double t_final, double alpha,
                            const double* a_diff, const double* b_drift, const double* p_pot,
                            const double* initial, fd_problem** out) {
    return guarded([&] {
        require(out, "out");
        fracdiff::FractionalDiffusionProblem problem{
            fracdiff::Grid1D(m, n, t_final), coefficients(m, a_diff, b_drift, p_pot), alpha,
            copy_nodes(initial, m + 1, "initial")};
        problem.validate();
        *out = new fd_problem{std::move(problem)};
    });
}

fd_status fd_problem_create_preset(int example_id, double alpha, size_t m, size_t n,
                                   double t_final, fd_problem** out) {
    return guarded([&] {
        require(out, "out");
        auto problem = fracdiff::preset_problem(example_id, alpha, fracdiff::Grid1D(m, n, t_final));
        problem.validate();
        *out = new fd_problem{std::move(problem)};
    });
}

void fd_problem_destroy(fd_problem* problem) { delete problem; }

size_t fd_problem_nodes(const fd_problem* problem) {
    return problem == nullptr ? 0 : problem->problem.grid.nodes();
}

fd_status fd_problem_samples(const fd_problem* problem, double* a_diff, double* b_drift,
                             double* p_pot, double* initial) {
    return guarded([&] {
        require(problem, "problem");
        const auto& p = problem->problem;
        write(p.coeffs.a_diff, a_diff);
        write(p.coeffs.b_drift, b_drift);
        write(p.coeffs.p_pot, p_pot);
        write(p.initial, initial);
    });
}

fd_status fd_solve_forward(const fd_problem* problem, fd_solution** out) {
    return guarded([&] {
        require(problem, "problem");
        require(out, "out");
        *out = new fd_solution{fracdiff::solve_forward(problem->problem)};
    });
}

fd_status fd_solution_create(size_t m, size_t n, double t_final, double alpha,
                             const double* values, fd_solution** out) {
    return guarded([&] {
        require(out, "out");
        const fracdiff::Grid1D grid(m, n, t_final);
        *out = new fd_solution{fracdiff::SolutionField(
            grid, alpha, copy_nodes(values, (n + 1) * (m + 1), "values"))};
    });
}

void fd_solution_destroy(fd_solution* solution) { delete solution; }

size_t fd_solution_rows(const fd_solution* solution) {
    return solution == nullptr ? 0 : solution->field.rows();
}

size_t fd_solution_cols(const fd_solution* solution) {
    return solution == nullptr ? 0 : solution->field.cols();
}

double fd_solution_alpha(const fd_solution* solution) {
    return solution == nullptr ? 0.0 : solution->field.alpha();
}

double fd_solution_t_final(const fd_solution* solution) {
    return solution == nullptr ? 0.0 : solution->field.grid().t_final();
}

const double* fd_solution_data(const fd_solution* solution) {
    return solution == nullptr ? nullptr : solution->field.values().data();
}

fd_status fd_scheme_residual(const fd_solution* solution, const fd_problem* problem, double* out) {
    return guarded([&] {
        require(solution, "solution");
        require(problem, "problem");
        require(out, "out");
        *out = fracdiff::scheme_residual(solution->field, problem->problem);
    });
}

fd_status fd_potential_b(size_t m, const double* a_diff, const double* b_drift, double* b_out) {
    return guarded([&] {
        require(b_out, "b_out");
        const std::vector<double> zeros(m + 1, 0.0);
        write(fracdiff::potential_b(spatial_grid(m), coefficients(m, a_diff, b_drift, zeros.data())),
              b_out);
    });
}

fd_status fd_symmetrized_potential(size_t m, const double* a_diff, const double* p_pot,
                                   const double* b, double* q_out) {
    return guarded([&] {
        require(q_out, "q_out");
        const std::vector<double> zeros(m + 1, 0.0);
        const auto coeffs = coefficients(m, a_diff, zeros.data(), p_pot);
        write(fracdiff::symmetrized_potential(spatial_grid(m), coeffs, copy_nodes(b, m + 1, "b")),
              q_out);
    });
}

fd_status fd_transform(const double* values, const double* b, size_t length,
                       fd_direction direction, double* out) {
    return guarded([&] {
        require(values, "values");
        require(b, "b");
        require(out, "out");
        const auto dir = direction == FD_TO_V ? fracdiff::TransformDirection::ToV
                                              : fracdiff::TransformDirection::ToU;
        write(fracdiff::transform(std::span<const double>(values, length),
                                  std::span<const double>(b, length), dir),
              out);
    });
}

fd_status fd_check_assumption_h(size_t m, const double* a_diff, const double* b_drift,
                                double jump_threshold, fd_assumption_h* out) {
    return guarded([&] {
        require(out, "out");
        const std::vector<double> zeros(m + 1, 0.0);
        *out = to_c(fracdiff::check_assumption_h(
            spatial_grid(m), coefficients(m, a_diff, b_drift, zeros.data()), jump_threshold));
    });
}

fd_status fd_problem_symmetrization(const fd_problem* problem, double jump_threshold,
                                    fd_symmetrization* info, fd_assumption_h* check,
                                    double* b_out, double* q_out) {
    return guarded([&] {
        require(problem, "problem");
        const auto& p = problem->problem;
        const auto data = fracdiff::symmetrize(p.grid, p.coeffs, jump_threshold);
        if (info != nullptr) {
            *info = {data.b_sup_norm, data.smooth_flag ? 1 : 0};
        }
        if (check != nullptr) {
            *check = to_c(fracdiff::check_assumption_h(p.grid, p.coeffs, jump_threshold));
        }
        write(data.b_samples, b_out);
        write(data.q_samples, q_out);
    });
}

fd_status fd_problem_symmetrized(const fd_problem* problem, double jump_threshold,
                                 fd_problem** out) {
    return guarded([&] {
        require(problem, "problem");
        require(out, "out");
        const auto& p = problem->problem;
        const auto data = fracdiff::symmetrize(p.grid, p.coeffs, jump_threshold);
        *out = new fd_problem{fracdiff::symmetrized_problem(p, data)};
    });
}

fd_status fd_symmetrization_check_preset(int example_id, double alpha, size_t m, size_t n,
                                         double t_final, double jump_threshold,
                                         fd_equivalence* out, fd_solution** via_symmetrized) {
    return guarded([&] {
        require(out, "out");
        const fracdiff::Grid1D grid(m, n, t_final);
        auto run = fracdiff::check_symmetrization_equivalence(
            [&](const fracdiff::Grid1D& g) { return fracdiff::preset_problem(example_id, alpha, g); },
            grid, jump_threshold);
        const auto& r = run.report;
        *out = {r.max_discrepancy, r.error_estimate_direct, r.error_estimate_symmetrized,
                r.tolerance, r.passed ? 1 : 0};
        if (via_symmetrized != nullptr) {
            *via_symmetrized = new fd_solution{std::move(run.via_symmetrized)};
        }
    });
}

fd_status fd_l2_norm(const double* samples, size_t length, double dx, double* out) {
    return guarded([&] {
        require(samples, "samples");
        require(out, "out");
        *out = fracdiff::l2_norm({samples, length}, dx);
    });
}

fd_status fd_convexity_defect(const double* times, const double* norms, size_t length,
                              double* out) {
    return guarded([&] {
        require(out, "out");
        const auto curve = fracdiff::NormCurve::from_norms(copy_nodes(times, length, "times"),
                                                           copy_nodes(norms, length, "norms"));
        *out = fracdiff::convexity_defect(curve);
    });
}

fd_status fd_kappa_fit(const double* times, const double* norms, size_t length, double b_sup_norm,
                       double* out) {
    return guarded([&] {
        require(out, "out");
        const auto curve = fracdiff::NormCurve::from_norms(copy_nodes(times, length, "times"),
                                                           copy_nodes(norms, length, "norms"));
        *out = fracdiff::kappa_fit(curve, b_sup_norm);
    });
}

fd_status fd_analyze(const fd_solution* solution, double b_sup_norm, double rel_tol,
                     fd_report** out) {
    return guarded([&] {
        require(solution, "solution");
        require(out, "out");
        const double tol = rel_tol > 0.0 ? rel_tol : fracdiff::kDefaultConvexityTolerance;
        *out = new fd_report{fracdiff::analyze(solution->field, b_sup_norm, tol)};
    });
}

void fd_report_destroy(fd_report* report) { delete report; }

fd_status fd_report_get_summary(const fd_report* report, fd_report_summary* out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        const auto& r = report->report;
        *out = {r.alpha,     r.min_second_difference, r.tolerance,       r.is_log_convex ? 1 : 0,
                r.kappa_fit, r.b_sup_norm,            r.curve.size()};
    });
}

const double* fd_report_times(const fd_report* report) {
    return report == nullptr ? nullptr : report->report.curve.times.data();
}

const double* fd_report_norms(const fd_report* report) {
    return report == nullptr ? nullptr : report->report.curve.norms.data();
}

const double* fd_report_log_norms(const fd_report* report) {
    return report == nullptr ? nullptr : report->report.curve.log_norms.data();
}

fd_status fd_backward_uniqueness_probe(const fd_solution* solution, double threshold,
                                       double b_sup_norm, fd_backward_probe* out,
                                       double* bounds) {
    return guarded([&] {
        require(solution, "solution");
        require(out, "out");
        const auto r = fracdiff::backward_uniqueness_probe(solution->field, threshold, b_sup_norm);
        *out = {r.applicable ? 1 : 0, r.terminal_norm, r.max_norm, r.kappa,
                r.kappa_fitted ? 1 : 0, r.max_bound};
        if (r.applicable) {
            write(r.bounds, bounds);
        }
    });
}

} // extern "C"
