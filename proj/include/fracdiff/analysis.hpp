#pragma once

#include "fracdiff/solver.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fracdiff {

/// Discrete L2(0,1) norms of u(t_k, .) on a uniform time grid.
struct NormCurve {
    std::vector<double> times;
    std::vector<double> norms;
    /// log(norms[k]) where positive[k], 0 otherwise.
    std::vector<double> log_norms;
    std::vector<bool> positive;

    static NormCurve from_norms(std::vector<double> times, std::vector<double> norms);
    [[nodiscard]] std::size_t size() const noexcept { return norms.size(); }
    [[nodiscard]] bool all_positive() const;
};

/// sqrt of the trapezoid-rule integral of samples^2 with spacing dx.
double l2_norm(std::span<const double> samples, double dx);

NormCurve norm_curve(const SolutionField& field);

/// min over interior k of log_norms[k-1] - 2 log_norms[k] + log_norms[k+1].
/// Throws Error{DegenerateCurve} on a zero norm, Error{Argument} with fewer
/// than three points.
double convexity_defect(const NormCurve& curve);

/// Slack allowed on the defect: rel_tol * max(1, range of log_norms).
double convexity_tolerance(const NormCurve& curve, double rel_tol);

inline constexpr double kDefaultConvexityTolerance = 1e-8;

/// Smallest kappa with
///   ||u(t_k)|| <= kappa e^{b_sup} ||u(0)||^{1 - t_k/T} ||u(T)||^{t_k/T}
/// at every grid time. Throws Error{DegenerateCurve} if an endpoint norm is 0.
double kappa_fit(const NormCurve& curve, double b_sup_norm);

struct LogConvexityReport {
    double alpha = 0.0;
    NormCurve curve;
    double min_second_difference = 0.0;
    double tolerance = 0.0;
    bool is_log_convex = false;
    double kappa_fit = 0.0;
    double b_sup_norm = 0.0;
};

LogConvexityReport analyze(const SolutionField& field, double b_sup_norm,
                           double rel_tol = kDefaultConvexityTolerance);

/// Quantitative backward uniqueness: when ||u(T)|| <= threshold, the estimate
/// bounds every ||u(t_k)|| by kappa e^{b_sup} ||u_0||^{1-t_k/T} ||u(T)||^{t_k/T}.
struct BackwardUniquenessReport {
    bool applicable = false;
    double terminal_norm = 0.0;
    double max_norm = 0.0;
    double kappa = 1.0;
    bool kappa_fitted = false;  // false when an endpoint norm is zero; kappa = 1 then
    std::vector<double> norms;
    std::vector<double> bounds;
    double max_bound = 0.0;
};

BackwardUniquenessReport backward_uniqueness_probe(const SolutionField& field, double threshold,
                                                   double b_sup_norm = 0.0);

} // namespace fracdiff
