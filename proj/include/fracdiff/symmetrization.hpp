#pragma once

#include "fracdiff/operator_1d.hpp"
#include "fracdiff/solver.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracdiff {

// Gradient-drift symmetrization. When B = A b', the substitution v = e^{b/2} u
// turns (A u')' + B u' + p u into the self-adjoint (A v')' + q v with
//   q = p - (A b')'/2 - A (b')^2 / 4.

/// b(x_i) = trapezoid integral of B/A from 0 to x_i, so b(0) = 0.
std::vector<double> potential_b(const Grid1D& grid, const CoefficientSet& coeffs);

/// q_i = p_i - D(A Db)_i / 2 - A_i (Db)_i^2 / 4, D the centered difference
/// (second-order one-sided at the boundary). On the two outermost nodes at
/// each end the divergence is taken as A' b' + A b'' to keep second order.
std::vector<double> symmetrized_potential(const Grid1D& grid, const CoefficientSet& coeffs,
                                          std::span<const double> b);

enum class TransformDirection { ToV, ToU };

/// ToV multiplies pointwise by e^{b/2}; ToU by e^{-b/2}.
std::vector<double> transform(std::span<const double> values, std::span<const double> b,
                              TransformDirection direction);
/// Applies transform to every time row.
SolutionField transform(const SolutionField& field, std::span<const double> b,
                        TransformDirection direction);

/// sup-norm of b after the constant shift that minimizes it, (max b - min b) / 2.
double centered_sup_norm(std::span<const double> b);

struct AssumptionHReport {
    bool feasible = true;          // b always exists in 1D for integrable B/A
    bool smooth_flag = true;       // false when a kink in b (jump in B/A) is detected
    double max_second_difference = 0.0;
    double threshold = 0.0;
    std::size_t jump_node = 0;     // node of the largest second difference
};

inline constexpr double kDefaultJumpThreshold = 10.0;

/// Flags b outside W^{2,inf} numerically: a kink in b makes the second
/// difference scale like dx rather than dx^2. The flag trips when some
/// |b_{i-1} - 2 b_i + b_{i+1}| exceeds
///   jump_threshold * max(median |second difference|, dx^2 * max |B/A|).
AssumptionHReport check_assumption_h(const Grid1D& grid, const CoefficientSet& coeffs,
                                     double jump_threshold = kDefaultJumpThreshold);

struct SymmetrizationData {
    std::vector<double> b_samples;  // b(0) = 0 normalization
    std::vector<double> q_samples;
    double b_sup_norm = 0.0;        // centered_sup_norm(b_samples)
    bool smooth_flag = true;
};

SymmetrizationData symmetrize(const Grid1D& grid, const CoefficientSet& coeffs,
                              double jump_threshold = kDefaultJumpThreshold);

/// Same grid and diffusion, zero drift, potential q, initial datum e^{b/2} u_0.
FractionalDiffusionProblem symmetrized_problem(const FractionalDiffusionProblem& problem,
                                               const SymmetrizationData& data);

/// Direct solve against symmetrized solve + back-transform.
struct EquivalenceReport {
    double max_discrepancy = 0.0;
    double error_estimate_direct = 0.0;
    double error_estimate_symmetrized = 0.0;
    double tolerance = 0.0;  // 2 * max of the two estimates
    bool passed = false;
};

struct EquivalenceRun {
    SolutionField direct;
    SolutionField via_symmetrized;  // already mapped back with ToU
    SymmetrizationData data;
    EquivalenceReport report;
};

/// Builds the problem on `grid` and on the grid with N and M doubled; each
/// route's discretization error is estimated as the max node difference
/// between its coarse solution and its refined solution restricted to the
/// coarse nodes. build(grid) must sample the same continuum problem.
EquivalenceRun check_symmetrization_equivalence(
    const std::function<FractionalDiffusionProblem(const Grid1D&)>& build, const Grid1D& grid,
    double jump_threshold = kDefaultJumpThreshold);

} // namespace fracdiff
