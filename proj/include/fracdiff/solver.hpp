#pragma once

#include "fracdiff/operator_1d.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fracdiff {

/// Caputo time-fractional diffusion d^alpha u = L u on (0,T) x (0,1),
/// u = 0 at x = 0 and x = 1, u(0, x) = initial.
struct FractionalDiffusionProblem {
    Grid1D grid;
    CoefficientSet coeffs;
    double alpha;
    std::vector<double> initial;

    /// Checks order, sample alignment, ellipticity, and that the initial
    /// samples are finite with exactly zero boundary values.
    void validate() const;
};

/// (N+1) x (M+1) node values, row k holding u(t_k, .).
class SolutionField {
public:
    SolutionField(Grid1D grid, double alpha);
    /// Wraps existing values; throws Error{Argument} on a size mismatch.
    SolutionField(Grid1D grid, double alpha, std::vector<double> values);

    [[nodiscard]] const Grid1D& grid() const noexcept { return grid_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] std::size_t rows() const noexcept { return grid_.n() + 1; }
    [[nodiscard]] std::size_t cols() const noexcept { return grid_.m() + 1; }

    [[nodiscard]] std::span<const double> row(std::size_t k) const {
        return {values_.data() + k * cols(), cols()};
    }
    [[nodiscard]] std::span<double> row(std::size_t k) {
        return {values_.data() + k * cols(), cols()};
    }
    [[nodiscard]] double at(std::size_t k, std::size_t i) const { return values_[k * cols() + i]; }
    [[nodiscard]] double& at(std::size_t k, std::size_t i) { return values_[k * cols() + i]; }

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double max_abs() const noexcept;

private:
    Grid1D grid_;
    double alpha_;
    std::vector<double> values_;
};

/// Marches the implicit L1 scheme: at each step k solves
///   (mu I - L_h) u^k = mu (sum_{j=1}^{k-1} (a_{k-j-1} - a_{k-j}) u^j + a_{k-1} u^0),
/// mu = dt^-alpha / Gamma(2 - alpha). The step matrix is factored once.
/// Throws Error{Singular} (naming the step) or Error{Blowup} (naming k, i).
SolutionField solve_forward(const FractionalDiffusionProblem& problem);

/// max over k >= 1 and interior i of |D^alpha u_i^k - (L_h u^k)_i|, with the
/// Caputo term rebuilt per node by caputo_l1_apply.
double scheme_residual(const SolutionField& field, const FractionalDiffusionProblem& problem);

} // namespace fracdiff
