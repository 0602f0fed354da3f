#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracdiff {

/// Uniform space-time grid on [0, T] x [0, 1].
class Grid1D {
public:
    /// m: spatial intervals (>= 2), n: time steps (>= 1), t_final > 0.
    Grid1D(std::size_t m, std::size_t n, double t_final);

    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] double t_final() const noexcept { return t_final_; }
    [[nodiscard]] double dx() const noexcept { return 1.0 / static_cast<double>(m_); }
    [[nodiscard]] double dt() const noexcept { return t_final_ / static_cast<double>(n_); }
    [[nodiscard]] double x(std::size_t i) const noexcept {
        return static_cast<double>(i) / static_cast<double>(m_);
    }
    [[nodiscard]] double t(std::size_t k) const noexcept {
        return t_final_ * static_cast<double>(k) / static_cast<double>(n_);
    }
    [[nodiscard]] std::size_t nodes() const noexcept { return m_ + 1; }
    [[nodiscard]] std::size_t interior() const noexcept { return m_ - 1; }
    [[nodiscard]] std::vector<double> x_nodes() const;

    bool operator==(const Grid1D&) const = default;

private:
    std::size_t m_;
    std::size_t n_;
    double t_final_;
};

/// Node samples of the diffusion A(x), drift B(x) and potential p(x).
struct CoefficientSet {
    std::vector<double> a_diff;
    std::vector<double> b_drift;
    std::vector<double> p_pot;

    /// A = 1, B = 0, p = 0 on every node.
    static CoefficientSet laplacian(const Grid1D& grid);

    /// Throws Error{Argument} when sample counts differ from grid.nodes().
    void check_aligned(const Grid1D& grid) const;
    /// Throws Error{Ellipticity} naming the first node with A <= 0.
    void check_elliptic() const;
};

/// Tridiagonal matrix over the interior nodes 1..M-1. Row r couples
/// lower[r] * u_{r-1} + diagonal[r] * u_r + upper[r] * u_{r+1};
/// lower[0] and upper[size-1] are unused and kept at zero.
struct TridiagonalMatrix {
    std::vector<double> lower;
    std::vector<double> diagonal;
    std::vector<double> upper;

    TridiagonalMatrix() = default;
    explicit TridiagonalMatrix(std::size_t size) : lower(size), diagonal(size), upper(size) {}

    [[nodiscard]] std::size_t size() const noexcept { return diagonal.size(); }
    [[nodiscard]] std::vector<double> multiply(std::span<const double> x) const;
    /// shift * I - (*this)
    [[nodiscard]] TridiagonalMatrix shifted_negation(double shift) const;
};

/// Discrete L_h u = (A u_x)_x + B u_x + p u with homogeneous Dirichlet rows
/// eliminated. Flux form with arithmetic-mean half-node diffusion, centered
/// drift. Throws Error{Ellipticity} for a non-positive A sample.
TridiagonalMatrix assemble(const Grid1D& grid, const CoefficientSet& coeffs);

/// Thomas factorization, reusable across right-hand sides.
class TridiagonalSolver {
public:
    /// Throws Error{Singular} on a zero (or non-finite) pivot.
    explicit TridiagonalSolver(const TridiagonalMatrix& mat);

    [[nodiscard]] std::size_t size() const noexcept { return pivots_.size(); }
    void solve_in_place(std::span<double> rhs) const;
    [[nodiscard]] std::vector<double> solve(std::span<const double> rhs) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_ratio_;
    std::vector<double> pivots_;
};

std::vector<double> thomas_solve(const TridiagonalMatrix& mat, std::span<const double> rhs);

} // namespace fracdiff
