#include "fracdiff/operator_1d.hpp"

#include "fracdiff/error.hpp"

#include <cmath>
#include <sstream>

namespace fracdiff {

Grid1D::Grid1D(std::size_t m, std::size_t n, double t_final) : m_(m), n_(n), t_final_(t_final) {
    if (m < 2) {
        throw Error(ErrorCode::Argument, "grid needs at least 2 spatial intervals");
    }
    if (n < 1) {
        throw Error(ErrorCode::Argument, "grid needs at least 1 time step");
    }
    if (!(t_final > 0.0) || !std::isfinite(t_final)) {
        throw Error(ErrorCode::Argument, "final time must be positive and finite");
    }
}

std::vector<double> Grid1D::x_nodes() const {
    std::vector<double> xs(nodes());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xs[i] = x(i);
    }
    return xs;
}

CoefficientSet CoefficientSet::laplacian(const Grid1D& grid) {
    return {std::vector<double>(grid.nodes(), 1.0), std::vector<double>(grid.nodes(), 0.0),
            std::vector<double>(grid.nodes(), 0.0)};
}

void CoefficientSet::check_aligned(const Grid1D& grid) const {
    const std::size_t n = grid.nodes();
    if (a_diff.size() != n || b_drift.size() != n || p_pot.size() != n) {
        std::ostringstream os;
        os << "coefficient samples (" << a_diff.size() << ", " << b_drift.size() << ", "
           << p_pot.size() << ") do not match " << n << " grid nodes";
        throw Error(ErrorCode::Argument, os.str());
    }
}

void CoefficientSet::check_elliptic() const {
    for (std::size_t i = 0; i < a_diff.size(); ++i) {
        if (!(a_diff[i] > 0.0) || !std::isfinite(a_diff[i])) {
            std::ostringstream os;
            os << "diffusion coefficient must be positive: A[" << i << "] = " << a_diff[i];
            throw Error(ErrorCode::Ellipticity, os.str());
        }
    }
}

std::vector<double> TridiagonalMatrix::multiply(std::span<const double> x) const {
    const std::size_t n = size();
    if (x.size() != n) {
        throw Error(ErrorCode::Argument, "matrix-vector size mismatch");
    }
    std::vector<double> y(n);
    for (std::size_t r = 0; r < n; ++r) {
        double v = diagonal[r] * x[r];
        if (r > 0) {
            v += lower[r] * x[r - 1];
        }
        if (r + 1 < n) {
            v += upper[r] * x[r + 1];
        }
        y[r] = v;
    }
    return y;
}

TridiagonalMatrix TridiagonalMatrix::shifted_negation(double shift) const {
    TridiagonalMatrix out(size());
    for (std::size_t r = 0; r < size(); ++r) {
        out.lower[r] = -lower[r];
        out.diagonal[r] = shift - diagonal[r];
        out.upper[r] = -upper[r];
    }
    return out;
}

TridiagonalMatrix assemble(const Grid1D& grid, const CoefficientSet& coeffs) {
    coeffs.check_aligned(grid);
    coeffs.check_elliptic();

    const std::size_t m = grid.m();
    const double inv_dx2 = 1.0 / (grid.dx() * grid.dx());
    const double inv_2dx = 0.5 / grid.dx();
    const auto& a = coeffs.a_diff;

    TridiagonalMatrix mat(m - 1);
    for (std::size_t i = 1; i < m; ++i) {
        const std::size_t r = i - 1;
        const double a_west = 0.5 * (a[i - 1] + a[i]);
        const double a_east = 0.5 * (a[i] + a[i + 1]);
        const double drift = coeffs.b_drift[i] * inv_2dx;
        mat.diagonal[r] = -(a_west + a_east) * inv_dx2 + coeffs.p_pot[i];
        if (i > 1) {
            mat.lower[r] = a_west * inv_dx2 - drift;
        }
        if (i + 1 < m) {
            mat.upper[r] = a_east * inv_dx2 + drift;
        }
    }
    return mat;
}

TridiagonalSolver::TridiagonalSolver(const TridiagonalMatrix& mat)
    : lower_(mat.lower), upper_ratio_(mat.size()), pivots_(mat.size()) {
    const std::size_t n = mat.size();
    if (n == 0 || mat.lower.size() != n || mat.upper.size() != n) {
        throw Error(ErrorCode::Argument, "tridiagonal bands must be non-empty and equally sized");
    }
    for (std::size_t r = 0; r < n; ++r) {
        double pivot = mat.diagonal[r];
        if (r > 0) {
            pivot -= mat.lower[r] * upper_ratio_[r - 1];
        }
        if (pivot == 0.0 || !std::isfinite(pivot)) {
            std::ostringstream os;
            os << "zero pivot in tridiagonal solve at row " << r;
            throw Error(ErrorCode::Singular, os.str());
        }
        pivots_[r] = pivot;
        upper_ratio_[r] = (r + 1 < n) ? mat.upper[r] / pivot : 0.0;
    }
}

void TridiagonalSolver::solve_in_place(std::span<double> rhs) const {
    const std::size_t n = size();
    if (rhs.size() != n) {
        throw Error(ErrorCode::Argument, "right-hand side size does not match the matrix");
    }
    rhs[0] /= pivots_[0];
    for (std::size_t r = 1; r < n; ++r) {
        rhs[r] = (rhs[r] - lower_[r] * rhs[r - 1]) / pivots_[r];
    }
    for (std::size_t r = n - 1; r-- > 0;) {
        rhs[r] -= upper_ratio_[r] * rhs[r + 1];
    }
}

std::vector<double> TridiagonalSolver::solve(std::span<const double> rhs) const {
    std::vector<double> x(rhs.begin(), rhs.end());
    solve_in_place(x);
    return x;
}

std::vector<double> thomas_solve(const TridiagonalMatrix& mat, std::span<const double> rhs) {
    return TridiagonalSolver(mat).solve(rhs);
}

} // namespace fracdiff
