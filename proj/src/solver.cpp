#include "fracdiff/solver.hpp"

#include "fracdiff/caputo_l1.hpp"
#include "fracdiff/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracdiff {

void FractionalDiffusionProblem::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        std::ostringstream os;
        os << "fractional order must lie in (0, 1], got " << alpha;
        throw Error(ErrorCode::Domain, os.str());
    }
    coeffs.check_aligned(grid);
    coeffs.check_elliptic();
    if (initial.size() != grid.nodes()) {
        throw Error(ErrorCode::Argument, "initial datum does not match the grid");
    }
    for (std::size_t i = 0; i < initial.size(); ++i) {
        if (!std::isfinite(initial[i])) {
            std::ostringstream os;
            os << "initial datum is not finite at node " << i;
            throw Error(ErrorCode::Argument, os.str());
        }
    }
    if (initial.front() != 0.0 || initial.back() != 0.0) {
        throw Error(ErrorCode::Argument, "initial datum must vanish at x = 0 and x = 1");
    }
}

SolutionField::SolutionField(Grid1D grid, double alpha)
    : grid_(grid), alpha_(alpha), values_((grid.n() + 1) * (grid.m() + 1), 0.0) {}

SolutionField::SolutionField(Grid1D grid, double alpha, std::vector<double> values)
    : grid_(grid), alpha_(alpha), values_(std::move(values)) {
    if (values_.size() != rows() * cols()) {
        std::ostringstream os;
        os << "field holds " << values_.size() << " values, expected " << rows() << " x "
           << cols();
        throw Error(ErrorCode::Argument, os.str());
    }
}

double SolutionField::max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

SolutionField solve_forward(const FractionalDiffusionProblem& problem) {
    problem.validate();
    const Grid1D& grid = problem.grid;
    const std::size_t n_steps = grid.n();
    const std::size_t m = grid.m();
    const std::size_t interior = grid.interior();

    const L1Weights l1(problem.alpha, grid.dt(), n_steps);
    const double mu = l1.mu();
    const TridiagonalMatrix lh = assemble(grid, problem.coeffs);

    const TridiagonalSolver step_solver = [&] {
        try {
            return TridiagonalSolver(lh.shifted_negation(mu));
        } catch (const Error& e) {
            throw Error(ErrorCode::Singular, std::string("step matrix at k = 1: ") + e.what());
        }
    }();

    SolutionField field(grid, problem.alpha);
    std::copy(problem.initial.begin(), problem.initial.end(), field.row(0).begin());

    std::vector<double> rhs(interior);
    for (std::size_t k = 1; k <= n_steps; ++k) {
        const auto u0 = field.row(0);
        const double w0 = l1[k - 1];
        for (std::size_t r = 0; r < interior; ++r) {
            rhs[r] = w0 * u0[r + 1];
        }
        for (std::size_t j = 1; j < k; ++j) {
            const double c = l1.history_coefficient(k, j);
            const auto uj = field.row(j);
            for (std::size_t r = 0; r < interior; ++r) {
                rhs[r] += c * uj[r + 1];
            }
        }
        for (double& v : rhs) {
            v *= mu;
        }
        step_solver.solve_in_place(rhs);

        auto uk = field.row(k);
        for (std::size_t r = 0; r < interior; ++r) {
            if (!std::isfinite(rhs[r])) {
                std::ostringstream os;
                os << "non-finite solution value at step k = " << k << ", node i = " << r + 1;
                throw Error(ErrorCode::Blowup, os.str());
            }
            uk[r + 1] = rhs[r];
        }
        uk[0] = 0.0;
        uk[m] = 0.0;
    }
    return field;
}

double scheme_residual(const SolutionField& field, const FractionalDiffusionProblem& problem) {
    if (!(field.grid() == problem.grid)) {
        throw Error(ErrorCode::Argument, "field grid does not match the problem grid");
    }
    const Grid1D& grid = problem.grid;
    const TridiagonalMatrix lh = assemble(grid, problem.coeffs);

    std::vector<double> history;
    std::vector<double> interior(grid.interior());
    double worst = 0.0;
    for (std::size_t k = 1; k <= grid.n(); ++k) {
        const auto uk = field.row(k);
        std::copy(uk.begin() + 1, uk.end() - 1, interior.begin());
        const std::vector<double> lu = lh.multiply(interior);
        for (std::size_t i = 1; i < grid.m(); ++i) {
            history.resize(k + 1);
            for (std::size_t j = 0; j <= k; ++j) {
                history[j] = field.at(j, i);
            }
            const double caputo = caputo_l1_apply(history, problem.alpha, grid.dt());
            worst = std::max(worst, std::abs(caputo - lu[i - 1]));
        }
    }
    return worst;
}

} // namespace fracdiff
