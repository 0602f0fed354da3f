#include "fracdiff/symmetrization.hpp"

#include "fracdiff/error.hpp"

#include <algorithm>
#include <cmath>

namespace fracdiff {

namespace {

// Centered first difference, second-order one-sided at the ends.
std::vector<double> centered_difference(std::span<const double> f, double dx) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    const double inv_2dx = 0.5 / dx;
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv_2dx;
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv_2dx;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d[i] = (f[i + 1] - f[i - 1]) * inv_2dx;
    }
    return d;
}

double median(std::vector<double> v) {
    if (v.empty()) {
        return 0.0;
    }
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    if (v.size() % 2 == 1) {
        return *mid;
    }
    const double upper = *mid;
    const double lower = *std::max_element(v.begin(), mid);
    return 0.5 * (lower + upper);
}

SolutionField restrict_to(const SolutionField& fine, const Grid1D& coarse) {
    SolutionField out(coarse, fine.alpha());
    for (std::size_t k = 0; k < out.rows(); ++k) {
        for (std::size_t i = 0; i < out.cols(); ++i) {
            out.at(k, i) = fine.at(2 * k, 2 * i);
        }
    }
    return out;
}

double max_difference(const SolutionField& a, const SolutionField& b) {
    double worst = 0.0;
    const auto va = a.values();
    const auto vb = b.values();
    for (std::size_t j = 0; j < va.size(); ++j) {
        worst = std::max(worst, std::abs(va[j] - vb[j]));
    }
    return worst;
}

} // namespace

std::vector<double> potential_b(const Grid1D& grid, const CoefficientSet& coeffs) {
    coeffs.check_aligned(grid);
    coeffs.check_elliptic();
    const std::size_t n = grid.nodes();
    std::vector<double> b(n, 0.0);
    const double half_dx = 0.5 * grid.dx();
    double prev = coeffs.b_drift[0] / coeffs.a_diff[0];
    // Kahan-compensated running trapezoid sum.
    double sum = 0.0;
    double carry = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double cur = coeffs.b_drift[i] / coeffs.a_diff[i];
        const double y = half_dx * (prev + cur) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        b[i] = sum;
        prev = cur;
    }
    return b;
}

std::vector<double> symmetrized_potential(const Grid1D& grid, const CoefficientSet& coeffs,
                                          std::span<const double> b) {
    coeffs.check_aligned(grid);
    if (b.size() != grid.nodes()) {
        throw Error(ErrorCode::Argument, "b samples do not match the grid");
    }
    const double dx = grid.dx();
    const std::vector<double> db = centered_difference(b, dx);
    std::vector<double> flux(db.size());
    for (std::size_t i = 0; i < db.size(); ++i) {
        flux[i] = coeffs.a_diff[i] * db[i];
    }
    std::vector<double> dflux = centered_difference(flux, dx);
    const std::size_t n = b.size();
    if (n >= 4) {
        // The one-sided flux at an end node breaks the error expansion of the
        // centered difference at its neighbour too, so on the two outermost
        // nodes at each end take the divergence as A' b' + A b''.
        const std::vector<double> da = centered_difference(coeffs.a_diff, dx);
        const double inv_dx2 = 1.0 / (dx * dx);
        auto product_rule = [&](std::size_t i, double d2b) {
            dflux[i] = da[i] * db[i] + coeffs.a_diff[i] * d2b;
        };
        product_rule(0, (2.0 * b[0] - 5.0 * b[1] + 4.0 * b[2] - b[3]) * inv_dx2);
        product_rule(1, (b[0] - 2.0 * b[1] + b[2]) * inv_dx2);
        product_rule(n - 2, (b[n - 3] - 2.0 * b[n - 2] + b[n - 1]) * inv_dx2);
        product_rule(n - 1,
                     (2.0 * b[n - 1] - 5.0 * b[n - 2] + 4.0 * b[n - 3] - b[n - 4]) * inv_dx2);
    }
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = coeffs.p_pot[i] - 0.5 * dflux[i] - 0.25 * coeffs.a_diff[i] * db[i] * db[i];
    }
    return q;
}

std::vector<double> transform(std::span<const double> values, std::span<const double> b,
                              TransformDirection direction) {
    if (values.size() != b.size()) {
        throw Error(ErrorCode::Argument, "transform: values and b differ in length");
    }
    const double sign = direction == TransformDirection::ToV ? 0.5 : -0.5;
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = values[i] * std::exp(sign * b[i]);
    }
    return out;
}

SolutionField transform(const SolutionField& field, std::span<const double> b,
                        TransformDirection direction) {
    if (b.size() != field.cols()) {
        throw Error(ErrorCode::Argument, "transform: b does not match the field width");
    }
    SolutionField out(field.grid(), field.alpha());
    for (std::size_t k = 0; k < field.rows(); ++k) {
        const auto row = transform(field.row(k), b, direction);
        std::copy(row.begin(), row.end(), out.row(k).begin());
    }
    return out;
}

double centered_sup_norm(std::span<const double> b) {
    if (b.empty()) {
        return 0.0;
    }
    const auto [lo, hi] = std::minmax_element(b.begin(), b.end());
    return 0.5 * (*hi - *lo);
}

AssumptionHReport check_assumption_h(const Grid1D& grid, const CoefficientSet& coeffs,
                                     double jump_threshold) {
    const std::vector<double> b = potential_b(grid, coeffs);
    AssumptionHReport report;

    std::vector<double> second(b.size() - 2);
    for (std::size_t i = 1; i + 1 < b.size(); ++i) {
        second[i - 1] = std::abs(b[i - 1] - 2.0 * b[i] + b[i + 1]);
    }
    double slope = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        slope = std::max(slope, std::abs(coeffs.b_drift[i] / coeffs.a_diff[i]));
    }
    const double floor = grid.dx() * grid.dx() * slope;
    report.threshold = jump_threshold * std::max(median(second), floor);

    for (std::size_t j = 0; j < second.size(); ++j) {
        if (second[j] > report.max_second_difference) {
            report.max_second_difference = second[j];
            report.jump_node = j + 1;
        }
    }
    report.smooth_flag = !(report.max_second_difference > report.threshold);
    return report;
}

SymmetrizationData symmetrize(const Grid1D& grid, const CoefficientSet& coeffs,
                              double jump_threshold) {
    SymmetrizationData data;
    data.b_samples = potential_b(grid, coeffs);
    data.q_samples = symmetrized_potential(grid, coeffs, data.b_samples);
    data.b_sup_norm = centered_sup_norm(data.b_samples);
    data.smooth_flag = check_assumption_h(grid, coeffs, jump_threshold).smooth_flag;
    return data;
}

FractionalDiffusionProblem symmetrized_problem(const FractionalDiffusionProblem& problem,
                                               const SymmetrizationData& data) {
    FractionalDiffusionProblem out{
        problem.grid,
        CoefficientSet{problem.coeffs.a_diff, std::vector<double>(problem.grid.nodes(), 0.0),
                       data.q_samples},
        problem.alpha,
        transform(problem.initial, data.b_samples, TransformDirection::ToV),
    };
    return out;
}

EquivalenceRun check_symmetrization_equivalence(
    const std::function<FractionalDiffusionProblem(const Grid1D&)>& build, const Grid1D& grid,
    double jump_threshold) {
    const Grid1D fine(2 * grid.m(), 2 * grid.n(), grid.t_final());

    auto run_both = [&](const Grid1D& g) {
        const FractionalDiffusionProblem problem = build(g);
        SymmetrizationData data = symmetrize(g, problem.coeffs, jump_threshold);
        SolutionField direct = solve_forward(problem);
        SolutionField via = transform(solve_forward(symmetrized_problem(problem, data)),
                                      data.b_samples, TransformDirection::ToU);
        return std::tuple{std::move(direct), std::move(via), std::move(data)};
    };

    auto [direct, via, data] = run_both(grid);
    auto [direct_fine, via_fine, data_fine] = run_both(fine);

    EquivalenceReport report;
    report.max_discrepancy = max_difference(direct, via);
    report.error_estimate_direct = max_difference(direct, restrict_to(direct_fine, grid));
    report.error_estimate_symmetrized = max_difference(via, restrict_to(via_fine, grid));
    report.tolerance =
        2.0 * std::max(report.error_estimate_direct, report.error_estimate_symmetrized);
    report.passed = report.max_discrepancy <= report.tolerance;

    return EquivalenceRun{std::move(direct), std::move(via), std::move(data), report};
}

} // namespace fracdiff
