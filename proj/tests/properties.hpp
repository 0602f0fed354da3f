#pragma once

// Randomized property checks shared by the property test binary and the
// acceptance runner. Each check draws `cases` inputs from a seeded mt19937_64
// and reports the worst observed violation measure against its tolerance.

#include "fracdiff/analysis.hpp"
#include "fracdiff/caputo_l1.hpp"
#include "fracdiff/solver.hpp"
#include "fracdiff/symmetrization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fracdiff::test {

struct PropertyResult {
    bool passed = true;
    double worst = 0.0;       // largest observed error measure
    double tolerance = 0.0;
    std::string detail;       // first failing case, if any

    void record(double measure, const std::string& where) {
        worst = std::max(worst, measure);
        if (passed && !(measure <= tolerance)) {
            passed = false;
            detail = where;
        }
    }
};

namespace detail {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Smooth random profile: a few random sine modes plus an offset.
inline std::vector<double> random_profile(std::mt19937_64& rng, const Grid1D& grid, double offset,
                                          double amplitude) {
    const double c1 = uniform(rng, -1, 1);
    const double c2 = uniform(rng, -1, 1);
    const double c3 = uniform(rng, -1, 1);
    std::vector<double> v(grid.nodes());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double x = grid.x(i);
        v[i] = offset + amplitude * (c1 * std::sin(3.1 * x) + c2 * std::cos(7.3 * x) +
                                     c3 * std::sin(11.0 * x + 0.4)) /
                            3.0;
    }
    return v;
}

inline std::vector<double> random_initial(std::mt19937_64& rng, const Grid1D& grid) {
    std::vector<double> u(grid.nodes(), 0.0);
    for (std::size_t i = 1; i < grid.m(); ++i) {
        u[i] = uniform(rng, -1, 1);
    }
    return u;
}

inline std::string describe(std::uint64_t seed, int index) {
    std::ostringstream os;
    os << "seed " << seed << ", case " << index;
    return os.str();
}

} // namespace detail

/// solve(a u + b v) = a solve(u) + b solve(v) for random operators and data.
inline PropertyResult solver_linearity(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    r.tolerance = 1e-10;
    for (int c = 0; c < cases; ++c) {
        const Grid1D grid(detail::pick(rng, 4, 40), detail::pick(rng, 2, 20),
                          detail::uniform(rng, 0.01, 1.0));
        const double alpha = detail::uniform(rng, 0.05, 1.0);
        CoefficientSet coeffs{detail::random_profile(rng, grid, 1.25, 1.0),
                              detail::random_profile(rng, grid, 0.0, 4.0),
                              detail::random_profile(rng, grid, 0.0, 2.0)};
        FractionalDiffusionProblem pu{grid, coeffs, alpha, detail::random_initial(rng, grid)};
        FractionalDiffusionProblem pv{grid, coeffs, alpha, detail::random_initial(rng, grid)};
        const double a = detail::uniform(rng, -3, 3);
        const double b = detail::uniform(rng, -3, 3);
        FractionalDiffusionProblem pw = pu;
        for (std::size_t i = 0; i < grid.nodes(); ++i) {
            pw.initial[i] = a * pu.initial[i] + b * pv.initial[i];
        }
        const auto fu = solve_forward(pu);
        const auto fv = solve_forward(pv);
        const auto fw = solve_forward(pw);
        const double scale = std::max(1.0, std::abs(a) * fu.max_abs() + std::abs(b) * fv.max_abs());
        double worst = 0.0;
        for (std::size_t j = 0; j < fw.values().size(); ++j) {
            worst = std::max(worst, std::abs(fw.values()[j] - a * fu.values()[j] -
                                             b * fv.values()[j]));
        }
        r.record(worst / scale, detail::describe(seed, c));
    }
    return r;
}

/// sum_{j<k} a_j = k^{1 - alpha} (relative error).
inline PropertyResult weight_telescoping(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    r.tolerance = 1e-12;
    for (int c = 0; c < cases; ++c) {
        const double alpha = detail::uniform(rng, 1e-3, 1.0);
        const std::size_t k = detail::pick(rng, 1, 5000);
        const auto w = l1_weights(alpha, k);
        double sum = 0.0;
        for (double v : w) {
            sum += v;
        }
        const double expected = std::pow(static_cast<double>(k), 1.0 - alpha);
        r.record(std::abs(sum - expected) / expected, detail::describe(seed, c));
    }
    return r;
}

/// to_u(to_v(u)) = u (relative, per entry).
inline PropertyResult transform_round_trip(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    r.tolerance = 1e-14;
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = detail::pick(rng, 3, 200);
        std::vector<double> u(n);
        std::vector<double> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = detail::uniform(rng, -10, 10);
            b[i] = detail::uniform(rng, -5, 5);
        }
        const auto back = transform(transform(u, b, TransformDirection::ToV), b,
                                    TransformDirection::ToU);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(back[i] - u[i]) / std::abs(u[i]));
        }
        r.record(worst, detail::describe(seed, c));
    }
    return r;
}

/// kappa_fit = 1 on log-linear curves with b_sup_norm = 0.
inline PropertyResult kappa_equality(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    r.tolerance = 1e-12;
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = detail::pick(rng, 2, 200);
        const double t_final = detail::uniform(rng, 1e-3, 10.0);
        const double intercept = detail::uniform(rng, -5, 5);
        const double slope = detail::uniform(rng, -20, 20) / t_final;
        std::vector<double> times(n + 1);
        std::vector<double> norms(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            times[k] = t_final * static_cast<double>(k) / static_cast<double>(n);
            norms[k] = std::exp(intercept + slope * times[k]);
        }
        const double kappa = kappa_fit(NormCurve::from_norms(times, norms), 0.0);
        r.record(std::abs(kappa - 1.0), detail::describe(seed, c));
    }
    return r;
}

/// Multiplying every norm by c > 0 leaves the convexity defect unchanged.
inline PropertyResult defect_scaling(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    r.tolerance = 1e-12;
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = detail::pick(rng, 2, 100);
        std::vector<double> times(n + 1);
        std::vector<double> norms(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            times[k] = static_cast<double>(k);
            norms[k] = std::exp(detail::uniform(rng, -3, 3));
        }
        const double base = convexity_defect(NormCurve::from_norms(times, norms));
        const double scale = std::exp(detail::uniform(rng, -18, 18));
        for (double& v : norms) {
            v *= scale;
        }
        const double scaled = convexity_defect(NormCurve::from_norms(times, norms));
        r.record(std::abs(scaled - base), detail::describe(seed, c));
    }
    return r;
}

/// l2_norm(c u) = |c| l2_norm(u) (relative).
inline PropertyResult l2_homogeneity(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    r.tolerance = 1e-13;
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = detail::pick(rng, 2, 500);
        std::vector<double> u(n);
        for (double& v : u) {
            v = detail::uniform(rng, -1, 1);
        }
        const double dx = 1.0 / static_cast<double>(n - 1);
        const double base = l2_norm(u, dx);
        const double s = detail::uniform(rng, -1e3, 1e3);
        for (double& v : u) {
            v *= s;
        }
        if (base == 0.0) {
            continue;
        }
        r.record(std::abs(l2_norm(u, dx) - std::abs(s) * base) / (std::abs(s) * base),
                 detail::describe(seed, c));
    }
    return r;
}

/// kappa_fit >= e^{-b} and kappa_fit nonincreasing in b.
inline PropertyResult kappa_bounds(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    r.tolerance = 0.0;
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = detail::pick(rng, 1, 60);
        std::vector<double> times(n + 1);
        std::vector<double> norms(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            times[k] = static_cast<double>(k);
            norms[k] = std::exp(detail::uniform(rng, -4, 4));
        }
        const auto curve = NormCurve::from_norms(times, norms);
        double prev = kappa_fit(curve, 0.0);
        double b = 0.0;
        for (int step = 0; step < 5; ++step) {
            const double lower = std::exp(-b) * (1.0 - 1e-14);
            const double kappa = kappa_fit(curve, b);
            const double violation = std::max(lower - kappa, kappa - prev);
            r.record(std::max(0.0, violation), detail::describe(seed, c));
            prev = kappa;
            b += detail::uniform(rng, 0.0, 2.0);
        }
    }
    return r;
}

/// A log-convex curve lies under its chord: kappa_fit <= 1 + rounding.
inline PropertyResult log_convex_under_chord(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    r.tolerance = 1e-12;
    for (int c = 0; c < cases; ++c) {
        const std::size_t n = detail::pick(rng, 2, 80);
        std::vector<double> times(n + 1);
        std::vector<double> logs(n + 1);
        double slope = detail::uniform(rng, -5, 0);
        logs[0] = detail::uniform(rng, -2, 2);
        for (std::size_t k = 0; k <= n; ++k) {
            times[k] = static_cast<double>(k) / static_cast<double>(n);
            if (k > 0) {
                logs[k] = logs[k - 1] + slope / static_cast<double>(n);
                slope += detail::uniform(rng, 0, 3);  // nondecreasing slopes
            }
        }
        std::vector<double> norms(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            norms[k] = std::exp(logs[k]);
        }
        const double kappa = kappa_fit(NormCurve::from_norms(times, norms), 0.0);
        r.record(std::max(0.0, kappa - 1.0), detail::describe(seed, c));
    }
    return r;
}

/// Random well-posed problems satisfy the discrete scheme to rounding.
inline PropertyResult scheme_residual_small(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    PropertyResult r;
    r.tolerance = 1e-9;
    for (int c = 0; c < cases; ++c) {
        const Grid1D grid(detail::pick(rng, 4, 60), detail::pick(rng, 1, 25),
                          detail::uniform(rng, 0.01, 1.0));
        FractionalDiffusionProblem p{
            grid,
            CoefficientSet{detail::random_profile(rng, grid, 1.25, 1.0),
                           detail::random_profile(rng, grid, 0.0, 4.0),
                           detail::random_profile(rng, grid, 0.0, 2.0)},
            detail::uniform(rng, 0.05, 1.0), detail::random_initial(rng, grid)};
        const auto field = solve_forward(p);
        r.record(scheme_residual(field, p) / std::max(1e-300, field.max_abs()),
                 detail::describe(seed, c));
    }
    return r;
}

} // namespace fracdiff::test
