// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
// Exit status is 0 only if every selected criterion passes.

#include "oracles.hpp"
#include "properties.hpp"

#include "fracdiff/analysis.hpp"
#include "fracdiff/presets.hpp"
#include "fracdiff/solver.hpp"
#include "fracdiff/special_functions.hpp"
#include "fracdiff/symmetrization.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace {

using namespace fracdiff;
using Clock = std::chrono::steady_clock;

// Frozen from a refined-grid run (N=40, M=160, T=0.02, alpha=0.5):
// C = max error / (dt^{2-alpha} + dx^2).
constexpr double kErrorConstant = 871.27659730568905;

struct Outcome {
    bool passed = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

SolutionField solve_example(int id, double alpha, std::size_t m, std::size_t n, double t_final) {
    const Grid1D grid(m, n, t_final);
    return solve_forward(preset_problem(id, alpha, grid));
}

double max_error_vs_exact(const SolutionField& u, double alpha) {
    const Grid1D& g = u.grid();
    double worst = 0.0;
    for (std::size_t k = 0; k < u.rows(); ++k) {
        for (std::size_t i = 0; i < u.cols(); ++i) {
            const double exact = symmetric_exact(alpha, g.t(k), g.x(i));
            worst = std::max(worst, std::abs(u.at(k, i) - exact));
        }
    }
    return worst;
}

double final_time_error(const SolutionField& u, double alpha) {
    const Grid1D& g = u.grid();
    const std::size_t k = u.rows() - 1;
    double worst = 0.0;
    for (std::size_t i = 0; i < u.cols(); ++i) {
        worst = std::max(worst, std::abs(u.at(k, i) - symmetric_exact(alpha, g.t(k), g.x(i))));
    }
    return worst;
}

Outcome exact_solution_agreement() {
    const auto start = Clock::now();
    const double alpha = 0.5;
    const auto u = solve_example(1, alpha, 80, 20, 0.02);
    const double dt = 0.02 / 20.0;
    const double dx = 1.0 / 80.0;
    const double bound = kErrorConstant * (std::pow(dt, 2.0 - alpha) + dx * dx);
    const double err = max_error_vs_exact(u, alpha);
    const double elapsed = seconds_since(start);
    return {err <= bound && elapsed < 1.0,
            fmt("max error %.3e <= bound %.3e, %.3f s < 1 s", err, bound, elapsed)};
}

Outcome temporal_order() {
    const auto start = Clock::now();
    const std::vector<std::size_t> steps = {20, 40, 80, 160};
    bool ok = true;
    std::string detail;
    for (double alpha : {0.3, 0.5}) {
        std::vector<double> h, err;
        for (std::size_t n : steps) {
            h.push_back(0.02 / static_cast<double>(n));
            err.push_back(final_time_error(solve_example(1, alpha, 640, n, 0.02), alpha));
        }
        const double order = test::fitted_order(h, err);
        const double target = 2.0 - alpha;
        ok = ok && std::abs(order - target) <= 0.3;
        detail += fmt("alpha %.1f: order %.3f vs %.1f +- 0.3; ", alpha, order, target);
    }
    const double elapsed = seconds_since(start);
    ok = ok && elapsed < 30.0;
    return {ok, detail + fmt("%.2f s < 30 s", elapsed)};
}

Outcome log_convexity_certificates() {
    const auto start = Clock::now();
    bool ok = true;
    double worst_margin = INFINITY;
    for (int id : {1, 2, 3}) {
        for (double alpha : {0.1, 0.3, 0.5}) {
            const Grid1D grid(kPresetIntervals, kPresetTimeSteps, kPresetFinalTime);
            const auto problem = preset_problem(id, alpha, grid);
            const auto sym = symmetrize(grid, problem.coeffs);
            const auto report = analyze(solve_forward(problem), sym.b_sup_norm);
            ok = ok && report.min_second_difference >= -report.tolerance;
            worst_margin = std::min(worst_margin, report.min_second_difference + report.tolerance);
        }
    }
    const double elapsed = seconds_since(start);
    return {ok && elapsed < 2.0,
            fmt("9 runs, smallest defect + tolerance %.3e >= 0, %.3f s < 2 s", worst_margin,
                elapsed)};
}

Outcome symmetrization_equivalence() {
    bool ok = true;
    std::string detail;
    const Grid1D grid(kPresetIntervals, kPresetTimeSteps, kPresetFinalTime);
    for (double alpha : {0.1, 0.3, 0.5}) {
        const auto run = check_symmetrization_equivalence(
            [alpha](const Grid1D& g) { return preset_problem(2, alpha, g); }, grid);
        ok = ok && run.report.passed;
        detail += fmt("alpha %.1f: %.2e <= %.2e; ", alpha, run.report.max_discrepancy,
                      run.report.tolerance);
    }
    const auto problem = preset_problem(2, 0.5, grid);
    const auto sym = symmetrize(grid, problem.coeffs);
    double q_err = 0.0;
    for (double q : sym.q_samples) {
        q_err = std::max(q_err, std::abs(q + 0.25));
    }
    ok = ok && q_err <= 1e-11;
    return {ok, detail + fmt("max |q + 1/4| %.2e <= 1e-11", q_err)};
}

Outcome backward_euler_limit() {
    const std::size_t m = 80, n = 20;
    const Grid1D grid(m, n, 0.02);
    const auto problem = preset_problem(1, 1.0, grid);
    const auto u = solve_forward(problem);
    const auto ref = test::backward_euler_heat(m, n, 0.02, problem.initial);
    double err = 0.0;
    for (std::size_t j = 0; j < ref.size(); ++j) {
        err = std::max(err, std::abs(u.values()[j] - ref[j]));
    }
    return {err <= 1e-10, fmt("max difference %.3e <= 1e-10", err)};
}

Outcome special_functions() {
    double e1 = 0.0;
    for (int j = 0; j <= 1000; ++j) {
        const double z = -5.0 + 0.01 * j;
        e1 = std::max(e1, std::abs(mittag_leffler(1.0, z) - std::exp(z)) / std::exp(z));
    }
    double zero = 0.0;
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
        zero = std::max(zero, std::abs(mittag_leffler(a, 0.0) - 1.0));
    }
    const double half = std::abs(mittag_leffler(0.5, -1.0) - std::exp(1.0) * std::erfc(1.0));
    double rec = 0.0;
    for (int j = 1; j <= 400; ++j) {
        const double x = 0.05 * j;
        const double g1 = fracdiff::gamma(x + 1.0);
        rec = std::max(rec, std::abs(g1 - x * fracdiff::gamma(x)) / g1);
    }
    const bool ok = e1 <= 1e-12 && zero == 0.0 && half <= 1e-10 && rec <= 1e-12;
    return {ok, fmt("E1 vs exp %.2e <= 1e-12, E(0) off by %.1e, E_1/2(-1) %.2e <= 1e-10", e1,
                    zero, half) +
                    fmt(", gamma recurrence %.2e <= 1e-12", rec)};
}

Outcome property_suite() {
    const std::uint64_t seed = 0x5eed2024ULL;
    const std::vector<std::pair<const char*, test::PropertyResult>> results = {
        {"linearity", test::solver_linearity(seed, 60)},
        {"telescoping", test::weight_telescoping(seed, 500)},
        {"round trip", test::transform_round_trip(seed, 300)},
        {"kappa equality", test::kappa_equality(seed, 300)},
        {"defect scaling", test::defect_scaling(seed, 300)},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [name, r] : results) {
        ok = ok && r.passed;
        detail += std::string(name) + fmt(" %.1e/%.0e", r.worst, r.tolerance);
        if (!r.passed) {
            detail += " [" + r.detail + "]";
        }
        detail += "; ";
    }
    return {ok, detail};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "exact-solution agreement", exact_solution_agreement},
        {2, "temporal convergence order", temporal_order},
        {3, "log-convexity certificates", log_convexity_certificates},
        {4, "symmetrization equivalence", symmetrization_equivalence},
        {5, "alpha = 1 backward Euler limit", backward_euler_limit},
        {6, "special functions", special_functions},
        {7, "property suite", property_suite},
    };

    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--criterion") {
        only = std::atoi(argv[2]);
    } else if (argc != 1) {
        std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
        return 2;
    }

    bool all_passed = true;
    bool matched = false;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) {
            continue;
        }
        matched = true;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        all_passed = all_passed && out.passed;
        std::printf("%s %d %s: %s\n", out.passed ? "PASS" : "FAIL", c.id, c.name,
                    out.detail.c_str());
        std::fflush(stdout);
    }
    if (!matched) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    return all_passed ? 0 : 1;
}
