#include "fracdiff/presets.hpp"

#include "fracdiff/error.hpp"
#include "fracdiff/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fracdiff {

std::vector<double> sine_initial(const Grid1D& grid) {
    std::vector<double> u(grid.nodes());
    for (std::size_t i = 1; i < grid.m(); ++i) {
        u[i] = std::sin(std::numbers::pi * grid.x(i));
    }
    return u;
}

FractionalDiffusionProblem preset_problem(int example_id, double alpha, const Grid1D& grid) {
    CoefficientSet coeffs = CoefficientSet::laplacian(grid);
    switch (example_id) {
    case 1:
        break;
    case 2:
        std::fill(coeffs.b_drift.begin(), coeffs.b_drift.end(), 1.0);
        break;
    case 3:
        for (std::size_t i = 0; i < grid.nodes(); ++i) {
            // i / M >= 1/2 compared in integers so the jump node is exact.
            coeffs.b_drift[i] = 2 * i >= grid.m() ? 1.0 : 0.0;
        }
        break;
    default: {
        std::ostringstream os;
        os << "unknown example id " << example_id << " (expected 1, 2 or 3)";
        throw Error(ErrorCode::Argument, os.str());
    }
    }
    return FractionalDiffusionProblem{grid, std::move(coeffs), alpha, sine_initial(grid)};
}

double symmetric_exact(double alpha, double t, double x) {
    const double pi = std::numbers::pi;
    return mittag_leffler(alpha, -pi * pi * std::pow(t, alpha)) * std::sin(pi * x);
}

} // namespace fracdiff
