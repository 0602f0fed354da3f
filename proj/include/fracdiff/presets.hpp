#pragma once

#include "fracdiff/solver.hpp"

namespace fracdiff {

// The three reference experiments, all with u_0 = sin(pi x), A = 1, p = 0:
//   1: no drift (symmetric), exact solution E_alpha(-pi^2 t^alpha) sin(pi x)
//   2: constant drift B = 1 (gradient of b = x)
//   3: Heaviside drift B = theta(x - 1/2), theta(0) = 1
inline constexpr double kPresetFinalTime = 0.02;
inline constexpr std::size_t kPresetTimeSteps = 20;
inline constexpr std::size_t kPresetIntervals = 80;

/// Throws Error{Argument} for an id outside 1..3.
FractionalDiffusionProblem preset_problem(int example_id, double alpha, const Grid1D& grid);

/// sin(pi x_i) with both boundary samples set to exactly 0.
std::vector<double> sine_initial(const Grid1D& grid);

/// E_alpha(-pi^2 t^alpha) sin(pi x).
double symmetric_exact(double alpha, double t, double x);

} // namespace fracdiff
