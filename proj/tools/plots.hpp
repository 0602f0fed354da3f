#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace fdcli {

/// Line plot of log ||u(t)|| against t. Entries with zero norm are skipped.
std::string lognorm_svg(std::span<const double> times, std::span<const double> norms,
                        double alpha);

/// Wireframe of u(t, x) under a fixed isometric projection.
std::string surface_svg(std::span<const double> values, std::size_t rows, std::size_t cols,
                        double t_final, double alpha);

} // namespace fdcli
