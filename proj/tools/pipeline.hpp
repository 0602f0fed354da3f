#pragma once

#include "tables.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

namespace fdcli {

struct RunConfig {
    int example_id = 0;  // 0 selects the coefficient table
    std::vector<double> alphas{0.1, 0.3, 0.5};
    std::size_t n_steps = 20;
    std::size_t m_intervals = 80;
    double t_final = 0.02;
    std::filesystem::path output_dir = "fracdiff_out";
    bool emit_plots = false;
    double convexity_tol = 1e-8;
    double jump_threshold = 10.0;
    double residual_tol = 1e-9;  // relative to max |u|
};

struct AlphaSummary {
    double alpha = 0.0;
    double min_second_difference = 0.0;
    bool is_log_convex = false;
    double kappa_fit = 0.0;
    double b_sup_norm = 0.0;
    std::optional<bool> smooth_flag;
};

/// Solves, checks and analyzes every alpha concurrently and writes the
/// per-alpha files into config.output_dir. Throws CliError; outputs of the
/// alphas that completed are left on disk.
std::vector<AlphaSummary> run_pipeline(const RunConfig& config,
                                       const CoefficientTable* custom = nullptr);

/// Re-analyzes every field_alpha<k>.csv in dir, rewriting the norm CSV and
/// report JSON. b_sup_norm and the (H) check are carried over from an
/// existing report file when present.
std::vector<AlphaSummary> reanalyze_directory(const std::filesystem::path& dir,
                                              double convexity_tol);

} // namespace fdcli
