#include "handles.hpp"
#include "pipeline.hpp"
#include "tables.hpp"

#include "fracdiff/fracdiff.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>

namespace fs = std::filesystem;
using fdcli::CliError;

namespace {

constexpr int kExitArgument = static_cast<int>(FD_ERR_ARGUMENT);

std::string error_json(const CliError& e) {
    nlohmann::ordered_json j;
    j["error"] = {{"code", e.code()}, {"exit_status", e.exit_status()}, {"message", e.what()}};
    return j.dump(2) + "\n";
}

void print_summary(const std::vector<fdcli::AlphaSummary>& rows) {
    std::printf("%-8s %24s %10s %24s %24s %8s\n", "alpha", "min_second_difference", "log_convex",
                "kappa_fit", "b_sup_norm", "(H)");
    for (const auto& r : rows) {
        const char* h = !r.smooth_flag ? "?" : (*r.smooth_flag ? "smooth" : "jump");
        std::printf("%-8s %24s %10s %24s %24s %8s\n", fdcli::alpha_tag(r.alpha).c_str(),
                    fdcli::format_double(r.min_second_difference).c_str(),
                    r.is_log_convex ? "yes" : "no", fdcli::format_double(r.kappa_fit).c_str(),
                    fdcli::format_double(r.b_sup_norm).c_str(), h);
    }
}

void prepare_output_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw CliError("io", static_cast<int>(FD_ERR_IO),
                       "cannot create output directory " + dir.string());
    }
    fs::remove(dir / "error.json", ec);
}

void validate(const fdcli::RunConfig& cfg) {
    if (cfg.alphas.empty()) {
        throw CliError("argument", kExitArgument, "--alpha needs at least one value");
    }
    std::set<double> seen;
    for (double a : cfg.alphas) {
        if (!(a > 0.0 && a <= 1.0)) {
            throw CliError("domain", static_cast<int>(FD_ERR_DOMAIN),
                           "alpha must lie in (0, 1], got " + fdcli::alpha_tag(a));
        }
        if (!seen.insert(a).second) {
            throw CliError("argument", kExitArgument,
                           "alpha " + fdcli::alpha_tag(a) + " listed twice");
        }
    }
    if (cfg.n_steps < 2) {
        throw CliError("argument", kExitArgument, "--nt must be at least 2");
    }
    if (!(cfg.t_final > 0.0)) {
        throw CliError("argument", kExitArgument, "--t-final must be positive");
    }
}

} // namespace

int main(int argc, char** argv) {
    fdcli::RunConfig cfg;
    fs::path coeffs_file;
    int example_id = 0;
    double ml_alpha = 0.5;
    double ml_z = 0.0;
    fs::path report_dir;

    CLI::App app{"Time-fractional diffusion solver with log-convexity analysis", "fracdiff"};
    app.set_config("--config", "", "Read options from an INI/TOML file; flags win");
    app.require_subcommand(1);
    app.fallthrough();

    auto* nx_opt = app.add_option("--nx", cfg.m_intervals, "Spatial intervals M")
                       ->capture_default_str()
                       ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
    app.add_option("--alpha", cfg.alphas, "Fractional orders, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--nt", cfg.n_steps, "Time steps N")->capture_default_str();
    app.add_option("--t-final", cfg.t_final, "Final time T")->capture_default_str();
    app.add_option("--out", cfg.output_dir, "Output directory")->capture_default_str();
    app.add_flag("--plots", cfg.emit_plots, "Write SVG plots");
    app.add_option("--coeffs", coeffs_file, "Coefficient table `x, A, B, p` (solve only)");
    app.add_option("--convexity-tol", cfg.convexity_tol,
                   "Relative slack on the log-convexity defect")
        ->capture_default_str();
    app.add_option("--jump-threshold", cfg.jump_threshold,
                   "Second-difference ratio that flags a kink in b")
        ->capture_default_str();

    auto* solve_cmd = app.add_subcommand("solve", "Run the pipeline on a coefficient table");
    auto* example_cmd = app.add_subcommand("example", "Run one of the three reference examples");
    example_cmd->add_option("id", example_id, "1, 2 or 3")->required();
    auto* ml_cmd = app.add_subcommand("ml-eval", "Evaluate the Mittag-Leffler function E_alpha(z)");
    ml_cmd->add_option("--alpha", ml_alpha, "Order in (0, 1]")->required();
    ml_cmd->add_option("--z", ml_z, "Real argument")->required();
    auto* report_cmd = app.add_subcommand("report", "Re-run the analysis on stored fields");
    report_cmd->add_option("dir", report_dir, "Directory written by solve or example")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        const CliError err("argument", kExitArgument, e.what());
        std::cerr << error_json(err);
        return err.exit_status();
    }

    fs::path error_dir;
    try {
        if (*ml_cmd) {
            double value = 0.0;
            fdcli::check(fd_mittag_leffler(ml_alpha, ml_z, &value), "ml-eval");
            nlohmann::ordered_json j;
            j["alpha"] = ml_alpha;
            j["z"] = ml_z;
            j["value"] = value;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*report_cmd) {
            print_summary(fdcli::reanalyze_directory(report_dir, cfg.convexity_tol));
            return 0;
        }

        validate(cfg);
        fdcli::CoefficientTable table;
        const fdcli::CoefficientTable* custom = nullptr;
        if (*example_cmd) {
            if (!coeffs_file.empty()) {
                throw CliError("argument", kExitArgument,
                               "--coeffs applies to `solve`, not `example`");
            }
            if (example_id < 1 || example_id > 3) {
                throw CliError("argument", kExitArgument,
                               "unknown example id " + std::to_string(example_id) +
                                   " (expected 1, 2 or 3)");
            }
            cfg.example_id = example_id;
        } else if (*solve_cmd) {
            if (coeffs_file.empty()) {
                throw CliError("argument", kExitArgument, "`solve` needs --coeffs <file>");
            }
            table = fdcli::parse_coefficients(coeffs_file);
            if (nx_opt->count() > 0 && cfg.m_intervals != table.intervals()) {
                throw CliError("argument", kExitArgument,
                               "--nx " + std::to_string(cfg.m_intervals) + " disagrees with the " +
                                   std::to_string(table.intervals()) +
                                   " intervals of the coefficient table");
            }
            cfg.m_intervals = table.intervals();
            custom = &table;
        }

        prepare_output_dir(cfg.output_dir);
        error_dir = cfg.output_dir;
        print_summary(fdcli::run_pipeline(cfg, custom));
        return 0;
    } catch (const CliError& e) {
        const std::string body = error_json(e);
        std::cerr << body;
        if (!error_dir.empty()) {
            try {
                fdcli::write_text_file(error_dir / "error.json", body);
            } catch (const CliError&) {
            }
        }
        return e.exit_status();
    } catch (const std::exception& e) {
        const CliError err("internal", static_cast<int>(FD_ERR_INTERNAL), e.what());
        std::cerr << error_json(err);
        return err.exit_status();
    }
}
