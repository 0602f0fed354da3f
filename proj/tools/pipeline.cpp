#include "pipeline.hpp"

#include "handles.hpp"
#include "plots.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <string>

namespace fdcli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json array_of(std::span<const double> v) {
    Json a = Json::array();
    for (double x : v) {
        a.push_back(number_or_null(x));
    }
    return a;
}

std::string norms_csv(std::span<const double> times, std::span<const double> norms,
                      std::span<const double> log_norms) {
    std::string out = "k,t,norm,log_norm\n";
    for (std::size_t k = 0; k < norms.size(); ++k) {
        out += std::to_string(k) + "," + format_double(times[k]) + "," +
               format_double(norms[k]) + "," +
               format_double(norms[k] > 0.0 ? log_norms[k] : std::nan("")) + "\n";
    }
    return out;
}

struct Analysis {
    fd_report_summary summary{};
    std::vector<double> times;
    std::vector<double> norms;
    std::vector<double> log_norms;
};

Analysis analyze(const fd_solution* solution, double b_sup, double tol) {
    fd_report* raw = nullptr;
    check(fd_analyze(solution, b_sup, tol, &raw), "analysis");
    const ReportPtr report(raw);
    Analysis a;
    check(fd_report_get_summary(report.get(), &a.summary), "analysis summary");
    const std::size_t n = a.summary.points;
    a.times.assign(fd_report_times(report.get()), fd_report_times(report.get()) + n);
    a.norms.assign(fd_report_norms(report.get()), fd_report_norms(report.get()) + n);
    a.log_norms.assign(fd_report_log_norms(report.get()), fd_report_log_norms(report.get()) + n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!(a.norms[k] > 0.0)) {
            a.log_norms[k] = std::nan("");
        }
    }
    return a;
}

void fill_analysis(Json& report, const Analysis& a) {
    report["norms"] = array_of(a.norms);
    report["log_norms"] = array_of(a.log_norms);
    report["min_second_difference"] = a.summary.min_second_difference;
    report["convexity_tolerance"] = a.summary.tolerance;
    report["is_log_convex"] = a.summary.is_log_convex != 0;
    report["kappa_fit"] = a.summary.kappa_fit;
    report["b_sup_norm"] = a.summary.b_sup_norm;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ProblemPtr make_problem(const RunConfig& cfg, const CoefficientTable* custom, double alpha) {
    fd_problem* raw = nullptr;
    if (custom == nullptr) {
        check(fd_problem_create_preset(cfg.example_id, alpha, cfg.m_intervals, cfg.n_steps,
                                       cfg.t_final, &raw),
              "example setup");
        return ProblemPtr(raw);
    }
    const std::size_t m = custom->intervals();
    std::vector<double> initial(m + 1, 0.0);
    for (std::size_t i = 1; i < m; ++i) {
        initial[i] =
            std::sin(std::numbers::pi * (static_cast<double>(i) / static_cast<double>(m)));
    }
    check(fd_problem_create(m, cfg.n_steps, cfg.t_final, alpha, custom->a_diff.data(),
                            custom->b_drift.data(), custom->p_pot.data(), initial.data(), &raw),
          "coefficient table");
    return ProblemPtr(raw);
}

std::string error_vs_exact_csv(const fd_solution* solution, double alpha, std::size_t m,
                               std::size_t n, double t_final) {
    const std::size_t cols = m + 1;
    const double* u = fd_solution_data(solution);
    std::vector<double> err(cols);
    std::string out = "k,t,max_abs_error,l2_error\n";
    for (std::size_t k = 0; k <= n; ++k) {
        const double t = t_final * static_cast<double>(k) / static_cast<double>(n);
        double worst = 0.0;
        for (std::size_t i = 0; i < cols; ++i) {
            double exact = 0.0;
            check(fd_symmetric_exact(alpha, t, static_cast<double>(i) / static_cast<double>(m),
                                     &exact),
                  "exact solution");
            err[i] = u[k * cols + i] - exact;
            worst = std::max(worst, std::abs(err[i]));
        }
        double l2 = 0.0;
        check(fd_l2_norm(err.data(), cols, 1.0 / static_cast<double>(m), &l2), "error norm");
        out += std::to_string(k) + "," + format_double(t) + "," + format_double(worst) + "," +
               format_double(l2) + "\n";
    }
    return out;
}

AlphaSummary run_alpha(const RunConfig& cfg, const CoefficientTable* custom, double alpha) {
    const std::string tag = alpha_tag(alpha);
    const fs::path& dir = cfg.output_dir;
    std::vector<std::string> violations;

    const ProblemPtr problem = make_problem(cfg, custom, alpha);
    const std::size_t nodes = fd_problem_nodes(problem.get());
    const std::size_t m = nodes - 1;
    const std::size_t n = cfg.n_steps;

    fd_solution* raw = nullptr;
    check(fd_solve_forward(problem.get(), &raw), "solver (alpha = " + tag + ")");
    const SolutionPtr solution(raw);
    const std::size_t rows = fd_solution_rows(solution.get());
    const double* u = fd_solution_data(solution.get());

    double residual = 0.0;
    check(fd_scheme_residual(solution.get(), problem.get(), &residual), "scheme residual");
    double umax = 0.0;
    for (std::size_t j = 0; j < rows * nodes; ++j) {
        umax = std::max(umax, std::abs(u[j]));
    }
    if (!(residual <= cfg.residual_tol * umax)) {
        std::ostringstream os;
        os << "alpha = " << tag << ": scheme residual " << residual << " exceeds "
           << cfg.residual_tol << " * max|u| = " << cfg.residual_tol * umax;
        violations.push_back(os.str());
    }

    fd_symmetrization symm{};
    fd_assumption_h hcheck{};
    std::vector<double> b(nodes);
    std::vector<double> q(nodes);
    check(fd_problem_symmetrization(problem.get(), cfg.jump_threshold, &symm, &hcheck, b.data(),
                                    q.data()),
          "symmetrization");

    const Analysis a = analyze(solution.get(), symm.b_sup_norm, cfg.convexity_tol);
    if (a.norms.size() != n + 1) {
        violations.push_back("alpha = " + tag + ": norm curve does not have N + 1 entries");
    }

    Json report;
    report["alpha"] = alpha;
    report["N"] = n;
    report["M"] = m;
    report["T"] = cfg.t_final;
    fill_analysis(report, a);
    report["assumption_h"] = {
        {"feasible", hcheck.feasible != 0},
        {"smooth_flag", hcheck.smooth_flag != 0},
        {"max_second_difference", hcheck.max_second_difference},
        {"threshold", hcheck.threshold},
        {"jump_x", static_cast<double>(hcheck.jump_node) / static_cast<double>(m)},
    };
    report["scheme_residual"] = residual;
    report["b_samples"] = array_of(b);

    write_text_file(dir / ("field_alpha" + tag + ".csv"),
                    field_csv({u, rows * nodes}, rows, nodes, cfg.t_final));
    write_text_file(dir / ("norms_alpha" + tag + ".csv"), norms_csv(a.times, a.norms, a.log_norms));
    write_text_file(dir / ("report_alpha" + tag + ".json"), dump(report));

    if (cfg.example_id == 1) {
        write_text_file(dir / ("error_vs_exact_alpha" + tag + ".csv"),
                        error_vs_exact_csv(solution.get(), alpha, m, n, cfg.t_final));
    }
    if (cfg.example_id == 2) {
        fd_equivalence eq{};
        fd_solution* via_raw = nullptr;
        check(fd_symmetrization_check_preset(2, alpha, m, n, cfg.t_final, cfg.jump_threshold, &eq,
                                             &via_raw),
              "symmetrization check");
        const SolutionPtr via(via_raw);
        const auto [q_lo, q_hi] = std::minmax_element(q.begin(), q.end());
        Json symm_json;
        symm_json["alpha"] = alpha;
        symm_json["N"] = n;
        symm_json["M"] = m;
        symm_json["T"] = cfg.t_final;
        symm_json["max_discrepancy"] = eq.max_discrepancy;
        symm_json["error_estimate_direct"] = eq.error_estimate_direct;
        symm_json["error_estimate_symmetrized"] = eq.error_estimate_symmetrized;
        symm_json["tolerance"] = eq.tolerance;
        symm_json["passed"] = eq.passed != 0;
        symm_json["q_min"] = *q_lo;
        symm_json["q_max"] = *q_hi;
        symm_json["b_sup_norm"] = symm.b_sup_norm;
        write_text_file(dir / ("symm_check_alpha" + tag + ".json"), dump(symm_json));
        write_text_file(dir / ("field_symm_alpha" + tag + ".csv"),
                        field_csv({fd_solution_data(via.get()), rows * nodes}, rows, nodes,
                                  cfg.t_final));
        if (eq.passed == 0) {
            std::ostringstream os;
            os << "alpha = " << tag << ": direct and symmetrized solutions differ by "
               << eq.max_discrepancy << " > " << eq.tolerance;
            violations.push_back(os.str());
        }
    }
    if (cfg.emit_plots) {
        write_text_file(dir / ("lognorm_alpha" + tag + ".svg"),
                        lognorm_svg(a.times, a.norms, alpha));
        write_text_file(dir / ("surface_alpha" + tag + ".svg"),
                        surface_svg({u, rows * nodes}, rows, nodes, cfg.t_final, alpha));
    }

    if (!violations.empty()) {
        std::string msg = "invariant violated: " + violations.front();
        for (std::size_t j = 1; j < violations.size(); ++j) {
            msg += "; " + violations[j];
        }
        throw CliError("invariant", kExitInvariant, msg);
    }
    return AlphaSummary{alpha,
                        a.summary.min_second_difference,
                        a.summary.is_log_convex != 0,
                        a.summary.kappa_fit,
                        symm.b_sup_norm,
                        hcheck.smooth_flag != 0};
}

} // namespace

std::vector<AlphaSummary> run_pipeline(const RunConfig& config, const CoefficientTable* custom) {
    std::vector<std::future<AlphaSummary>> tasks;
    tasks.reserve(config.alphas.size());
    for (double alpha : config.alphas) {
        tasks.push_back(std::async(std::launch::async,
                                   [&config, custom, alpha] {
                                       return run_alpha(config, custom, alpha);
                                   }));
    }
    // Wait for every task before reporting, so the first failure in alpha
    // order is the one surfaced regardless of scheduling.
    std::vector<AlphaSummary> out;
    std::exception_ptr first_error;
    for (auto& task : tasks) {
        try {
            out.push_back(task.get());
        } catch (...) {
            if (!first_error) {
                first_error = std::current_exception();
            }
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
    return out;
}

std::vector<AlphaSummary> reanalyze_directory(const fs::path& dir, double convexity_tol) {
    if (!fs::is_directory(dir)) {
        throw CliError("io", static_cast<int>(FD_ERR_IO), dir.string() + " is not a directory");
    }
    const std::string prefix = "field_alpha";
    std::vector<std::pair<std::string, fs::path>> fields;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.starts_with(prefix) && name.ends_with(".csv")) {
            fields.emplace_back(name.substr(prefix.size(), name.size() - prefix.size() - 4),
                                entry.path());
        }
    }
    if (fields.empty()) {
        throw CliError("io", static_cast<int>(FD_ERR_IO),
                       "no field_alpha*.csv files in " + dir.string());
    }
    std::sort(fields.begin(), fields.end());

    std::vector<AlphaSummary> out;
    for (const auto& [tag, path] : fields) {
        double alpha = 0.0;
        const auto [ptr, ec] = std::from_chars(tag.data(), tag.data() + tag.size(), alpha);
        if (ec != std::errc() || ptr != tag.data() + tag.size()) {
            throw CliError("parse", static_cast<int>(FD_ERR_PARSE),
                           path.string() + ": cannot read alpha from the file name");
        }
        const StoredField stored = read_field_csv(path);

        const fs::path report_path = dir / ("report_alpha" + tag + ".json");
        Json report;
        if (fs::exists(report_path)) {
            try {
                report = Json::parse(read_text_file(report_path));
            } catch (const Json::exception& e) {
                throw CliError("parse", static_cast<int>(FD_ERR_PARSE),
                               report_path.string() + ": " + e.what());
            }
        }
        const double b_sup = report.contains("b_sup_norm") && report["b_sup_norm"].is_number()
                                 ? report["b_sup_norm"].get<double>()
                                 : 0.0;

        fd_solution* raw = nullptr;
        check(fd_solution_create(stored.m, stored.n, stored.t_final, alpha, stored.values.data(),
                                 &raw),
              path.string());
        const SolutionPtr solution(raw);
        const Analysis a = analyze(solution.get(), b_sup, convexity_tol);

        Json updated;
        updated["alpha"] = alpha;
        updated["N"] = stored.n;
        updated["M"] = stored.m;
        updated["T"] = stored.t_final;
        fill_analysis(updated, a);
        updated["assumption_h"] =
            report.contains("assumption_h")
                ? report["assumption_h"]
                : Json{{"feasible", true}, {"smooth_flag", nullptr}};
        for (const auto& [key, value] : report.items()) {
            if (!updated.contains(key)) {
                updated[key] = value;
            }
        }
        write_text_file(dir / ("norms_alpha" + tag + ".csv"),
                        norms_csv(a.times, a.norms, a.log_norms));
        write_text_file(report_path, dump(updated));

        AlphaSummary s{alpha, a.summary.min_second_difference, a.summary.is_log_convex != 0,
                       a.summary.kappa_fit, b_sup, std::nullopt};
        const Json& h = updated["assumption_h"];
        if (h.contains("smooth_flag") && h["smooth_flag"].is_boolean()) {
            s.smooth_flag = h["smooth_flag"].get<bool>();
        }
        out.push_back(s);
    }
    return out;
}

} // namespace fdcli
