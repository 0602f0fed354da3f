#pragma once

#include "fracdiff/fracdiff.h"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace fdcli {

inline constexpr int kExitInvariant = 11;

/// Failure carrying the machine-readable code and process exit status.
class CliError : public std::runtime_error {
public:
    CliError(std::string code, int exit_status, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)), exit_status_(exit_status) {}

    [[nodiscard]] const std::string& code() const noexcept { return code_; }
    [[nodiscard]] int exit_status() const noexcept { return exit_status_; }

private:
    std::string code_;
    int exit_status_;
};

inline CliError status_error(fd_status status, const std::string& message) {
    return CliError(fd_status_name(status), static_cast<int>(status), message);
}

inline void check(fd_status status, const std::string& context) {
    if (status != FD_OK) {
        throw status_error(status, context + ": " + fd_last_error_message());
    }
}

struct ProblemDeleter {
    void operator()(fd_problem* p) const noexcept { fd_problem_destroy(p); }
};
struct SolutionDeleter {
    void operator()(fd_solution* s) const noexcept { fd_solution_destroy(s); }
};
struct ReportDeleter {
    void operator()(fd_report* r) const noexcept { fd_report_destroy(r); }
};

using ProblemPtr = std::unique_ptr<fd_problem, ProblemDeleter>;
using SolutionPtr = std::unique_ptr<fd_solution, SolutionDeleter>;
using ReportPtr = std::unique_ptr<fd_report, ReportDeleter>;

} // namespace fdcli
