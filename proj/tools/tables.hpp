#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fdcli {

/// Scientific notation with 17 significant digits.
std::string format_double(double v);

/// Shortest decimal that round-trips, used in file names: 0.1 -> "0.1".
std::string alpha_tag(double alpha);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

struct CoefficientTable {
    std::vector<double> x;
    std::vector<double> a_diff;
    std::vector<double> b_drift;
    std::vector<double> p_pot;
    [[nodiscard]] std::size_t intervals() const noexcept { return x.size() - 1; }
};

/// Parses `x, A, B, p` rows after a header row. Blank lines and lines starting
/// with '#' are skipped. x must be the uniform node set i / M of [0, 1].
/// Errors are CliError{"parse"} naming file, line and column.
CoefficientTable parse_coefficients(const std::filesystem::path& path);

/// Field CSV: header `t,u0,...,uM`, then one row per time level.
std::string field_csv(std::span<const double> values, std::size_t rows, std::size_t cols,
                      double t_final);

struct StoredField {
    std::size_t m = 0;
    std::size_t n = 0;
    double t_final = 0.0;
    std::vector<double> values;
};

/// Reads a file written by field_csv; checks the time column is uniform.
StoredField read_field_csv(const std::filesystem::path& path);

} // namespace fdcli
