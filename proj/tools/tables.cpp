#include "tables.hpp"

#include "handles.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fdcli {

namespace {

constexpr int kExitParse = static_cast<int>(FD_ERR_PARSE);
constexpr int kExitIo = static_cast<int>(FD_ERR_IO);

struct Cell {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Cell> split_csv_line(std::string_view line) {
    std::vector<Cell> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? line.size() : comma;
        std::size_t lo = start;
        std::size_t hi = stop;
        while (lo < hi && std::isspace(static_cast<unsigned char>(line[lo]))) {
            ++lo;
        }
        while (hi > lo && std::isspace(static_cast<unsigned char>(line[hi - 1]))) {
            --hi;
        }
        cells.push_back({line.substr(lo, hi - lo), lo + 1});
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return cells;
}

CliError parse_error(const std::filesystem::path& path, std::size_t line, std::size_t column,
                     const std::string& what) {
    std::ostringstream os;
    os << path.string() << ":" << line << ":" << column << ": " << what;
    return CliError("parse", kExitParse, os.str());
}

bool parse_number(std::string_view text, double& out) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

template <typename RowFn>
void for_each_line(const std::string& content, RowFn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t nl = content.find('\n', pos);
        if (nl == std::string::npos) {
            nl = content.size();
        }
        std::string_view line(content.data() + pos, nl - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        ++line_no;
        const auto first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#') {
            fn(line_no, line);
        }
        if (nl == content.size()) {
            break;
        }
        pos = nl + 1;
    }
}

} // namespace

std::string format_double(double v) {
    std::array<char, 40> buf{};
    const int len = std::snprintf(buf.data(), buf.size(), "%.16e", v);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::string alpha_tag(double alpha) {
    std::array<char, 40> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), alpha);
    (void)ec;
    return std::string(buf.data(), ptr);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError("io", kExitIo, "cannot open " + path.string() + " for reading");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw CliError("io", kExitIo, "cannot open " + path.string() + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw CliError("io", kExitIo, "failed writing " + path.string());
    }
}

CoefficientTable parse_coefficients(const std::filesystem::path& path) {
    const std::string content = read_text_file(path);
    CoefficientTable table;
    bool header_seen = false;
    std::size_t last_line = 0;

    for_each_line(content, [&](std::size_t line_no, std::string_view line) {
        last_line = line_no;
        const auto cells = split_csv_line(line);
        if (cells.size() != 4) {
            std::ostringstream os;
            os << "expected 4 comma-separated fields (x, A, B, p), found " << cells.size();
            throw parse_error(path, line_no, 1, os.str());
        }
        if (!header_seen) {
            static constexpr std::array<std::string_view, 4> names = {"x", "a", "b", "p"};
            for (std::size_t c = 0; c < 4; ++c) {
                if (lower(cells[c].text) != names[c]) {
                    throw parse_error(path, line_no, cells[c].column,
                                      "header must be `x, A, B, p`, found `" +
                                          std::string(cells[c].text) + "`");
                }
            }
            header_seen = true;
            return;
        }
        std::array<double, 4> v{};
        for (std::size_t c = 0; c < 4; ++c) {
            if (!parse_number(cells[c].text, v[c])) {
                throw parse_error(path, line_no, cells[c].column,
                                  "not a finite number: `" + std::string(cells[c].text) + "`");
            }
        }
        table.x.push_back(v[0]);
        table.a_diff.push_back(v[1]);
        table.b_drift.push_back(v[2]);
        table.p_pot.push_back(v[3]);
    });

    if (!header_seen) {
        throw parse_error(path, std::max<std::size_t>(last_line, 1), 1, "missing header row");
    }
    if (table.x.size() < 3) {
        throw parse_error(path, last_line, 1, "need at least 3 node rows");
    }
    const std::size_t m = table.intervals();
    for (std::size_t i = 0; i <= m; ++i) {
        const double expected = static_cast<double>(i) / static_cast<double>(m);
        if (std::abs(table.x[i] - expected) > 1e-9) {
            std::ostringstream os;
            os << "row " << i << ": x = " << table.x[i] << " is not the grid node " << i << "/"
               << m << "; samples must sit on the uniform grid of [0, 1]";
            throw CliError("parse", kExitParse, path.string() + ": " + os.str());
        }
    }
    return table;
}

std::string field_csv(std::span<const double> values, std::size_t rows, std::size_t cols,
                      double t_final) {
    std::string out = "t";
    for (std::size_t i = 0; i < cols; ++i) {
        out += ",u" + std::to_string(i);
    }
    out += '\n';
    const std::size_t n = rows - 1;
    for (std::size_t k = 0; k < rows; ++k) {
        out += format_double(t_final * static_cast<double>(k) / static_cast<double>(n));
        for (std::size_t i = 0; i < cols; ++i) {
            out += ',';
            out += format_double(values[k * cols + i]);
        }
        out += '\n';
    }
    return out;
}

StoredField read_field_csv(const std::filesystem::path& path) {
    const std::string content = read_text_file(path);
    StoredField field;
    std::vector<double> times;
    std::size_t width = 0;

    for_each_line(content, [&](std::size_t line_no, std::string_view line) {
        const auto cells = split_csv_line(line);
        if (width == 0) {
            if (cells.size() < 4 || cells[0].text != "t") {
                throw parse_error(path, line_no, 1, "expected header `t,u0,...,uM`");
            }
            width = cells.size();
            return;
        }
        if (cells.size() != width) {
            std::ostringstream os;
            os << "expected " << width << " fields, found " << cells.size();
            throw parse_error(path, line_no, 1, os.str());
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            double v = 0.0;
            if (!parse_number(cells[c].text, v)) {
                throw parse_error(path, line_no, cells[c].column,
                                  "not a finite number: `" + std::string(cells[c].text) + "`");
            }
            if (c == 0) {
                times.push_back(v);
            } else {
                field.values.push_back(v);
            }
        }
    });

    if (times.size() < 3) {
        throw CliError("parse", kExitParse, path.string() + ": need at least 3 time levels");
    }
    field.m = width - 2;
    field.n = times.size() - 1;
    field.t_final = times.back();
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double expected =
            field.t_final * static_cast<double>(k) / static_cast<double>(field.n);
        if (std::abs(times[k] - expected) > 1e-12 * std::max(1.0, field.t_final)) {
            std::ostringstream os;
            os << path.string() << ": time column is not uniform at row " << k;
            throw CliError("parse", kExitParse, os.str());
        }
    }
    return field;
}

} // namespace fdcli
