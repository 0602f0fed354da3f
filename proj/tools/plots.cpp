#include "plots.hpp"

#include "tables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <vector>

namespace fdcli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;

std::string num(double v) {
    std::array<char, 32> buf{};
    const int len = std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::string label(double v) {
    std::array<char, 32> buf{};
    const int len = std::snprintf(buf.data(), buf.size(), "%.4g", v);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::string header(const std::string& title) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
                    "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
                    num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
         title + "</text>\n";
    return s;
}

std::string text(double x, double y, const std::string& s, const char* anchor) {
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor + "\">" + s +
           "</text>\n";
}

std::string line(double x1, double y1, double x2, double y2, const char* stroke) {
    return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
           num(y2) + "\" stroke=\"" + stroke + "\"/>\n";
}

} // namespace

std::string lognorm_svg(std::span<const double> times, std::span<const double> norms,
                        double alpha) {
    const double left = 80.0;
    const double right = kWidth - 30.0;
    const double top = 40.0;
    const double bottom = kHeight - 50.0;

    std::vector<std::pair<double, double>> pts;
    for (std::size_t k = 0; k < norms.size(); ++k) {
        if (norms[k] > 0.0) {
            pts.emplace_back(times[k], std::log(norms[k]));
        }
    }
    std::string s = header("log ||u(t)||, alpha = " + alpha_tag(alpha));
    if (pts.empty()) {
        return s + text(kWidth / 2, kHeight / 2, "all norms vanish", "middle") + "</svg>\n";
    }

    const double t0 = times.front();
    const double t1 = times.back() > t0 ? times.back() : t0 + 1.0;
    double y0 = pts.front().second;
    double y1 = y0;
    for (const auto& p : pts) {
        y0 = std::min(y0, p.second);
        y1 = std::max(y1, p.second);
    }
    if (y1 - y0 < 1e-12) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;
    auto sx = [&](double t) { return left + (t - t0) / (t1 - t0) * (right - left); };
    auto sy = [&](double v) { return bottom - (v - y0) / (y1 - y0) * (bottom - top); };

    s += line(left, bottom, right, bottom, "black");
    s += line(left, top, left, bottom, "black");
    for (int j = 0; j <= 4; ++j) {
        const double t = t0 + (t1 - t0) * j / 4.0;
        const double v = y0 + (y1 - y0) * j / 4.0;
        s += line(sx(t), bottom, sx(t), bottom + 5, "black");
        s += text(sx(t), bottom + 18, label(t), "middle");
        s += line(left - 5, sy(v), left, sy(v), "black");
        s += text(left - 8, sy(v) + 4, label(v), "end");
    }
    s += text((left + right) / 2, kHeight - 12, "t", "middle");

    s += "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"";
    for (std::size_t j = 0; j < pts.size(); ++j) {
        s += (j ? " " : "") + num(sx(pts[j].first)) + "," + num(sy(pts[j].second));
    }
    s += "\"/>\n";
    for (const auto& p : pts) {
        s += "<circle cx=\"" + num(sx(p.first)) + "\" cy=\"" + num(sy(p.second)) +
             "\" r=\"2\" fill=\"#1f5fa8\"/>\n";
    }
    return s + "</svg>\n";
}

std::string surface_svg(std::span<const double> values, std::size_t rows, std::size_t cols,
                        double t_final, double alpha) {
    // Unit cube (x, t/T, u/umax) projected isometrically.
    double umax = 0.0;
    for (double v : values) {
        umax = std::max(umax, std::abs(v));
    }
    if (umax == 0.0) {
        umax = 1.0;
    }
    const double c30 = std::cos(std::acos(-1.0) / 6.0);
    const double scale = 230.0;
    const double ox = kWidth / 2.0;
    const double oy = kHeight - 70.0;
    auto project = [&](double x, double t, double u) {
        const double px = ox + (x - t) * c30 * scale;
        const double py = oy - (x + t) * 0.5 * scale * 0.5 - u * scale * 0.55;
        return std::pair{px, py};
    };
    auto node = [&](std::size_t k, std::size_t i) {
        const double x = static_cast<double>(i) / static_cast<double>(cols - 1);
        const double t = static_cast<double>(k) / static_cast<double>(rows - 1);
        return project(x, t, values[k * cols + i] / umax);
    };
    auto polyline = [](const std::vector<std::pair<double, double>>& pts, const char* stroke) {
        std::string s = "<polyline fill=\"none\" stroke=\"";
        s += stroke;
        s += "\" stroke-width=\"0.8\" points=\"";
        for (std::size_t j = 0; j < pts.size(); ++j) {
            s += (j ? " " : "") + num(pts[j].first) + "," + num(pts[j].second);
        }
        return s + "\"/>\n";
    };

    std::string s = header("u(t, x), alpha = " + alpha_tag(alpha) + ", T = " + label(t_final));
    const auto o = project(0, 0, 0);
    const auto ex = project(1, 0, 0);
    const auto et = project(0, 1, 0);
    const auto eu = project(0, 0, 1);
    s += line(o.first, o.second, ex.first, ex.second, "gray");
    s += line(o.first, o.second, et.first, et.second, "gray");
    s += line(o.first, o.second, eu.first, eu.second, "gray");
    s += text(ex.first + 10, ex.second + 14, "x", "start");
    s += text(et.first - 10, et.second + 14, "t", "end");
    s += text(eu.first, eu.second - 6, "u (max " + label(umax) + ")", "middle");

    const std::size_t row_step = std::max<std::size_t>(1, (rows - 1 + 39) / 40);
    const std::size_t col_step = std::max<std::size_t>(1, (cols - 1 + 39) / 40);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t k = 0; k < rows; k += row_step) {
        pts.clear();
        for (std::size_t i = 0; i < cols; ++i) {
            pts.push_back(node(k, i));
        }
        s += polyline(pts, "#1f5fa8");
    }
    for (std::size_t i = 0; i < cols; i += col_step) {
        pts.clear();
        for (std::size_t k = 0; k < rows; ++k) {
            pts.push_back(node(k, i));
        }
        s += polyline(pts, "#b0443c");
    }
    return s + "</svg>\n";
}

} // namespace fdcli
