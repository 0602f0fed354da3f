#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>

namespace fracdiff::detail {

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae on [0,1],
// mirrored). Gauss nodes are the odd-indexed Kronrod nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

/// Returns {Kronrod estimate, |Kronrod - Gauss|} over [a, b].
template <typename F>
std::pair<double, double> gauss_kronrod_15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * pair;
        }
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <typename F>
double adaptive_gk(const F& f, double a, double b, double abs_tol, int depth) {
    const auto [value, err] = gauss_kronrod_15(f, a, b);
    if (err <= abs_tol || depth <= 0) {
        return value;
    }
    const double mid = 0.5 * (a + b);
    return adaptive_gk(f, a, mid, 0.5 * abs_tol, depth - 1) +
           adaptive_gk(f, mid, b, 0.5 * abs_tol, depth - 1);
}

/// Adaptive Gauss-Kronrod over consecutive breakpoints. The absolute
/// tolerance is rel_tol times a first-pass estimate of the integral.
template <typename F>
double integrate(const F& f, std::span<const double> breakpoints, double rel_tol) {
    double scale = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        scale += std::abs(gauss_kronrod_15(f, breakpoints[i], breakpoints[i + 1]).first);
    }
    const double abs_tol = rel_tol * scale + 1e-300;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        total += adaptive_gk(f, breakpoints[i], breakpoints[i + 1], abs_tol, 50);
    }
    return total;
}

} // namespace fracdiff::detail
