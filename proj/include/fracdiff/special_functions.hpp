#pragma once

#include <cstddef>

namespace fracdiff {

/// Controls for the power-series branch of the Mittag-Leffler evaluation.
struct MLParams {
    double alpha = 0.5;
    std::size_t series_cutoff = 4000;
    /// Summation stops once two consecutive terms fall below
    /// tail_tolerance * max(1, |partial sum|).
    double tail_tolerance = 1e-18;

    void validate() const;
};

/// Euler gamma function (Lanczos approximation, reflection below 0.5).
/// Throws Error{Domain} at the poles 0, -1, -2, ...
double gamma(double x);

/// 1/Gamma(x); entire, returns exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x);

/// One-parameter Mittag-Leffler function E_alpha(z) for real z, 0 < alpha <= 1.
///
/// Branches:
///   * |z| <= 1, or z > 0: defining power series with compensated summation.
///   * alpha == 1, z < -1: exp(z).
///   * -50 <= z < -1: real-line Laplace inversion
///       E_a(-x) = x sin(a pi)/(a pi) * int_0^inf exp(-s^(1/a)) / (s^2 + 2 x s cos(a pi) + x^2) ds
///     evaluated by adaptive Gauss-Kronrod quadrature. The series would lose
///     every significant digit to cancellation here once alpha is small.
///   * z < -50: asymptotic expansion -sum_{k=1}^{30} z^-k / Gamma(1 - a k).
double mittag_leffler(double alpha, double z);
double mittag_leffler(const MLParams& params, double z);

/// Direct power-series evaluation; exposed for tests and diagnostics.
/// Throws Error{Accuracy} if the series fails to settle within the cutoff
/// or overflows.
double mittag_leffler_series(const MLParams& params, double z);

/// Asymptotic branch for large negative z; exposed for tests.
double mittag_leffler_asymptotic(double alpha, double z, int terms = 30);

} // namespace fracdiff
