#include "fracdiff/special_functions.hpp"

#include "fracdiff/error.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace fracdiff {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) with exact argument reduction, so integers give exactly zero.
double sin_pi(double x) {
    double r = std::fmod(x, 2.0);  // exact
    if (r > 1.0) {
        r -= 2.0;
    } else if (r < -1.0) {
        r += 2.0;
    }
    if (r == 0.0 || r == 1.0 || r == -1.0) {
        return 0.0;
    }
    return std::sin(kPi * r);
}

double lanczos_gamma(double x) {
    // x >= 0.5
    const double y = x - 1.0;
    double acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        acc += kLanczos[i] / (y + static_cast<double>(i));
    }
    const double t = y + kLanczosG + 0.5;
    // t^(y+1/2) split in two halves so large arguments do not overflow early.
    const double half_power = std::pow(t, 0.5 * (y + 0.5));
    return std::sqrt(2.0 * kPi) * half_power * (half_power * std::exp(-t)) * acc;
}

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            carry_ += (sum_ - t) + v;
        } else {
            carry_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        std::ostringstream os;
        os << "Mittag-Leffler order must lie in (0, 1], got " << alpha;
        throw Error(ErrorCode::Domain, os.str());
    }
}

double mittag_leffler_integral(double alpha, double x) {
    // E_a(-x), x > 0, 0 < a < 1.
    const double c = std::cos(alpha * kPi);
    const double s = std::sin(alpha * kPi);
    const double shift = x * c;
    const double width2 = (x * s) * (x * s);
    const double inv_alpha = 1.0 / alpha;
    auto integrand = [=](double r) {
        const double d = r + shift;
        return std::exp(-std::pow(r, inv_alpha)) / (d * d + width2);
    };

    // exp(-r^(1/a)) underflows past r = 745^a.
    const double upper = std::pow(745.0, alpha);
    std::vector<double> breaks = {0.0, std::min(1.0, upper), upper};
    const double peak = -shift;
    if (peak > 0.0 && peak < upper) {
        const double w = x * s;
        for (double b : {peak - w, peak, peak + w}) {
            if (b > 0.0 && b < upper) {
                breaks.push_back(b);
            }
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const double integral = detail::integrate(integrand, breaks, 1e-15);
    return x * s / (alpha * kPi) * integral;
}

} // namespace

void MLParams::validate() const {
    require_alpha(alpha);
    if (series_cutoff == 0) {
        throw Error(ErrorCode::Argument, "series_cutoff must be positive");
    }
    if (!(tail_tolerance > 0.0)) {
        throw Error(ErrorCode::Argument, "tail_tolerance must be positive");
    }
}

double gamma(double x) {
    if (std::isnan(x) || is_nonpositive_integer(x)) {
        std::ostringstream os;
        os << "gamma has a pole at " << x;
        throw Error(ErrorCode::Domain, os.str());
    }
    if (x == std::floor(x) && x <= 23.0) {
        double f = 1.0;
        for (double k = 2.0; k < x; k += 1.0) {
            f *= k;
        }
        return f;
    }
    if (x < 0.5) {
        return kPi / (sin_pi(x) * lanczos_gamma(1.0 - x));
    }
    return lanczos_gamma(x);
}

double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) {
        return 0.0;
    }
    if (x < 0.5) {
        return sin_pi(x) * gamma(1.0 - x) / kPi;
    }
    const double g = gamma(x);
    return std::isinf(g) ? 0.0 : 1.0 / g;
}

double mittag_leffler_series(const MLParams& params, double z) {
    params.validate();
    CompensatedSum sum;
    sum.add(1.0);
    int small_run = 0;
    double term = 1.0;
    for (std::size_t k = 1; k < params.series_cutoff; ++k) {
        const double kd = static_cast<double>(k);
        term = std::pow(z, kd) * reciprocal_gamma(params.alpha * kd + 1.0);
        if (!std::isfinite(term)) {
            std::ostringstream os;
            os << "Mittag-Leffler series overflowed at term " << k << " (alpha=" << params.alpha
               << ", z=" << z << ")";
            throw Error(ErrorCode::Accuracy, os.str());
        }
        sum.add(term);
        const double scale = std::max(1.0, std::abs(sum.value()));
        small_run = std::abs(term) < params.tail_tolerance * scale ? small_run + 1 : 0;
        if (small_run >= 2) {
            return sum.value();
        }
    }
    std::ostringstream os;
    os << "Mittag-Leffler series did not converge within " << params.series_cutoff
       << " terms; last term magnitude " << std::abs(term);
    throw Error(ErrorCode::Accuracy, os.str());
}

double mittag_leffler_asymptotic(double alpha, double z, int terms) {
    require_alpha(alpha);
    CompensatedSum sum;
    const double inv_z = 1.0 / z;
    double power = 1.0;
    for (int k = 1; k <= terms; ++k) {
        power *= inv_z;
        sum.add(-power * reciprocal_gamma(1.0 - alpha * k));
    }
    return sum.value();
}

double mittag_leffler(const MLParams& params, double z) {
    params.validate();
    if (std::isnan(z)) {
        throw Error(ErrorCode::Domain, "Mittag-Leffler argument is NaN");
    }
    if (z == 0.0) {
        return 1.0;
    }
    if (z >= -1.0) {
        return mittag_leffler_series(params, z);
    }
    if (params.alpha == 1.0) {
        return std::exp(z);
    }
    if (z >= -50.0) {
        return mittag_leffler_integral(params.alpha, -z);
    }
    return mittag_leffler_asymptotic(params.alpha, z);
}

double mittag_leffler(double alpha, double z) {
    MLParams params;
    params.alpha = alpha;
    return mittag_leffler(params, z);
}

} // namespace fracdiff
