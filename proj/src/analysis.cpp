#include "fracdiff/analysis.hpp"

#include "fracdiff/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracdiff {

namespace {

double chord_weight(const NormCurve& curve, std::size_t k) {
    const double t0 = curve.times.front();
    const double span = curve.times.back() - t0;
    return (curve.times[k] - t0) / span;
}

} // namespace

NormCurve NormCurve::from_norms(std::vector<double> times, std::vector<double> norms) {
    if (times.size() != norms.size()) {
        throw Error(ErrorCode::Argument, "norm curve: times and norms differ in length");
    }
    NormCurve curve;
    curve.times = std::move(times);
    curve.norms = std::move(norms);
    curve.log_norms.resize(curve.norms.size(), 0.0);
    curve.positive.resize(curve.norms.size(), false);
    for (std::size_t k = 0; k < curve.norms.size(); ++k) {
        if (curve.norms[k] > 0.0) {
            curve.positive[k] = true;
            curve.log_norms[k] = std::log(curve.norms[k]);
        }
    }
    return curve;
}

bool NormCurve::all_positive() const {
    return std::all_of(positive.begin(), positive.end(), [](bool p) { return p; });
}

double l2_norm(std::span<const double> samples, double dx) {
    if (samples.size() < 2) {
        throw Error(ErrorCode::Argument, "l2_norm needs at least two samples");
    }
    double sum = 0.5 * (samples.front() * samples.front() + samples.back() * samples.back());
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        sum += samples[i] * samples[i];
    }
    return std::sqrt(sum * dx);
}

NormCurve norm_curve(const SolutionField& field) {
    const Grid1D& grid = field.grid();
    std::vector<double> times(field.rows());
    std::vector<double> norms(field.rows());
    for (std::size_t k = 0; k < field.rows(); ++k) {
        times[k] = grid.t(k);
        norms[k] = l2_norm(field.row(k), grid.dx());
    }
    return NormCurve::from_norms(std::move(times), std::move(norms));
}

double convexity_defect(const NormCurve& curve) {
    if (curve.size() < 3) {
        throw Error(ErrorCode::Argument, "convexity defect needs at least three time levels");
    }
    for (std::size_t k = 0; k < curve.size(); ++k) {
        if (!curve.positive[k]) {
            std::ostringstream os;
            os << "norm curve vanishes at k = " << k << "; log-convexity is undefined";
            throw Error(ErrorCode::DegenerateCurve, os.str());
        }
    }
    const auto& l = curve.log_norms;
    double defect = l[0] - 2.0 * l[1] + l[2];
    for (std::size_t k = 2; k + 1 < l.size(); ++k) {
        defect = std::min(defect, l[k - 1] - 2.0 * l[k] + l[k + 1]);
    }
    return defect;
}

double convexity_tolerance(const NormCurve& curve, double rel_tol) {
    double lo = 0.0;
    double hi = 0.0;
    bool seen = false;
    for (std::size_t k = 0; k < curve.size(); ++k) {
        if (!curve.positive[k]) {
            continue;
        }
        lo = seen ? std::min(lo, curve.log_norms[k]) : curve.log_norms[k];
        hi = seen ? std::max(hi, curve.log_norms[k]) : curve.log_norms[k];
        seen = true;
    }
    return rel_tol * std::max(1.0, hi - lo);
}

double kappa_fit(const NormCurve& curve, double b_sup_norm) {
    if (curve.size() < 2) {
        throw Error(ErrorCode::Argument, "kappa fit needs at least two time levels");
    }
    const double n0 = curve.norms.front();
    const double nt = curve.norms.back();
    if (!(n0 > 0.0) || !(nt > 0.0)) {
        throw Error(ErrorCode::DegenerateCurve, "kappa fit needs nonzero endpoint norms");
    }
    const double log_n0 = std::log(n0);
    const double log_nt = std::log(nt);
    double kappa = 0.0;
    for (std::size_t k = 0; k < curve.size(); ++k) {
        const double w = chord_weight(curve, k);
        const double chord = std::exp(b_sup_norm + (1.0 - w) * log_n0 + w * log_nt);
        kappa = std::max(kappa, curve.norms[k] / chord);
    }
    return kappa;
}

LogConvexityReport analyze(const SolutionField& field, double b_sup_norm, double rel_tol) {
    LogConvexityReport report;
    report.alpha = field.alpha();
    report.curve = norm_curve(field);
    report.b_sup_norm = b_sup_norm;
    report.min_second_difference = convexity_defect(report.curve);
    report.tolerance = convexity_tolerance(report.curve, rel_tol);
    report.is_log_convex = report.min_second_difference >= -report.tolerance;
    report.kappa_fit = kappa_fit(report.curve, b_sup_norm);
    return report;
}

BackwardUniquenessReport backward_uniqueness_probe(const SolutionField& field, double threshold,
                                                   double b_sup_norm) {
    const NormCurve curve = norm_curve(field);
    BackwardUniquenessReport report;
    report.norms = curve.norms;
    report.terminal_norm = curve.norms.back();
    report.applicable = report.terminal_norm <= threshold;
    if (!report.applicable) {
        return report;
    }
    report.max_norm = *std::max_element(curve.norms.begin(), curve.norms.end());

    const double n0 = curve.norms.front();
    const double nt = report.terminal_norm;
    report.kappa_fitted = n0 > 0.0 && nt > 0.0;
    report.kappa = report.kappa_fitted ? kappa_fit(curve, b_sup_norm) : 1.0;

    report.bounds.resize(curve.size());
    const double prefactor = report.kappa * std::exp(b_sup_norm);
    for (std::size_t k = 0; k < curve.size(); ++k) {
        const double w = chord_weight(curve, k);
        report.bounds[k] = prefactor * std::pow(n0, 1.0 - w) * std::pow(nt, w);
    }
    report.max_bound = *std::max_element(report.bounds.begin(), report.bounds.end());
    return report;
}

} // namespace fracdiff
