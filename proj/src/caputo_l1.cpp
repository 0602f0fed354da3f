#include "fracdiff/caputo_l1.hpp"

#include "fracdiff/error.hpp"
#include "fracdiff/special_functions.hpp"

#include <cmath>
#include <sstream>

namespace fracdiff {

namespace {

void require_order(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        std::ostringstream os;
        os << "fractional order must lie in (0, 1], got " << alpha;
        throw Error(ErrorCode::Domain, os.str());
    }
}

} // namespace

std::vector<double> l1_weights(double alpha, std::size_t k) {
    require_order(alpha);
    if (k == 0) {
        throw Error(ErrorCode::Argument, "l1_weights needs k >= 1");
    }
    const double e = 1.0 - alpha;
    std::vector<double> w(k);
    // 0^(1-alpha) is taken as 0 for every alpha, the alpha -> 1 limit, so a_0 = 1.
    double prev = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const double next = std::pow(static_cast<double>(j + 1), e);
        w[j] = next - prev;
        prev = next;
    }
    return w;
}

L1Weights::L1Weights(double alpha, double dt, std::size_t max_steps)
    : alpha_(alpha), dt_(dt), mu_(0.0), weights_(l1_weights(alpha, max_steps + 1)) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorCode::Argument, "time step must be positive and finite");
    }
    mu_ = std::pow(dt, -alpha) / gamma(2.0 - alpha);
}

double L1Weights::apply(std::span<const double> history) const {
    if (history.size() < 2) {
        throw Error(ErrorCode::Argument, "Caputo L1 needs at least two history values");
    }
    const std::size_t k = history.size() - 1;
    if (k > max_steps()) {
        throw Error(ErrorCode::Argument, "history longer than the precomputed weight table");
    }
    double acc = history[k] - weights_[k - 1] * history[0];
    for (std::size_t j = 1; j < k; ++j) {
        acc -= history_coefficient(k, j) * history[j];
    }
    return mu_ * acc;
}

double caputo_l1_apply(std::span<const double> history, double alpha, double dt) {
    if (history.size() < 2) {
        throw Error(ErrorCode::Argument, "Caputo L1 needs at least two history values");
    }
    return L1Weights(alpha, dt, history.size() - 1).apply(history);
}

} // namespace fracdiff
