#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracdiff {

/// a_j = (j+1)^(1-alpha) - j^(1-alpha) for j = 0..k-1.
/// Throws Error{Domain} for alpha outside (0, 1], Error{Argument} for k == 0.
std::vector<double> l1_weights(double alpha, std::size_t k);

/// L1 discretization of the Caputo derivative, with the weight sequence and
/// the prefactor dt^-alpha / Gamma(2 - alpha) computed once.
///
/// For a history u_0..u_k on a uniform grid the derivative at t_k is
///   mu * (u_k - sum_{j=1}^{k-1} (a_{k-j-1} - a_{k-j}) u_j - a_{k-1} u_0).
/// The history sum is evaluated directly, so a full march over N steps costs
/// O(N^2) per spatial node.
class L1Weights {
public:
    /// Precomputes a_0..a_{max_steps}.
    L1Weights(double alpha, double dt, std::size_t max_steps);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] double dt() const noexcept { return dt_; }
    /// dt^-alpha / Gamma(2 - alpha)
    [[nodiscard]] double mu() const noexcept { return mu_; }
    [[nodiscard]] std::size_t max_steps() const noexcept { return weights_.size() - 1; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
    [[nodiscard]] double operator[](std::size_t j) const { return weights_[j]; }

    /// Coefficient multiplying u_j (1 <= j <= k-1) in the history term at step k.
    [[nodiscard]] double history_coefficient(std::size_t k, std::size_t j) const {
        return weights_[k - j - 1] - weights_[k - j];
    }

    /// Discrete Caputo derivative at the last entry of history.
    [[nodiscard]] double apply(std::span<const double> history) const;

private:
    double alpha_;
    double dt_;
    double mu_;
    std::vector<double> weights_;
};

/// Stand-alone form of L1Weights::apply. history holds u(t_0)..u(t_k), k >= 1.
double caputo_l1_apply(std::span<const double> history, double alpha, double dt);

} // namespace fracdiff
