// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bethe_functions.hpp
 * @brief Anisotropy, the scattering kernel S, the two-body phase Theta and
 *        its derivative, and the eigenvalue factors L and M.
 *
 * Conventions: Delta = (2 - c^2)/2, cos(mu) = -Delta with mu in [0, pi) for
 * Delta in (-1, 1), and mu = 0 for Delta <= -1. Momenta live in the open
 * interval D = (-pi + mu, pi - mu).
 */

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bethe/common.hpp"

namespace bethe {

class Anisotropy {
public:
    explicit Anisotropy(double c);

    [[nodiscard]] double c() const noexcept { return c_; }
    [[nodiscard]] double c_squared() const noexcept { return c_ * c_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }
    [[nodiscard]] double mu() const noexcept { return mu_; }
    /// pi - mu; the momentum domain is (-halfwidth, halfwidth).
    [[nodiscard]] double domain_halfwidth() const noexcept { return halfwidth_; }
    [[nodiscard]] bool contains(double p) const noexcept { return p > -halfwidth_ && p < halfwidth_; }

private:
    double c_;
    double delta_;
    double mu_;
    double halfwidth_;
};

/// Real momenta inside D, pairwise distinct, with the index of a vanishing momentum if any.
class MomentumSet {
public:
    MomentumSet(std::vector<double> momenta, const Anisotropy& anisotropy, const Thresholds& thresholds = {});

    /// Skips the distinctness requirement. Used to study the coincident-momentum collapse of psi.
    [[nodiscard]] static MomentumSet relaxed(std::vector<double> momenta, const Anisotropy& anisotropy,
                                             const Thresholds& thresholds = {});

    [[nodiscard]] std::span<const double> momenta() const noexcept { return momenta_; }
    [[nodiscard]] double operator[](std::size_t j) const noexcept { return momenta_[j]; }
    [[nodiscard]] std::size_t size() const noexcept { return momenta_.size(); }
    [[nodiscard]] const Anisotropy& anisotropy() const noexcept { return anisotropy_; }
    [[nodiscard]] const Thresholds& thresholds() const noexcept { return thresholds_; }
    [[nodiscard]] std::optional<std::size_t> zero_index() const noexcept { return zero_index_; }
    [[nodiscard]] bool distinct() const noexcept { return distinct_; }
    /// Smallest pairwise |p_i - p_j| (infinity for n < 2).
    [[nodiscard]] double min_separation() const noexcept { return min_separation_; }

private:
    MomentumSet(std::vector<double> momenta, const Anisotropy& anisotropy, const Thresholds& thresholds,
                bool require_distinct);

    std::vector<double> momenta_;
    Anisotropy anisotropy_;
    Thresholds thresholds_;
    std::optional<std::size_t> zero_index_;
    bool distinct_ = true;
    double min_separation_;
};

/// S(x, y) = e^{-ix} + e^{iy} - 2 Delta.
[[nodiscard]] Complex scattering_kernel(double x, double y, const Anisotropy& a);

/**
 * Continuous branch of the two-body phase with Theta(0,0) = 0 and
 * exp(-i Theta(x,y)) = e^{i(x-y)} S(x,y)/S(y,x).
 *
 * S(y,x) is the complex conjugate of S(x,y), and Re S(x,y) = cos x + cos y - 2 Delta
 * is positive on D x D, so Theta = -(x - y) - 2 arg S(x,y) with the principal
 * argument never crosses a cut. Throws DomainError when Re S <= 0 or |S| < 1e-12.
 */
[[nodiscard]] double theta(double x, double y, const Anisotropy& a);

/// d Theta / dx from the logarithmic derivative of the defining relation.
[[nodiscard]] double theta_partial_1(double x, double y, const Anisotropy& a);

/// d Theta / dy = -theta_partial_1(y, x) by antisymmetry.
[[nodiscard]] double theta_partial_2(double x, double y, const Anisotropy& a);

/// L(z) = 1 + c^2 z / (1 - z). Throws SingularInput when |1 - z| < zero_threshold.
[[nodiscard]] Complex L_factor(Complex z, const Anisotropy& a, double zero_threshold = Thresholds{}.zero);

/// M(z) = 1 - c^2 / (1 - z). Throws SingularInput when |1 - z| < zero_threshold.
[[nodiscard]] Complex M_factor(Complex z, const Anisotropy& a, double zero_threshold = Thresholds{}.zero);

/// Maximum deviations of the function-level identities over a grid of momenta.
struct FunctionIdentityReport {
    double c = 0.0;
    int grid = 0;
    double defining_relation = 0.0;  ///< |exp(-i Theta) - e^{i(x-y)} S(x,y)/S(y,x)|
    double antisymmetry = 0.0;       ///< |Theta(x,y) + Theta(y,x)|
    double theta_origin = 0.0;       ///< |Theta(0,0)| and |Theta(p,p)|
    double ratio_identity = 0.0;     ///< exp(i Theta(p,q)) vs (M(z_p)L(z_q) - 1)/(M(z_q)L(z_p) - 1)
    double zero_identity = 0.0;      ///< exp(i Theta(0,p)) vs -L(z)/M(z)
    double lm_sum = 0.0;             ///< |L(z) + M(z) - (2 - c^2)|
    double derivative_fd = 0.0;      ///< |d1 Theta - central difference with h = 1e-6|
    double min_real_s = 0.0;         ///< smallest Re S seen on the grid
};

/**
 * Runs the identity checks. The algebraic identities use the cell-centre grid
 * p_k = -w + (k + 1/2) 2w/G over the whole domain (w = pi - mu). The
 * finite-difference comparison uses G equally spaced points on
 * [-0.95 w, 0.95 w]: the central difference itself has an O(h^2 d^3 Theta)
 * truncation error that grows without bound at the corners of D x D.
 */
[[nodiscard]] FunctionIdentityReport function_identity_suite(const Anisotropy& a, int grid = 50);

}  // namespace bethe
