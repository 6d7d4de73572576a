// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bethe_ansatz.hpp
 * @brief The Bethe vector psi as a permutation sum of plane waves, the
 *        transfer-matrix eigenvalue prediction (regular and zero-momentum
 *        branches), Bethe-equation residuals and the amplitude ratio checks.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bethe/bethe_functions.hpp"
#include "bethe/common.hpp"
#include "bethe/sector_basis.hpp"

namespace bethe {

/**
 * Amplitudes A_sigma = sign(sigma) prod_{k<l} e^{i p_sigma(k)} S(p_sigma(k), p_sigma(l)).
 *
 * Permutations are 0-based in one-line notation: sigma[k] is the image of k.
 * On construction every amplitude is tabulated in Steinhaus-Johnson-Trotter
 * order, each one obtained from its predecessor by a single adjacent
 * transposition ratio; amplitude() evaluates the product directly.
 */
class AmplitudeEvaluator {
public:
    explicit AmplitudeEvaluator(MomentumSet momenta, const Limits& limits = {});

    [[nodiscard]] const MomentumSet& momenta() const noexcept { return momenta_; }
    [[nodiscard]] int particles() const noexcept { return n_; }

    /// e^{i p_k} S(p_k, p_l).
    [[nodiscard]] Complex pair_factor(int k, int l) const {
        return pair_[static_cast<std::size_t>(k * n_ + l)];
    }
    [[nodiscard]] double max_pair_factor_magnitude() const noexcept { return max_pair_magnitude_; }

    /// Direct product formula.
    [[nodiscard]] Complex amplitude(std::span<const int> sigma) const;

    [[nodiscard]] std::size_t permutation_count() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const int> permutation(std::size_t rank) const {
        return {perms_.data() + rank * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
    }
    [[nodiscard]] Complex tabulated_amplitude(std::size_t rank) const { return amplitudes_[rank]; }
    [[nodiscard]] double max_amplitude_magnitude() const noexcept { return max_amplitude_magnitude_; }

private:
    MomentumSet momenta_;
    int n_;
    std::vector<Complex> pair_;
    double max_pair_magnitude_ = 0.0;
    std::vector<int> perms_;
    std::vector<Complex> amplitudes_;
    double max_amplitude_magnitude_ = 0.0;
};

/// psi(x) = sum_sigma A_sigma prod_k exp(i p_sigma(k) x_k), summed in tabulation order.
[[nodiscard]] Complex psi_coefficient(const OccupationVector& x, const AmplitudeEvaluator& ev);

struct PsiVector {
    Eigen::VectorXcd coefficients;
    double norm = 0.0;
};

[[nodiscard]] PsiVector build_psi(const SectorIndex& sector, const AmplitudeEvaluator& ev);

/// prod_j L(e^{ip_j}) + prod_j M(e^{ip_j}); requires no vanishing momentum.
[[nodiscard]] Complex eigenvalue_regular(const MomentumSet& m);

/// [2 + c^2 (N-1) + c^2 sum_{j != l} d1 Theta(0, p_j)] prod_{j != l} M(e^{ip_j}) for p_l = 0.
[[nodiscard]] Complex eigenvalue_singular(const MomentumSet& m, int ring_size);

/// Picks the branch from MomentumSet::zero_index().
[[nodiscard]] Complex transfer_eigenvalue(const MomentumSet& m, int ring_size);

/// exp(i N p_j) - (-1)^{n-1} exp(-i sum_k Theta(p_j, p_k)) for each j.
[[nodiscard]] std::vector<Complex> bethe_residual(const MomentumSet& m, int ring_size);

struct SpectralPrediction {
    Eigen::VectorXcd psi;
    Complex lambda;
    double energy = 0.0;
    double psi_norm = 0.0;
    bool singular = false;
};

/// psi on the sector together with Lambda and the XXZ energy E (Delta = (2 - c^2)/2).
[[nodiscard]] SpectralPrediction predict(const SectorIndex& sector, const AmplitudeEvaluator& ev);

/// Largest relative deviations of the amplitude ratio identities over sampled permutations.
struct AmplitudeIdentityReport {
    int samples = 0;
    double adjacent = 0.0;  ///< A_{s o (j,j+1)} / A_s = -exp(i Theta(p_s(j), p_s(j+1)))
    double boundary = 0.0;  ///< A_{s o (n,1)} / A_s = -(z_s(n)/z_s(1))^N exp(i Theta(p_s(n), p_s(1)))
    double cyclic = 0.0;    ///< A_{s o tau} / A_s = z_s(1)^{-N}
};

/// The adjacent identity holds for any momenta; the boundary and cyclic ones need solved roots.
[[nodiscard]] AmplitudeIdentityReport identity_suite(const MomentumSet& m, int ring_size, int samples = 20,
                                                     std::uint64_t seed = 0x5eed);

/// "index real imag" per line in basis order, 17 significant digits.
void write_psi(std::ostream& out, const Eigen::VectorXcd& psi);

}  // namespace bethe
