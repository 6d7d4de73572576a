// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/bethe_ansatz.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>

#include "bethe/permutations.hpp"
#include "bethe/xxz_hamiltonian.hpp"

namespace bethe {

namespace {

const Complex kI{0.0, 1.0};

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    return f;
}

double relative_deviation(Complex computed, Complex expected) {
    return std::abs(computed - expected) / std::abs(expected);
}

}  // namespace

AmplitudeEvaluator::AmplitudeEvaluator(MomentumSet momenta, const Limits& limits)
    : momenta_(std::move(momenta)), n_(static_cast<int>(momenta_.size())) {
    if (n_ > limits.max_permutation_n) {
        throw CapExceeded(fmt::format("n = {} exceeds the permutation-sum cap {}", n_, limits.max_permutation_n));
    }
    const auto& a = momenta_.anisotropy();
    pair_.resize(static_cast<std::size_t>(n_ * n_));
    for (int k = 0; k < n_; ++k) {
        for (int l = 0; l < n_; ++l) {
            Complex f = std::polar(1.0, momenta_[static_cast<std::size_t>(k)]) *
                        scattering_kernel(momenta_[static_cast<std::size_t>(k)], momenta_[static_cast<std::size_t>(l)], a);
            pair_[static_cast<std::size_t>(k * n_ + l)] = f;
            if (k != l) max_pair_magnitude_ = std::max(max_pair_magnitude_, std::abs(f));
        }
    }

    // Swapping the neighbours (u, v) at positions (j, j+1) only reverses that pair.
    std::vector<Complex> swap_ratio(static_cast<std::size_t>(n_ * n_));
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) swap_ratio[static_cast<std::size_t>(u * n_ + v)] = -pair_factor(v, u) / pair_factor(u, v);
    }

    const std::size_t count = factorial(n_);
    perms_.reserve(count * static_cast<std::size_t>(n_));
    amplitudes_.reserve(count);
    AdjacentTranspositionWalk walk(n_);
    Complex current = amplitude(walk.current());
    while (true) {
        auto perm = walk.current();
        perms_.insert(perms_.end(), perm.begin(), perm.end());
        amplitudes_.push_back(current);
        max_amplitude_magnitude_ = std::max(max_amplitude_magnitude_, std::abs(current));
        int j = walk.next();
        if (j < 0) break;
        auto next = walk.current();
        // after the swap, position j holds the former right neighbour
        int u = next[static_cast<std::size_t>(j) + 1];
        int v = next[static_cast<std::size_t>(j)];
        current *= swap_ratio[static_cast<std::size_t>(u * n_ + v)];
    }
}

Complex AmplitudeEvaluator::amplitude(std::span<const int> sigma) const {
    if (static_cast<int>(sigma.size()) != n_ || !is_permutation_of_range(sigma)) {
        throw std::invalid_argument("amplitude: not a permutation of the momentum indices");
    }
    Complex product = static_cast<double>(permutation_sign(sigma));
    for (int k = 0; k < n_; ++k) {
        for (int l = k + 1; l < n_; ++l) product *= pair_factor(sigma[static_cast<std::size_t>(k)], sigma[static_cast<std::size_t>(l)]);
    }
    return product;
}

Complex psi_coefficient(const OccupationVector& x, const AmplitudeEvaluator& ev) {
    const int n = ev.particles();
    if (x.size() != n) throw std::invalid_argument("psi_coefficient: |x| differs from the number of momenta");
    const auto p = ev.momenta().momenta();
    // wave[a * n + k] = exp(i p_a x_k)
    std::vector<Complex> wave(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a) {
        for (int k = 0; k < n; ++k) wave[static_cast<std::size_t>(a * n + k)] = std::polar(1.0, p[static_cast<std::size_t>(a)] * x[k]);
    }
    Complex sum = 0.0;
    for (std::size_t rank = 0; rank < ev.permutation_count(); ++rank) {
        auto sigma = ev.permutation(rank);
        Complex term = ev.tabulated_amplitude(rank);
        for (int k = 0; k < n; ++k) term *= wave[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)] * n + k)];
        sum += term;
    }
    return sum;
}

PsiVector build_psi(const SectorIndex& sector, const AmplitudeEvaluator& ev) {
    if (sector.particles() != ev.particles()) {
        throw std::invalid_argument("build_psi: sector particle number differs from the number of momenta");
    }
    PsiVector out;
    const auto dim = static_cast<Eigen::Index>(sector.dimension());
    out.coefficients.resize(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        out.coefficients(i) = psi_coefficient(sector.state_of(static_cast<std::size_t>(i)), ev);
    }
    out.norm = out.coefficients.norm();
    return out;
}

Complex eigenvalue_regular(const MomentumSet& m) {
    if (m.zero_index()) throw std::invalid_argument("eigenvalue_regular: momentum set has a zero momentum");
    const auto& a = m.anisotropy();
    Complex prod_l = 1.0;
    Complex prod_m = 1.0;
    for (double p : m.momenta()) {
        Complex z = std::polar(1.0, p);
        prod_l *= L_factor(z, a, m.thresholds().zero);
        prod_m *= M_factor(z, a, m.thresholds().zero);
    }
    return prod_l + prod_m;
}

Complex eigenvalue_singular(const MomentumSet& m, int ring_size) {
    if (!m.zero_index()) throw std::invalid_argument("eigenvalue_singular: no zero momentum");
    const std::size_t zero = *m.zero_index();
    const auto& a = m.anisotropy();
    const double c2 = a.c_squared();
    double bracket = 2.0 + c2 * (ring_size - 1);
    Complex prod_m = 1.0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (j == zero) continue;
        if (std::abs(m[j]) < m.thresholds().zero) {
            throw DomainError("eigenvalue_singular: more than one momentum is numerically zero");
        }
        bracket += c2 * theta_partial_1(0.0, m[j], a);
        prod_m *= M_factor(std::polar(1.0, m[j]), a, m.thresholds().zero);
    }
    return bracket * prod_m;
}

Complex transfer_eigenvalue(const MomentumSet& m, int ring_size) {
    return m.zero_index() ? eigenvalue_singular(m, ring_size) : eigenvalue_regular(m);
}

std::vector<Complex> bethe_residual(const MomentumSet& m, int ring_size) {
    const auto& a = m.anisotropy();
    const double sign = (m.size() % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n-1}
    std::vector<Complex> residual;
    residual.reserve(m.size());
    for (double pj : m.momenta()) {
        double phase = 0.0;
        for (double pk : m.momenta()) phase += theta(pj, pk, a);
        residual.push_back(std::polar(1.0, ring_size * pj) - sign * std::polar(1.0, -phase));
    }
    return residual;
}

SpectralPrediction predict(const SectorIndex& sector, const AmplitudeEvaluator& ev) {
    const auto& m = ev.momenta();
    SpectralPrediction out;
    auto psi = build_psi(sector, ev);
    out.psi = std::move(psi.coefficients);
    out.psi_norm = psi.norm;
    out.singular = m.zero_index().has_value();
    out.lambda = transfer_eigenvalue(m, sector.ring_size());
    out.energy = energy_prediction(m, sector.ring_size(), m.anisotropy().delta());
    return out;
}

AmplitudeIdentityReport identity_suite(const MomentumSet& m, int ring_size, int samples, std::uint64_t seed) {
    AmplitudeEvaluator ev(m);
    const int n = ev.particles();
    const auto& a = m.anisotropy();
    AmplitudeIdentityReport report;
    report.samples = samples;
    if (n == 0) return report;

    std::mt19937_64 rng(seed);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    auto p_of = [&](int index) { return m[static_cast<std::size_t>(sigma[static_cast<std::size_t>(index)])]; };

    for (int s = 0; s < samples; ++s) {
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const Complex base = ev.amplitude(sigma);

        for (int j = 0; j + 1 < n; ++j) {
            auto swapped = sigma;
            std::swap(swapped[static_cast<std::size_t>(j)], swapped[static_cast<std::size_t>(j) + 1]);
            Complex expected = -std::exp(kI * theta(p_of(j), p_of(j + 1), a));
            report.adjacent = std::max(report.adjacent, relative_deviation(ev.amplitude(swapped) / base, expected));
        }
        if (n >= 2) {
            auto swapped = sigma;
            std::swap(swapped.front(), swapped.back());
            double first = p_of(0);
            double last = p_of(n - 1);
            Complex expected = -std::polar(1.0, ring_size * (last - first)) * std::exp(kI * theta(last, first, a));
            report.boundary = std::max(report.boundary, relative_deviation(ev.amplitude(swapped) / base, expected));
        }
        // (sigma o tau)(k) = sigma(k + 1), wrapping around.
        auto rotated = sigma;
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        Complex expected = std::polar(1.0, -ring_size * p_of(0));
        report.cyclic = std::max(report.cyclic, relative_deviation(ev.amplitude(rotated) / base, expected));
    }
    return report;
}

void write_psi(std::ostream& out, const Eigen::VectorXcd& psi) {
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        out << fmt::format("{} {:.17g} {:.17g}\n", i, psi(i).real(), psi(i).imag());
    }
}

}  // namespace bethe
