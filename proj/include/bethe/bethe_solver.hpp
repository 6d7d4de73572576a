// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bethe_solver.hpp
 * @brief Damped Newton solver for the logarithmic Bethe equations
 *
 *     F_j(p) = N p_j - 2 pi I_j + sum_k Theta(p_j, p_k) = 0.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bethe/bethe_functions.hpp"
#include "bethe/common.hpp"

namespace bethe {

/// Distinct quantum numbers I_j, integers for odd n and half-integers for even n.
/// Stored as 2 I_j so half-integers stay exact.
class QuantumNumbers {
public:
    explicit QuantumNumbers(std::vector<int> twice_values);

    /// Comma-separated list of integers or k/2 fractions, e.g. "-1/2,1/2" or "-1, 0, 1".
    [[nodiscard]] static QuantumNumbers parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return twice_.size(); }
    [[nodiscard]] const std::vector<int>& twice_values() const noexcept { return twice_; }
    [[nodiscard]] double value(std::size_t j) const { return 0.5 * twice_.at(j); }
    [[nodiscard]] std::string to_string() const;

private:
    std::vector<int> twice_;
};

/// I_j = j - (n+1)/2 for j = 1..n.
[[nodiscard]] QuantumNumbers ground_state_quantum_numbers(int n);

struct SolverConfig {
    double tol = 1e-12;
    int max_iter = 200;
    double damping_floor = 1.0 / (1 << 20);
    double domain_margin = 1e-12;
    double singular_condition = 1e12;
    Thresholds thresholds{};
};

struct SolveReport {
    MomentumSet momenta;
    int iterations = 0;
    double final_residual = 0.0;
    bool converged = false;
    double jacobian_condition_estimate = 1.0;
    bool jacobian_singular = false;
    bool degenerate = false;  ///< converged momenta closer than the distinctness tolerance
    std::vector<double> residual_history;
};

/// Residual vector F(p) of the logarithmic equations.
[[nodiscard]] std::vector<double> logarithmic_residual(std::span<const double> momenta, const QuantumNumbers& qn,
                                                       int ring_size, const Anisotropy& a);

/// Requires n <= N/2. Non-convergence is reported, never thrown.
[[nodiscard]] SolveReport solve(int ring_size, const QuantumNumbers& qn, const Anisotropy& a,
                                const SolverConfig& cfg = {});

}  // namespace bethe
