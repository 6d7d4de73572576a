// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectral_oracle.hpp
 * @brief Dense symmetric eigendecomposition and eigenpair checks used to
 *        verify Bethe predictions independently of the ansatz.
 */

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "bethe/common.hpp"
#include "bethe/transfer_matrix.hpp"

namespace bethe {

struct SpectrumResult {
    std::vector<double> eigenvalues;    ///< ascending
    double orthonormality_defect = 0.0; ///< max |Q^T Q - I|
    double reconstruction_defect = 0.0; ///< |Q diag(w) Q^T - A|_F / max(1, |A|_F)
    double trace_defect = 0.0;          ///< |sum w - tr A| / max(1, |tr A|)
};

/// Rejects asymmetry above 1e-12 (relative to the largest entry) and dimensions above limits.max_spectrum_dim.
[[nodiscard]] SpectrumResult dense_spectrum(const SectorMatrix& m, const Limits& limits = {});

/// |M psi - lambda psi|_2 / |psi|_2.
[[nodiscard]] double check_eigenpair(const SectorMatrix& m, const Eigen::VectorXcd& psi, Complex lambda);

struct EigenvalueMatch {
    std::size_t nearest = 0;
    std::vector<std::size_t> cluster;  ///< every index within tolerance, ascending
    double distance = 0.0;
};

/// Matches when |lambda - w_i| <= tol * max(1, |lambda|).
[[nodiscard]] std::optional<EigenvalueMatch> match_eigenvalue(double lambda, const SpectrumResult& spectrum,
                                                              double tol);

}  // namespace bethe
