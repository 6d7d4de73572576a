// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/spectral_oracle.hpp"

#include <fmt/format.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bethe {

SpectrumResult dense_spectrum(const SectorMatrix& m, const Limits& limits) {
    const auto& a = m.entries;
    if (static_cast<std::size_t>(a.rows()) > limits.max_spectrum_dim) {
        throw CapExceeded(fmt::format("block dimension {} exceeds the eigensolver cap {}", a.rows(),
                                      limits.max_spectrum_dim));
    }
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw std::invalid_argument("dense_spectrum: matrix is not symmetric");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw std::runtime_error("dense_spectrum: eigensolver failed");
    const auto& w = solver.eigenvalues();
    const auto& q = solver.eigenvectors();

    SpectrumResult out;
    out.eigenvalues.assign(w.data(), w.data() + w.size());
    const auto dim = a.rows();
    out.orthonormality_defect = (q.transpose() * q - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    out.reconstruction_defect = (q * w.asDiagonal() * q.transpose() - a).norm() / std::max(1.0, a.norm());
    out.trace_defect = std::abs(w.sum() - a.trace()) / std::max(1.0, std::abs(a.trace()));
    return out;
}

double check_eigenpair(const SectorMatrix& m, const Eigen::VectorXcd& psi, Complex lambda) {
    if (psi.size() != m.entries.rows()) throw std::invalid_argument("check_eigenpair: dimension mismatch");
    const double norm = psi.norm();
    if (!(norm > 0.0)) throw std::invalid_argument("check_eigenpair: zero vector");
    Eigen::VectorXcd image = m.entries.cast<Complex>() * psi;
    return (image - lambda * psi).norm() / norm;
}

std::optional<EigenvalueMatch> match_eigenvalue(double lambda, const SpectrumResult& spectrum, double tol) {
    const double window = tol * std::max(1.0, std::abs(lambda));
    EigenvalueMatch match;
    match.distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
        double d = std::abs(spectrum.eigenvalues[i] - lambda);
        if (d < match.distance) {
            match.distance = d;
            match.nearest = i;
        }
        if (d <= window) match.cluster.push_back(i);
    }
    if (match.cluster.empty()) return std::nullopt;
    return match;
}

}  // namespace bethe
