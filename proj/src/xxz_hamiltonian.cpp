// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/xxz_hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace bethe {

HamiltonianBlock build_hamiltonian_block(int ring_size, int particles, double delta, const Limits& limits) {
    if (ring_size < 2) throw std::invalid_argument("XXZ Hamiltonian requires N >= 2");
    if (particles >= 0 && particles <= ring_size) detail::check_dense_cap(binomial(ring_size, particles), limits);
    SectorIndex basis(ring_size, particles);
    const auto dim = static_cast<Eigen::Index>(basis.dimension());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

    for (Eigen::Index row = 0; row < dim; ++row) {
        const auto& state = basis.state_of(static_cast<std::size_t>(row));
        for (int site = 1; site <= ring_size; ++site) {
            const int next = site % ring_size + 1;
            if (state.spin(site) == state.spin(next)) {
                h(row, row) += delta / 2.0;
            } else {
                h(row, row) -= delta / 2.0;
                std::uint64_t exchanged = state.mask() ^ (std::uint64_t{1} << (site - 1)) ^ (std::uint64_t{1} << (next - 1));
                h(row, static_cast<Eigen::Index>(basis.index_of_mask(exchanged))) += 1.0;
            }
        }
    }
    return HamiltonianBlock{SectorMatrix{std::move(basis), MatrixKind::hamiltonian, std::move(h)}, delta};
}

double energy_prediction(const MomentumSet& m, int ring_size, double delta) {
    double energy = ring_size * delta / 2.0;
    for (double p : m.momenta()) energy -= 2.0 * (delta - std::cos(p));
    return energy;
}

double commutator_norm(const SectorMatrix& v, const HamiltonianBlock& h) {
    if (!(v.basis == h.matrix.basis) || v.entries.rows() != h.matrix.entries.rows()) {
        throw std::invalid_argument("commutator_norm: blocks belong to different sectors");
    }
    Eigen::MatrixXd vh = v.entries * h.matrix.entries;
    Eigen::MatrixXd hv = h.matrix.entries * v.entries;
    return (vh - hv).cwiseAbs().maxCoeff();
}

}  // namespace bethe
