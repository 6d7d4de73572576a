// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bethe/bethe_functions.hpp"
#include "bethe/common.hpp"
#include "bethe/transfer_matrix.hpp"

namespace bethe {

/// Periodic XXZ Hamiltonian restricted to one sector.
struct HamiltonianBlock {
    SectorMatrix matrix;  // kind == MatrixKind::hamiltonian
    double delta = 0.0;
};

/**
 * H = sum_i H_i over the N periodic bonds (i, i+1). Each bond adds +Delta/2 on
 * the diagonal when its two arrows agree and -Delta/2 when they differ, and 1
 * between two states related by exchanging the arrows on that bond.
 */
[[nodiscard]] HamiltonianBlock build_hamiltonian_block(int ring_size, int particles, double delta,
                                                       const Limits& limits = {});

/// E = N Delta / 2 - 2 sum_k (Delta - cos p_k).
[[nodiscard]] double energy_prediction(const MomentumSet& m, int ring_size, double delta);

/// max |(VH - HV)_{ij}|. Both blocks must live on the same sector.
[[nodiscard]] double commutator_norm(const SectorMatrix& v, const HamiltonianBlock& h);

}  // namespace bethe
