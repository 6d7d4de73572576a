// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file transfer_matrix.hpp
 * @brief Six-vertex transfer matrix blocks, their ice-rule reconstruction,
 *        and the brute-force torus partition function.
 */

#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string_view>

#include "bethe/common.hpp"
#include "bethe/sector_basis.hpp"

namespace bethe {

/// Isotropic six-vertex weights: a = b = 1, c > 0.
class VertexWeights {
public:
    explicit VertexWeights(double c);

    [[nodiscard]] static constexpr double a() noexcept { return 1.0; }
    [[nodiscard]] static constexpr double b() noexcept { return 1.0; }
    [[nodiscard]] double c() const noexcept { return c_; }

private:
    double c_;
};

/**
 * c^k with the even part evaluated as (c^2)^{k/2} by repeated squaring.
 * Every construction that needs a power of c goes through here so that
 * independently built matrices agree bit for bit.
 */
[[nodiscard]] double weight_power(double c, int k);

enum class MatrixKind { transfer, hamiltonian };

[[nodiscard]] std::string_view to_string(MatrixKind kind) noexcept;

/// Dense real symmetric block of V or H on one sector, with its basis attached.
struct SectorMatrix {
    SectorIndex basis;
    MatrixKind kind;
    Eigen::MatrixXd entries;

    [[nodiscard]] int ring_size() const noexcept { return basis.ring_size(); }
    [[nodiscard]] int particles() const noexcept { return basis.particles(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return basis.dimension(); }
};

/// V(x,x) = 2, V(x,y) = c^{P(x,y)} for distinct interlaced x,y, zero otherwise.
[[nodiscard]] SectorMatrix build_transfer_block(int ring_size, int particles, const VertexWeights& weights,
                                                const Limits& limits = {});

/**
 * Builds the same block by enumerating all horizontal-arrow completions of
 * one row between the bottom pattern x and the top pattern y, keeping those
 * that satisfy the ice rule at every vertex and summing their weights.
 */
[[nodiscard]] SectorMatrix build_transfer_block_by_configuration(int ring_size, int particles,
                                                                 const VertexWeights& weights,
                                                                 const Limits& limits = {});

/**
 * Exact Z_6V on the N x M torus by exhaustive enumeration of arrow
 * configurations, pruned as soon as a vertex with all four edges set
 * violates the ice rule. Requires N, M >= 2 and 2NM <= limits.max_enumeration_log2.
 */
[[nodiscard]] double partition_function_bruteforce(int ring_size, int rows, const VertexWeights& weights,
                                                   const Limits& limits = {});

/// Sum over sectors of Tr(block^M).
[[nodiscard]] double trace_power(int ring_size, int rows, const VertexWeights& weights,
                                 const Limits& limits = {});

/// Tr(B^M) for a single block, by repeated dense multiplication.
[[nodiscard]] double block_trace_power(const Eigen::MatrixXd& block, int rows);

/// Header "N n dim kind", then dim rows of 17-significant-digit entries.
void write_matrix(std::ostream& out, const SectorMatrix& m);
[[nodiscard]] SectorMatrix read_matrix(std::istream& in);

namespace detail {
void check_dense_cap(std::uint64_t dim, const Limits& limits);
}

}  // namespace bethe
