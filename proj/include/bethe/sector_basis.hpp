// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file sector_basis.hpp
 * @brief Position-list basis states of the n-up-arrow sector and the
 *        combinatorial predicates (interlacement, mismatch count) that
 *        define the transfer matrix.
 *
 * Sites are labelled 1..N. A state is stored both as its sorted list of
 * up-arrow positions and as an N-bit mask (bit i-1 set for position i).
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bethe {

inline constexpr int kMaxRingSize = 62;

class OccupationVector {
public:
    /// Validates 1 <= positions[0] < ... < positions[n-1] <= ring_size.
    OccupationVector(int ring_size, std::vector<int> positions);

    [[nodiscard]] static OccupationVector from_mask(int ring_size, std::uint64_t mask);

    [[nodiscard]] int ring_size() const noexcept { return ring_size_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(positions_.size()); }
    [[nodiscard]] std::span<const int> positions() const noexcept { return positions_; }
    [[nodiscard]] int operator[](int k) const noexcept { return positions_[static_cast<std::size_t>(k)]; }
    [[nodiscard]] std::uint64_t mask() const noexcept { return mask_; }

    /// Spin pattern: +1 on an up-arrow position, -1 elsewhere. Site index is periodic.
    [[nodiscard]] int spin(int site) const noexcept;

    friend bool operator==(const OccupationVector& a, const OccupationVector& b) noexcept {
        return a.ring_size_ == b.ring_size_ && a.mask_ == b.mask_;
    }

private:
    int ring_size_;
    std::vector<int> positions_;
    std::uint64_t mask_ = 0;
};

/// All occupation vectors with n up arrows on a ring of N sites, in colexicographic order.
class SectorIndex {
public:
    SectorIndex(int ring_size, int particles);

    [[nodiscard]] int ring_size() const noexcept { return ring_size_; }
    [[nodiscard]] int particles() const noexcept { return particles_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return states_.size(); }

    [[nodiscard]] const OccupationVector& state_of(std::size_t k) const { return states_.at(k); }
    [[nodiscard]] const std::vector<OccupationVector>& states() const noexcept { return states_; }

    /// Colex rank, computed from the combinatorial number system (no lookup table).
    [[nodiscard]] std::size_t index_of(const OccupationVector& x) const;
    [[nodiscard]] std::size_t index_of_mask(std::uint64_t mask) const;

    friend bool operator==(const SectorIndex& a, const SectorIndex& b) noexcept {
        return a.ring_size_ == b.ring_size_ && a.particles_ == b.particles_;
    }

private:
    int ring_size_;
    int particles_;
    std::vector<OccupationVector> states_;
};

[[nodiscard]] SectorIndex enumerate_sector(int ring_size, int particles);

/// x1 <= y1 <= x2 <= ... <= xn <= yn, or the same chain with x and y exchanged.
[[nodiscard]] bool interlaced(const OccupationVector& x, const OccupationVector& y);

/// Number of sites where the two spin patterns differ.
[[nodiscard]] int mismatch_count(const OccupationVector& x, const OccupationVector& y);

/// Complement of the up-arrow set (global arrow reversal).
[[nodiscard]] OccupationVector arrow_flip(const OccupationVector& x);

}  // namespace bethe
