// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/sector_basis.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "bethe/common.hpp"

namespace bethe {

namespace {

constexpr std::size_t kMaxSectorStates = std::size_t{1} << 26;

std::uint64_t full_mask(int ring_size) {
    return ring_size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ring_size) - 1;
}

void check_ring_size(int ring_size) {
    if (ring_size < 1 || ring_size > kMaxRingSize) {
        throw std::invalid_argument("ring size must lie in [1, " + std::to_string(kMaxRingSize) +
                                    "], got " + std::to_string(ring_size));
    }
}

}  // namespace

OccupationVector::OccupationVector(int ring_size, std::vector<int> positions)
    : ring_size_(ring_size), positions_(std::move(positions)) {
    check_ring_size(ring_size_);
    int previous = 0;
    for (int p : positions_) {
        if (p <= previous || p > ring_size_) {
            throw std::invalid_argument("occupation positions must be strictly increasing within [1, N]");
        }
        mask_ |= std::uint64_t{1} << (p - 1);
        previous = p;
    }
}

OccupationVector OccupationVector::from_mask(int ring_size, std::uint64_t mask) {
    check_ring_size(ring_size);
    if ((mask & ~full_mask(ring_size)) != 0) {
        throw std::invalid_argument("mask has bits beyond the ring size");
    }
    std::vector<int> positions;
    positions.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        positions.push_back(std::countr_zero(m) + 1);
    }
    return OccupationVector(ring_size, std::move(positions));
}

int OccupationVector::spin(int site) const noexcept {
    int s = ((site - 1) % ring_size_ + ring_size_) % ring_size_;
    return ((mask_ >> s) & 1U) != 0 ? 1 : -1;
}

SectorIndex::SectorIndex(int ring_size, int particles) : ring_size_(ring_size), particles_(particles) {
    if (ring_size < 1) throw std::invalid_argument("ring size must be positive");
    check_ring_size(ring_size);
    if (particles < 0 || particles > ring_size) {
        throw std::invalid_argument("particle count must lie in [0, N], got n=" + std::to_string(particles) +
                                    " for N=" + std::to_string(ring_size));
    }
    std::uint64_t dim = binomial(ring_size, particles);
    if (dim > kMaxSectorStates) {
        throw CapExceeded("sector dimension " + std::to_string(dim) + " exceeds the enumeration cap");
    }
    states_.reserve(dim);
    if (particles == 0) {
        states_.push_back(OccupationVector(ring_size, {}));
        return;
    }
    // Gosper's hack: masks with fixed popcount in increasing numeric order, which is colex order.
    std::uint64_t mask = (std::uint64_t{1} << particles) - 1;
    const std::uint64_t limit = full_mask(ring_size);
    while (true) {
        states_.push_back(OccupationVector::from_mask(ring_size, mask));
        if (states_.size() == dim) break;
        std::uint64_t low = mask & (~mask + 1);
        std::uint64_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
        if (mask > limit) break;
    }
}

std::size_t SectorIndex::index_of_mask(std::uint64_t mask) const {
    if (std::popcount(mask) != particles_ || (mask & ~full_mask(ring_size_)) != 0) {
        throw std::invalid_argument("state does not belong to this sector");
    }
    std::size_t rank = 0;
    int i = 1;
    for (std::uint64_t m = mask; m != 0; m &= m - 1, ++i) {
        rank += binomial(std::countr_zero(m), i);
    }
    return rank;
}

std::size_t SectorIndex::index_of(const OccupationVector& x) const {
    if (x.ring_size() != ring_size_) throw std::invalid_argument("ring size mismatch");
    return index_of_mask(x.mask());
}

SectorIndex enumerate_sector(int ring_size, int particles) { return SectorIndex(ring_size, particles); }

bool interlaced(const OccupationVector& x, const OccupationVector& y) {
    if (x.ring_size() != y.ring_size()) throw std::invalid_argument("ring size mismatch");
    const int n = x.size();
    if (n != y.size()) return false;
    auto chain = [n](const OccupationVector& lo, const OccupationVector& hi) {
        for (int k = 0; k < n; ++k) {
            if (lo[k] > hi[k]) return false;
            if (k + 1 < n && hi[k] > lo[k + 1]) return false;
        }
        return true;
    };
    return chain(x, y) || chain(y, x);
}

int mismatch_count(const OccupationVector& x, const OccupationVector& y) {
    if (x.ring_size() != y.ring_size()) throw std::invalid_argument("ring size mismatch");
    return std::popcount(x.mask() ^ y.mask());
}

OccupationVector arrow_flip(const OccupationVector& x) {
    return OccupationVector::from_mask(x.ring_size(), ~x.mask() & full_mask(x.ring_size()));
}

}  // namespace bethe
