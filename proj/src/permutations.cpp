// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace bethe {

AdjacentTranspositionWalk::AdjacentTranspositionWalk(int n)
    : perm_(static_cast<std::size_t>(n)), direction_(static_cast<std::size_t>(n), -1) {
    std::iota(perm_.begin(), perm_.end(), 0);
}

int AdjacentTranspositionWalk::next() {
    const int n = static_cast<int>(perm_.size());
    int mobile = -1;
    for (int pos = 0; pos < n; ++pos) {
        int target = pos + direction_[static_cast<std::size_t>(pos)];
        if (target < 0 || target >= n) continue;
        if (perm_[static_cast<std::size_t>(target)] > perm_[static_cast<std::size_t>(pos)]) continue;
        if (mobile < 0 || perm_[static_cast<std::size_t>(pos)] > perm_[static_cast<std::size_t>(mobile)]) mobile = pos;
    }
    if (mobile < 0) return -1;

    const auto from = static_cast<std::size_t>(mobile);
    const auto to = static_cast<std::size_t>(mobile + direction_[from]);
    const int moved = perm_[from];
    std::swap(perm_[from], perm_[to]);
    std::swap(direction_[from], direction_[to]);
    for (std::size_t k = 0; k < perm_.size(); ++k) {
        if (perm_[k] > moved) direction_[k] = -direction_[k];
    }
    sign_ = -sign_;
    return static_cast<int>(std::min(from, to));
}

int permutation_sign(std::span<const int> perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        std::size_t length = 0;
        for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
            seen[k] = true;
            ++length;
        }
        if (length % 2 == 0) sign = -sign;
    }
    return sign;
}

bool is_permutation_of_range(std::span<const int> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

}  // namespace bethe
