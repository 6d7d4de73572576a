// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

namespace bethe {

/**
 * Steinhaus-Johnson-Trotter walk (with Even's speedup) through all n!
 * permutations of {0, ..., n-1}. Consecutive permutations differ by one
 * adjacent transposition, so the signature alternates.
 */
class AdjacentTranspositionWalk {
public:
    explicit AdjacentTranspositionWalk(int n);

    [[nodiscard]] std::span<const int> current() const noexcept { return perm_; }
    [[nodiscard]] int sign() const noexcept { return sign_; }

    /// Advances to the next permutation. Returns the left position j of the
    /// swapped pair (j, j+1), or -1 once every permutation has been visited.
    int next();

private:
    std::vector<int> perm_;
    std::vector<int> direction_;  // -1 looks left, +1 looks right
    int sign_ = 1;
};

/// Signature of a permutation in one-line notation, by cycle counting.
[[nodiscard]] int permutation_sign(std::span<const int> perm);

[[nodiscard]] bool is_permutation_of_range(std::span<const int> perm);

}  // namespace bethe
