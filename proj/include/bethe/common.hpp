// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bethe {

using Complex = std::complex<double>;

/// Raised when a size cap (dense storage, enumeration, factorial) would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an argument lies outside the mathematical domain of a function
/// (for instance a momentum for which the scattering kernel leaves the right half-plane).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by L and M at z = 1; callers are expected to route to the singular eigenvalue path instead.
class SingularInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Size caps shared by the dense builders, the brute-force enumerator and the
 * permutation sums. Every cap can be overridden from the environment:
 *
 *   BETHE_MAX_DENSE_DIM       largest block dimension stored densely
 *   BETHE_MAX_SPECTRUM_DIM    largest block handed to the full eigensolver
 *   BETHE_MAX_ENUM_LOG2       log2 of the raw 4^{NM} state count allowed for brute force
 *   BETHE_MAX_PERMUTATION_N   largest n for n!-term permutation sums
 */
struct Limits {
    std::size_t max_dense_dim = 20000;
    std::size_t max_spectrum_dim = 4096;
    int max_enumeration_log2 = 28;
    int max_permutation_n = 9;

    [[nodiscard]] static Limits from_environment();
};

/// Numerical thresholds for singular-root detection and momentum distinctness.
struct Thresholds {
    double zero = 1e-9;
    double distinct = 1e-7;
};

[[nodiscard]] std::uint64_t binomial(int n, int k);

}  // namespace bethe
