// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/common.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace bethe {

namespace {

template <typename T>
void override_from_env(const char* name, T& value) {
    const char* raw = std::getenv(name);
    if (raw == nullptr) return;
    std::string_view text(raw);
    T parsed{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument(std::string("malformed value for ") + name + ": '" + raw + "'");
    }
    value = parsed;
}

}  // namespace

Limits Limits::from_environment() {
    Limits limits;
    override_from_env("BETHE_MAX_DENSE_DIM", limits.max_dense_dim);
    override_from_env("BETHE_MAX_SPECTRUM_DIM", limits.max_spectrum_dim);
    override_from_env("BETHE_MAX_ENUM_LOG2", limits.max_enumeration_log2);
    override_from_env("BETHE_MAX_PERMUTATION_N", limits.max_permutation_n);
    return limits;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: result * (n - k + i) is divisible by i
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

}  // namespace bethe
