// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/bethe_solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bethe/bethe_ansatz.hpp"

using bethe::Anisotropy;
using bethe::QuantumNumbers;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(QuantumNumbers, GroundState) {
    EXPECT_EQ(bethe::ground_state_quantum_numbers(0).size(), 0U);
    EXPECT_EQ(bethe::ground_state_quantum_numbers(1).twice_values(), (std::vector<int>{0}));
    EXPECT_EQ(bethe::ground_state_quantum_numbers(2).twice_values(), (std::vector<int>{-1, 1}));
    EXPECT_EQ(bethe::ground_state_quantum_numbers(3).twice_values(), (std::vector<int>{-2, 0, 2}));
    EXPECT_EQ(bethe::ground_state_quantum_numbers(4).to_string(), "-3/2,-1/2,1/2,3/2");
    EXPECT_THROW((void)bethe::ground_state_quantum_numbers(-1), std::invalid_argument);
}

TEST(QuantumNumbers, Parse) {
    EXPECT_EQ(QuantumNumbers::parse("-1/2,1/2").twice_values(), (std::vector<int>{-1, 1}));
    EXPECT_EQ(QuantumNumbers::parse("\xE2\x88\x92" "1/2, +1/2").twice_values(), (std::vector<int>{-1, 1}));
    EXPECT_EQ(QuantumNumbers::parse(" -1, 0 ,2 ").twice_values(), (std::vector<int>{-2, 0, 4}));
    EXPECT_EQ(QuantumNumbers::parse("").size(), 0U);
    EXPECT_DOUBLE_EQ(QuantumNumbers::parse("3/2,-5/2").value(1), -2.5);
}

TEST(QuantumNumbers, ParseRoundTrip) {
    for (const char* text : {"-3/2,-1/2,1/2,3/2", "-2,0,1", "5"}) {
        EXPECT_EQ(QuantumNumbers::parse(text).to_string(), text);
    }
}

TEST(QuantumNumbers, RejectsBadInput) {
    EXPECT_THROW((void)QuantumNumbers::parse("1/2,1/2"), std::invalid_argument);
    EXPECT_THROW((void)QuantumNumbers::parse("0,1"), std::invalid_argument);        // even n needs half-integers
    EXPECT_THROW((void)QuantumNumbers::parse("1/2"), std::invalid_argument);        // odd n needs integers
    EXPECT_THROW((void)QuantumNumbers::parse("1/3,2/3"), std::invalid_argument);
    EXPECT_THROW((void)QuantumNumbers::parse("a,b"), std::invalid_argument);
    EXPECT_THROW((void)QuantumNumbers::parse("1,,2"), std::invalid_argument);
}

TEST(Solve, SingleParticleGroundStateIsZero) {
    auto r = bethe::solve(6, bethe::ground_state_quantum_numbers(1), Anisotropy(1.0));
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.iterations, 1);
    EXPECT_EQ(r.momenta[0], 0.0);
    EXPECT_TRUE(r.momenta.zero_index().has_value());
}

TEST(Solve, SingleParticleFourierMode) {
    for (int N : {5, 8, 11}) {
        auto r = bethe::solve(N, QuantumNumbers({2}), Anisotropy(3.0));
        EXPECT_TRUE(r.converged);
        EXPECT_NEAR(r.momenta[0], 2.0 * kPi / N, 1e-15);
    }
}

TEST(Solve, EightSitesTwoArrows) {
    auto r = bethe::solve(8, bethe::ground_state_quantum_numbers(2), Anisotropy(1.0));
    ASSERT_TRUE(r.converged);
    EXPECT_LE(r.final_residual, 1e-12);
    EXPECT_LE(r.iterations, 10);
    EXPECT_FALSE(r.jacobian_singular);
    EXPECT_FALSE(r.degenerate);
    EXPECT_NEAR(r.momenta[0], -r.momenta[1], 1e-14);
    EXPECT_LT(r.momenta[0], 0.0);
    for (auto z : bethe::bethe_residual(r.momenta, 8)) EXPECT_LE(std::abs(z), 1e-10);
    // residual history ends at the reported residual
    ASSERT_FALSE(r.residual_history.empty());
    EXPECT_EQ(r.residual_history.back(), r.final_residual);
    EXPECT_EQ(static_cast<int>(r.residual_history.size()), r.iterations);
}

TEST(Solve, SymmetricQuantumNumbersGiveSymmetricRoots) {
    for (double c : {0.5, 1.0, std::sqrt(2.0), 2.0}) {
        for (int N : {6, 9, 12}) {
            for (int n = 1; 2 * n <= N; ++n) {
                auto r = bethe::solve(N, bethe::ground_state_quantum_numbers(n), Anisotropy(c));
                ASSERT_TRUE(r.converged) << "c=" << c << " N=" << N << " n=" << n;
                for (int j = 0; j < n; ++j) {
                    EXPECT_NEAR(r.momenta[static_cast<std::size_t>(j)],
                                -r.momenta[static_cast<std::size_t>(n - 1 - j)], 1e-12);
                }
                for (std::size_t j = 1; j < r.momenta.size(); ++j) EXPECT_LT(r.momenta[j - 1], r.momenta[j]);
            }
        }
    }
}

TEST(Solve, QuadraticConvergenceTail) {
    for (double c : {0.5, 1.0, 2.0}) {
        auto r = bethe::solve(12, bethe::ground_state_quantum_numbers(5), Anisotropy(c));
        ASSERT_TRUE(r.converged);
        const auto& h = r.residual_history;
        for (std::size_t k = 0; k + 1 < h.size(); ++k) {
            if (h[k] < 1e-3 && h[k + 1] > 1e-13) {
                EXPECT_LE(h[k + 1], 1e3 * h[k] * h[k]) << "c=" << c << " step " << k;
            }
        }
    }
}

TEST(Solve, ExcitedQuantumNumbers) {
    Anisotropy a(1.0);
    auto r = bethe::solve(10, QuantumNumbers::parse("-1/2,3/2"), a);
    ASSERT_TRUE(r.converged);
    auto f = bethe::logarithmic_residual(r.momenta.momenta(), QuantumNumbers::parse("-1/2,3/2"), 10, a);
    for (double x : f) EXPECT_LE(std::abs(x), 1e-12);
}

TEST(Solve, IterationCapIsReportedNotThrown) {
    bethe::SolverConfig cfg;
    cfg.max_iter = 1;
    auto r = bethe::solve(10, bethe::ground_state_quantum_numbers(4), Anisotropy(1.0), cfg);
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.iterations, 1);
    EXPECT_GT(r.final_residual, 1e-12);
}

TEST(Solve, Preconditions) {
    Anisotropy a(1.0);
    EXPECT_THROW((void)bethe::solve(4, bethe::ground_state_quantum_numbers(3), a), std::invalid_argument);
    EXPECT_THROW((void)bethe::solve(0, bethe::ground_state_quantum_numbers(0), a), std::invalid_argument);
    bethe::SolverConfig cfg;
    cfg.tol = 0.0;
    EXPECT_THROW((void)bethe::solve(6, bethe::ground_state_quantum_numbers(2), a, cfg), std::invalid_argument);
}

TEST(LogarithmicResidual, SingleParticleHasNoPhase) {
    Anisotropy a(std::sqrt(2.0));
    std::vector<double> p{0.25};
    auto f = bethe::logarithmic_residual(p, QuantumNumbers({2}), 7, a);
    EXPECT_NEAR(f[0], 7 * 0.25 - 2.0 * kPi, 1e-14);
}
