// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/bethe_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracles.hpp"

using bethe::Anisotropy;
using bethe::Complex;
using bethe::MomentumSet;

namespace {

constexpr double kPi = std::numbers::pi;
const double kCs[] = {0.5, 1.0, std::sqrt(2.0), 2.0, 3.0};

std::vector<double> interior_grid(const Anisotropy& a, int g, double fraction) {
    std::vector<double> p(static_cast<std::size_t>(g));
    const double w = fraction * a.domain_halfwidth();
    for (int k = 0; k < g; ++k) p[static_cast<std::size_t>(k)] = -w + 2.0 * w * k / (g - 1);
    return p;
}

}  // namespace

TEST(Anisotropy, DeltaAndMu) {
    Anisotropy one(1.0);
    EXPECT_DOUBLE_EQ(one.delta(), 0.5);
    EXPECT_NEAR(one.mu(), 2.0 * kPi / 3.0, 1e-15);
    EXPECT_NEAR(one.domain_halfwidth(), kPi / 3.0, 1e-15);

    Anisotropy free_fermion(std::sqrt(2.0));
    EXPECT_NEAR(free_fermion.delta(), 0.0, 1e-15);
    EXPECT_NEAR(free_fermion.mu(), kPi / 2.0, 1e-15);

    Anisotropy edge(2.0);
    EXPECT_EQ(edge.delta(), -1.0);
    EXPECT_EQ(edge.mu(), 0.0);
    EXPECT_EQ(edge.domain_halfwidth(), kPi);

    Anisotropy beyond(2.5);
    EXPECT_LT(beyond.delta(), -1.0);
    EXPECT_EQ(beyond.mu(), 0.0);

    EXPECT_THROW(Anisotropy(0.0), std::invalid_argument);
    EXPECT_THROW(Anisotropy(-0.3), std::invalid_argument);
    EXPECT_THROW(Anisotropy{std::numeric_limits<double>::infinity()}, std::invalid_argument);
}

TEST(Anisotropy, CosMuIsMinusDeltaInsideTheCriticalRegime) {
    for (double c = 0.05; c < 2.0; c += 0.05) {
        Anisotropy a(c);
        EXPECT_NEAR(std::cos(a.mu()), -a.delta(), 1e-14) << c;
        EXPECT_TRUE(a.contains(0.0));
        EXPECT_FALSE(a.contains(a.domain_halfwidth()));
        EXPECT_FALSE(a.contains(-a.domain_halfwidth()));
    }
}

TEST(MomentumSet, Validation) {
    Anisotropy a(1.0);
    EXPECT_THROW(MomentumSet({2.0}, a), bethe::DomainError);
    EXPECT_THROW(MomentumSet({0.3, 0.3}, a), bethe::DomainError);
    EXPECT_THROW(MomentumSet({0.0, 1e-12}, a), bethe::DomainError);
    EXPECT_NO_THROW(MomentumSet({}, a));

    MomentumSet m({-0.4, 1e-11, 0.4}, a);
    ASSERT_TRUE(m.zero_index().has_value());
    EXPECT_EQ(*m.zero_index(), 1U);
    EXPECT_TRUE(m.distinct());
    EXPECT_NEAR(m.min_separation(), 0.4, 1e-10);

    EXPECT_FALSE(MomentumSet({-0.4, 1e-3}, a).zero_index().has_value());

    auto relaxed = MomentumSet::relaxed({0.2, 0.2}, a);
    EXPECT_FALSE(relaxed.distinct());
    EXPECT_EQ(relaxed.min_separation(), 0.0);
}

TEST(ScatteringKernel, Values) {
    Anisotropy a(1.0);
    // S(0,0) = 2 - 2 Delta = c^2
    EXPECT_NEAR(std::abs(bethe::scattering_kernel(0.0, 0.0, a) - Complex(1.0, 0.0)), 0.0, 1e-15);
    Complex s = bethe::scattering_kernel(0.3, -0.7, a);
    Complex expected = std::exp(Complex(0, -0.3)) + std::exp(Complex(0, -0.7)) - 1.0;
    EXPECT_NEAR(std::abs(s - expected), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(bethe::scattering_kernel(-0.7, 0.3, a) - std::conj(s)), 0.0, 1e-15);
}

TEST(Theta, OriginAndDiagonalVanish) {
    for (double c : kCs) {
        Anisotropy a(c);
        EXPECT_EQ(bethe::theta(0.0, 0.0, a), 0.0);
        for (double p : interior_grid(a, 21, 0.99)) EXPECT_NEAR(bethe::theta(p, p, a), 0.0, 1e-14);
    }
}

TEST(Theta, AgreesWithContinuationOracle) {
    std::mt19937_64 rng(5);
    for (double c : kCs) {
        Anisotropy a(c);
        std::uniform_real_distribution<double> u(-0.97 * a.domain_halfwidth(), 0.97 * a.domain_halfwidth());
        for (int k = 0; k < 40; ++k) {
            double x = u(rng);
            double y = u(rng);
            EXPECT_NEAR(bethe::theta(x, y, a), oracle::theta_by_continuation(x, y, c), 1e-11)
                << "c=" << c << " x=" << x << " y=" << y;
        }
    }
}

TEST(Theta, AntisymmetricAndBounded) {
    std::mt19937_64 rng(6);
    for (double c : kCs) {
        Anisotropy a(c);
        std::uniform_real_distribution<double> u(-a.domain_halfwidth(), a.domain_halfwidth());
        for (int k = 0; k < 500; ++k) {
            double x = u(rng);
            double y = u(rng);
            if (!a.contains(x) || !a.contains(y)) continue;
            double t = bethe::theta(x, y, a);
            EXPECT_NEAR(t + bethe::theta(y, x, a), 0.0, 1e-13);
            // |arg S| < pi/2 since Re S > 0
            EXPECT_LE(std::abs(t + (x - y)), kPi + 1e-12);
        }
    }
}

TEST(Theta, DefiningRelation) {
    for (double c : kCs) {
        Anisotropy a(c);
        for (double x : interior_grid(a, 17, 0.99)) {
            for (double y : interior_grid(a, 17, 0.99)) {
                Complex lhs = std::exp(Complex(0, -bethe::theta(x, y, a)));
                Complex rhs = std::exp(Complex(0, x - y)) * bethe::scattering_kernel(x, y, a) /
                              bethe::scattering_kernel(y, x, a);
                ASSERT_NEAR(std::abs(lhs - rhs), 0.0, 1e-13);
            }
        }
    }
}

TEST(Theta, RejectsPointsOutsideTheHalfPlane) {
    Anisotropy a(1.0);
    // Re S = cos x + cos y - 1 < 0 here
    EXPECT_THROW((void)bethe::theta(2.5, 2.5, a), bethe::DomainError);
    EXPECT_THROW((void)bethe::theta_partial_1(2.5, 2.5, a), bethe::DomainError);
}

TEST(ThetaDerivative, MatchesCentralDifferences) {
    for (double c : kCs) {
        Anisotropy a(c);
        const double h = 1e-5;
        for (double x : interior_grid(a, 23, 0.9)) {
            for (double y : interior_grid(a, 23, 0.9)) {
                double fd = (bethe::theta(x + h, y, a) - bethe::theta(x - h, y, a)) / (2.0 * h);
                ASSERT_NEAR(bethe::theta_partial_1(x, y, a), fd, 1e-6 * std::max(1.0, std::abs(fd)))
                    << "c=" << c << " x=" << x << " y=" << y;
                double fd2 = (bethe::theta(x, y + h, a) - bethe::theta(x, y - h, a)) / (2.0 * h);
                ASSERT_NEAR(bethe::theta_partial_2(x, y, a), fd2, 1e-6 * std::max(1.0, std::abs(fd2)));
            }
        }
    }
}

TEST(ThetaDerivative, DiagonalSumVanishes) {
    // Theta(p, p) = 0 for all p
    for (double c : kCs) {
        Anisotropy a(c);
        for (double p : interior_grid(a, 31, 0.99)) {
            EXPECT_NEAR(bethe::theta_partial_1(p, p, a) + bethe::theta_partial_2(p, p, a), 0.0, 1e-12);
        }
    }
}

TEST(LM, SumIsTwoMinusCSquared) {
    for (double c : kCs) {
        Anisotropy a(c);
        for (double p : interior_grid(a, 40, 0.999)) {
            if (std::abs(p) < 1e-6) continue;
            Complex z = std::exp(Complex(0, p));
            Complex sum = bethe::L_factor(z, a) + bethe::M_factor(z, a);
            EXPECT_NEAR(std::abs(sum - (2.0 - c * c)), 0.0, 1e-12);
        }
    }
}

TEST(LM, ClosedForms) {
    Anisotropy a(1.5);
    Complex z(0.3, -0.2);
    EXPECT_NEAR(std::abs(bethe::L_factor(z, a) - (1.0 + 2.25 * z / (1.0 - z))), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(bethe::M_factor(z, a) - (1.0 - 2.25 / (1.0 - z))), 0.0, 1e-14);
    EXPECT_THROW((void)bethe::L_factor(1.0, a), bethe::SingularInput);
    EXPECT_THROW((void)bethe::M_factor(Complex(1.0, 1e-12), a), bethe::SingularInput);
    EXPECT_NO_THROW((void)bethe::M_factor(Complex(1.0, 1e-3), a));
}

TEST(LM, ZeroMomentumIdentity) {
    // e^{i Theta(0, p)} = -L(z)/M(z)
    for (double c : kCs) {
        Anisotropy a(c);
        for (double p : interior_grid(a, 30, 0.99)) {
            if (std::abs(p) < 1e-6) continue;
            Complex z = std::exp(Complex(0, p));
            Complex lhs = std::exp(Complex(0, bethe::theta(0.0, p, a)));
            EXPECT_NEAR(std::abs(lhs + bethe::L_factor(z, a) / bethe::M_factor(z, a)), 0.0, 1e-12);
        }
    }
}

TEST(LM, PairRatioIdentity) {
    // e^{i Theta(p,q)} = (M(z_p) L(z_q) - 1)/(M(z_q) L(z_p) - 1)
    for (double c : kCs) {
        Anisotropy a(c);
        auto grid = interior_grid(a, 12, 0.98);
        for (double p : grid) {
            for (double q : grid) {
                Complex zp = std::exp(Complex(0, p));
                Complex zq = std::exp(Complex(0, q));
                Complex rhs = (bethe::M_factor(zp, a) * bethe::L_factor(zq, a) - 1.0) /
                              (bethe::M_factor(zq, a) * bethe::L_factor(zp, a) - 1.0);
                EXPECT_NEAR(std::abs(std::exp(Complex(0, bethe::theta(p, q, a))) - rhs), 0.0, 1e-11);
            }
        }
    }
}

class IdentitySuite : public ::testing::TestWithParam<double> {};

TEST_P(IdentitySuite, AllDeviationsWithinTolerance) {
    const auto r = bethe::function_identity_suite(Anisotropy(GetParam()), 50);
    EXPECT_EQ(r.grid, 50);
    EXPECT_LE(r.defining_relation, 1e-11);
    EXPECT_LE(r.antisymmetry, 1e-11);
    EXPECT_LE(r.theta_origin, 1e-11);
    EXPECT_LE(r.ratio_identity, 1e-11);
    EXPECT_LE(r.zero_identity, 1e-11);
    EXPECT_LE(r.lm_sum, 1e-11);
    EXPECT_LE(r.derivative_fd, 1e-6);
    EXPECT_GT(r.min_real_s, 0.0);
}

INSTANTIATE_TEST_SUITE_P(Couplings, IdentitySuite, ::testing::Values(0.5, 1.0, std::sqrt(2.0), 1.4142135, 2.0, 2.5, 3.0));

TEST(IdentitySuite, RejectsTinyGrid) {
    EXPECT_THROW((void)bethe::function_identity_suite(Anisotropy(1.0), 1), std::invalid_argument);
}
