// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/spectral_oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "bethe/transfer_matrix.hpp"

using bethe::Complex;
using bethe::VertexWeights;

TEST(DenseSpectrum, OneByOne) {
    auto s = bethe::dense_spectrum(bethe::build_transfer_block(5, 0, VertexWeights(1.0)));
    ASSERT_EQ(s.eigenvalues.size(), 1U);
    EXPECT_EQ(s.eigenvalues[0], 2.0);
}

TEST(DenseSpectrum, SingleArrowClosedForm) {
    // V = (2 - c^2) I + c^2 J on the n = 1 sector
    for (double c : {0.5, 1.0, std::sqrt(2.0), 2.0}) {
        for (int N = 2; N <= 12; ++N) {
            auto s = bethe::dense_spectrum(bethe::build_transfer_block(N, 1, VertexWeights(c)));
            const double scale = 2.0 + c * c * N;
            for (int k = 0; k + 1 < N; ++k) {
                EXPECT_NEAR(s.eigenvalues[static_cast<std::size_t>(k)], 2.0 - c * c, 1e-13 * scale);
            }
            EXPECT_NEAR(s.eigenvalues.back(), 2.0 + c * c * (N - 1), 1e-13 * scale);
        }
    }
}

TEST(DenseSpectrum, DecompositionDefectsAreSmall) {
    for (double c : {0.5, 2.0, 3.0}) {
        auto s = bethe::dense_spectrum(bethe::build_transfer_block(10, 5, VertexWeights(c)));
        EXPECT_LE(s.orthonormality_defect, 1e-12);
        EXPECT_LE(s.reconstruction_defect, 1e-12);
        EXPECT_LE(s.trace_defect, 1e-12);
        EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
    }
}

TEST(DenseSpectrum, FlipSymmetricSectorsAgree) {
    for (double c : {0.5, 1.0, 2.0}) {
        for (int N = 2; N <= 10; ++N) {
            for (int n = 0; 2 * n < N; ++n) {
                auto a = bethe::dense_spectrum(bethe::build_transfer_block(N, n, VertexWeights(c)));
                auto b = bethe::dense_spectrum(bethe::build_transfer_block(N, N - n, VertexWeights(c)));
                ASSERT_EQ(a.eigenvalues.size(), b.eigenvalues.size());
                double scale = std::max(1.0, std::abs(a.eigenvalues.back()));
                for (std::size_t k = 0; k < a.eigenvalues.size(); ++k) {
                    EXPECT_NEAR(a.eigenvalues[k], b.eigenvalues[k], 1e-10 * scale);
                }
            }
        }
    }
}

TEST(DenseSpectrum, PowerTracesMatchMatrixPowers) {
    auto v = bethe::build_transfer_block(8, 3, VertexWeights(1.3));
    auto s = bethe::dense_spectrum(v);
    for (int M = 1; M <= 5; ++M) {
        double from_spectrum = 0.0;
        for (double w : s.eigenvalues) from_spectrum += std::pow(w, M);
        double from_matrix = bethe::block_trace_power(v.entries, M);
        EXPECT_NEAR(from_spectrum, from_matrix, 1e-11 * from_matrix);
    }
}

TEST(DenseSpectrum, RejectsAsymmetricAndOversized) {
    auto v = bethe::build_transfer_block(5, 2, VertexWeights(1.0));
    bethe::Limits limits;
    limits.max_spectrum_dim = 5;
    EXPECT_THROW((void)bethe::dense_spectrum(v, limits), bethe::CapExceeded);
    v.entries(0, 1) += 1e-6;
    EXPECT_THROW((void)bethe::dense_spectrum(v), std::invalid_argument);
}

TEST(CheckEigenpair, Examples) {
    auto v = bethe::build_transfer_block(6, 1, VertexWeights(1.0));
    // all-ones vector: eigenvalue 2 + c^2 (N - 1)
    Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(6);
    EXPECT_LE(bethe::check_eigenpair(v, ones, 7.0), 1e-14);
    EXPECT_NEAR(bethe::check_eigenpair(v, 3.0 * ones, 6.0), 1.0, 1e-14);  // residual is scale-free
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(6);
    e0(0) = 1.0;
    EXPECT_GT(bethe::check_eigenpair(v, e0, 2.0), 0.5);
    EXPECT_THROW((void)bethe::check_eigenpair(v, Eigen::VectorXcd::Zero(6), 1.0), std::invalid_argument);
    EXPECT_THROW((void)bethe::check_eigenpair(v, Eigen::VectorXcd::Ones(5), 1.0), std::invalid_argument);
}

TEST(MatchEigenvalue, ClustersAndMisses) {
    auto s = bethe::dense_spectrum(bethe::build_transfer_block(6, 1, VertexWeights(1.0)));
    auto m = bethe::match_eigenvalue(1.0, s, 1e-10);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->cluster.size(), 5U);
    EXPECT_LE(m->distance, 1e-12);

    auto top = bethe::match_eigenvalue(7.0, s, 1e-10);
    ASSERT_TRUE(top.has_value());
    EXPECT_EQ(top->nearest, 5U);
    EXPECT_EQ(top->cluster, std::vector<std::size_t>{5});

    EXPECT_FALSE(bethe::match_eigenvalue(3.0, s, 1e-8).has_value());
}
