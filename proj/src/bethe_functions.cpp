// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/bethe_functions.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bethe {

namespace {

constexpr double kKernelFloor = 1e-12;
constexpr double kDerivativeImagTolerance = 1e-10;

// Re S > 0 certifies that the principal argument is the continuous branch.
Complex certified_kernel(double x, double y, const Anisotropy& a) {
    Complex s = scattering_kernel(x, y, a);
    if (!(s.real() > 0.0) || std::abs(s) < kKernelFloor) {
        throw DomainError(fmt::format("scattering kernel S({}, {}) = {}{:+}i leaves the right half-plane; "
                                      "momenta must lie in (-{}, {})",
                                      x, y, s.real(), s.imag(), a.domain_halfwidth(), a.domain_halfwidth()));
    }
    return s;
}

}  // namespace

Anisotropy::Anisotropy(double c) : c_(c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("anisotropy: c must be positive and finite");
    delta_ = (2.0 - c * c) / 2.0;
    mu_ = delta_ <= -1.0 ? 0.0 : std::acos(-delta_);
    halfwidth_ = std::numbers::pi - mu_;
}

MomentumSet::MomentumSet(std::vector<double> momenta, const Anisotropy& anisotropy, const Thresholds& thresholds)
    : MomentumSet(std::move(momenta), anisotropy, thresholds, true) {}

MomentumSet MomentumSet::relaxed(std::vector<double> momenta, const Anisotropy& anisotropy,
                                 const Thresholds& thresholds) {
    return MomentumSet(std::move(momenta), anisotropy, thresholds, false);
}

MomentumSet::MomentumSet(std::vector<double> momenta, const Anisotropy& anisotropy, const Thresholds& thresholds,
                         bool require_distinct)
    : momenta_(std::move(momenta)),
      anisotropy_(anisotropy),
      thresholds_(thresholds),
      min_separation_(std::numeric_limits<double>::infinity()) {
    for (std::size_t j = 0; j < momenta_.size(); ++j) {
        double p = momenta_[j];
        if (!anisotropy_.contains(p)) {
            throw DomainError(fmt::format("momentum p_{} = {} outside D = (-{}, {})", j + 1, p,
                                          anisotropy_.domain_halfwidth(), anisotropy_.domain_halfwidth()));
        }
        for (std::size_t k = 0; k < j; ++k) min_separation_ = std::min(min_separation_, std::abs(p - momenta_[k]));
        if (std::abs(p) < thresholds_.zero) {
            if (zero_index_ && require_distinct) throw DomainError("more than one momentum is numerically zero");
            if (!zero_index_) zero_index_ = j;
        }
    }
    distinct_ = !(min_separation_ <= thresholds_.distinct);
    if (require_distinct && !distinct_) {
        throw DomainError(fmt::format("momenta are not distinct: minimal separation {} <= {}", min_separation_,
                                      thresholds_.distinct));
    }
}

Complex scattering_kernel(double x, double y, const Anisotropy& a) {
    return std::polar(1.0, -x) + std::polar(1.0, y) - 2.0 * a.delta();
}

double theta(double x, double y, const Anisotropy& a) {
    Complex s = certified_kernel(x, y, a);
    return -(x - y) - 2.0 * std::arg(s);
}

double theta_partial_1(double x, double y, const Anisotropy& a) {
    Complex s_xy = certified_kernel(x, y, a);
    Complex s_yx = scattering_kernel(y, x, a);
    // -i d1 Theta = i - i e^{-ix}/S(x,y) - i e^{ix}/S(y,x)
    Complex d = -1.0 + std::polar(1.0, -x) / s_xy + std::polar(1.0, x) / s_yx;
    if (std::abs(d.imag()) > kDerivativeImagTolerance * std::max(1.0, std::abs(d.real()))) {
        throw DomainError(fmt::format("theta_partial_1({}, {}): imaginary residue {}", x, y, d.imag()));
    }
    return d.real();
}

double theta_partial_2(double x, double y, const Anisotropy& a) { return -theta_partial_1(y, x, a); }

Complex L_factor(Complex z, const Anisotropy& a, double zero_threshold) {
    if (std::abs(1.0 - z) < zero_threshold) throw SingularInput("L(z) evaluated at z = 1");
    return 1.0 + a.c_squared() * z / (1.0 - z);
}

Complex M_factor(Complex z, const Anisotropy& a, double zero_threshold) {
    if (std::abs(1.0 - z) < zero_threshold) throw SingularInput("M(z) evaluated at z = 1");
    return 1.0 - a.c_squared() / (1.0 - z);
}

FunctionIdentityReport function_identity_suite(const Anisotropy& a, int grid) {
    if (grid < 2) throw std::invalid_argument("identity grid needs at least two points per axis");
    const double w = a.domain_halfwidth();
    const double zero = Thresholds{}.zero;
    const Complex i{0.0, 1.0};

    std::vector<double> points(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k) points[static_cast<std::size_t>(k)] = -w + (k + 0.5) * 2.0 * w / grid;

    FunctionIdentityReport r;
    r.c = a.c();
    r.grid = grid;
    r.min_real_s = std::numeric_limits<double>::infinity();
    r.theta_origin = std::abs(theta(0.0, 0.0, a));

    for (double x : points) {
        const Complex zx = std::polar(1.0, x);
        r.theta_origin = std::max(r.theta_origin, std::abs(theta(x, x, a)));
        if (std::abs(x) >= zero) {
            r.lm_sum = std::max(r.lm_sum, std::abs(L_factor(zx, a) + M_factor(zx, a) - (2.0 - a.c_squared())));
            Complex lhs = std::exp(i * theta(0.0, x, a));
            r.zero_identity = std::max(r.zero_identity, std::abs(lhs + L_factor(zx, a) / M_factor(zx, a)));
        }
        for (double y : points) {
            const Complex zy = std::polar(1.0, y);
            Complex s_xy = scattering_kernel(x, y, a);
            r.min_real_s = std::min(r.min_real_s, s_xy.real());
            double t = theta(x, y, a);
            Complex expected = std::polar(1.0, x - y) * s_xy / scattering_kernel(y, x, a);
            r.defining_relation = std::max(r.defining_relation, std::abs(std::exp(-i * t) - expected));
            r.antisymmetry = std::max(r.antisymmetry, std::abs(t + theta(y, x, a)));
            if (std::abs(x) >= zero && std::abs(y) >= zero) {
                Complex ratio = (M_factor(zx, a) * L_factor(zy, a) - 1.0) / (M_factor(zy, a) * L_factor(zx, a) - 1.0);
                r.ratio_identity = std::max(r.ratio_identity, std::abs(std::exp(i * t) - ratio));
            }
        }
    }

    constexpr double h = 1e-6;
    for (int k = 0; k < grid; ++k) {
        double x = -0.95 * w + k * 1.9 * w / (grid - 1);
        for (int l = 0; l < grid; ++l) {
            double y = -0.95 * w + l * 1.9 * w / (grid - 1);
            double fd = (theta(x + h, y, a) - theta(x - h, y, a)) / (2.0 * h);
            r.derivative_fd = std::max(r.derivative_fd, std::abs(fd - theta_partial_1(x, y, a)));
        }
    }
    return r;
}

}  // namespace bethe
