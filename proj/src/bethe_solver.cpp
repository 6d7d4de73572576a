// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/bethe_solver.hpp"

#include <fmt/format.h>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace bethe {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s) {
    s = trim(s);
    // accept a leading '+' and the unicode minus sign
    std::string normalized;
    if (s.starts_with("−")) {
        normalized = "-" + std::string(s.substr(3));
    } else if (s.starts_with("+")) {
        normalized = std::string(s.substr(1));
    } else {
        normalized = std::string(s);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(normalized.data(), normalized.data() + normalized.size(), value);
    if (normalized.empty() || ec != std::errc{} || ptr != normalized.data() + normalized.size()) {
        throw std::invalid_argument("quantum numbers: cannot parse '" + std::string(s) + "'");
    }
    return value;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// dF_j/dp_j = N + sum_{k != j} d1 Theta(p_j, p_k); dF_j/dp_k = d2 Theta(p_j, p_k).
// The k = j term drops out because Theta(p, p) = 0 identically.
Eigen::MatrixXd jacobian(const std::vector<double>& p, int ring_size, const Anisotropy& a) {
    const auto n = static_cast<Eigen::Index>(p.size());
    Eigen::MatrixXd jac(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double diag = ring_size;
        for (Eigen::Index k = 0; k < n; ++k) {
            if (k == j) continue;
            const double pj = p[static_cast<std::size_t>(j)];
            const double pk = p[static_cast<std::size_t>(k)];
            diag += theta_partial_1(pj, pk, a);
            jac(j, k) = theta_partial_2(pj, pk, a);
        }
        jac(j, j) = diag;
    }
    return jac;
}

double condition_number(const Eigen::MatrixXd& jac) {
    const auto sv = Eigen::JacobiSVD<Eigen::MatrixXd>(jac).singularValues();
    const auto last = sv.size() - 1;
    return sv(last) > 0.0 ? sv(0) / sv(last) : std::numeric_limits<double>::infinity();
}

}  // namespace

QuantumNumbers::QuantumNumbers(std::vector<int> twice_values) : twice_(std::move(twice_values)) {
    const bool odd = twice_.size() % 2 == 1;
    std::set<int> seen;
    for (int t : twice_) {
        bool integer = t % 2 == 0;
        if (integer != odd) {
            throw std::invalid_argument(odd ? "quantum numbers must be integers when n is odd"
                                            : "quantum numbers must be half-integers when n is even");
        }
        if (!seen.insert(t).second) throw std::invalid_argument("quantum numbers must be distinct");
    }
}

QuantumNumbers QuantumNumbers::parse(std::string_view text) {
    std::vector<int> twice;
    text = trim(text);
    if (text.empty()) return QuantumNumbers({});
    while (true) {
        auto comma = text.find(',');
        std::string_view token = trim(text.substr(0, comma));
        auto slash = token.find('/');
        if (slash == std::string_view::npos) {
            twice.push_back(2 * parse_int(token));
        } else {
            if (parse_int(token.substr(slash + 1)) != 2) {
                throw std::invalid_argument("quantum numbers: only denominators 1 and 2 are allowed");
            }
            twice.push_back(parse_int(token.substr(0, slash)));
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return QuantumNumbers(std::move(twice));
}

std::string QuantumNumbers::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < twice_.size(); ++j) {
        if (j > 0) out += ",";
        int t = twice_[j];
        out += (t % 2 == 0) ? fmt::format("{}", t / 2) : fmt::format("{}/2", t);
    }
    return out;
}

QuantumNumbers ground_state_quantum_numbers(int n) {
    if (n < 0) throw std::invalid_argument("particle number must be non-negative");
    std::vector<int> twice(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) twice[static_cast<std::size_t>(j - 1)] = 2 * j - (n + 1);
    return QuantumNumbers(std::move(twice));
}

std::vector<double> logarithmic_residual(std::span<const double> momenta, const QuantumNumbers& qn, int ring_size,
                                         const Anisotropy& a) {
    std::vector<double> f(momenta.size());
    for (std::size_t j = 0; j < momenta.size(); ++j) {
        double value = ring_size * momenta[j] - 2.0 * std::numbers::pi * qn.value(j);
        for (double pk : momenta) value += theta(momenta[j], pk, a);
        f[j] = value;
    }
    return f;
}

SolveReport solve(int ring_size, const QuantumNumbers& qn, const Anisotropy& a, const SolverConfig& cfg) {
    const auto n = static_cast<int>(qn.size());
    if (ring_size < 1) throw std::invalid_argument("ring size must be positive");
    if (2 * n > ring_size) {
        throw std::invalid_argument(fmt::format("solve requires n <= N/2 (got n={}, N={})", n, ring_size));
    }
    if (!(cfg.tol > 0.0) || cfg.max_iter < 1) throw std::invalid_argument("solver config: need tol > 0 and max_iter >= 1");

    const double w = a.domain_halfwidth();
    const double lo = -w + cfg.domain_margin;
    const double hi = w - cfg.domain_margin;

    // Free (Theta = 0) solution, squeezed into the domain.
    double max_i = 0.0;
    for (std::size_t j = 0; j < qn.size(); ++j) max_i = std::max(max_i, std::abs(qn.value(j)));
    double scale = 1.0;
    if (max_i > 0.0) scale = std::min(1.0, (w - 1e-3) * ring_size / (2.0 * std::numbers::pi * max_i));
    std::vector<double> p(qn.size());
    for (std::size_t j = 0; j < qn.size(); ++j) p[j] = 2.0 * std::numbers::pi * qn.value(j) / ring_size * scale;

    auto try_residual = [&](const std::vector<double>& q) -> std::pair<std::vector<double>, double> {
        try {
            auto f = logarithmic_residual(q, qn, ring_size, a);
            return {f, max_abs(f)};
        } catch (const DomainError&) {
            return {{}, std::numeric_limits<double>::infinity()};
        }
    };

    auto [f, r] = try_residual(p);
    std::vector<double> history;
    int iter = 1;
    bool converged = false;
    bool singular = false;
    double condition = 1.0;
    Eigen::MatrixXd jac(n, n);

    for (;; ++iter) {
        history.push_back(r);
        if (r <= cfg.tol) {
            converged = true;
            break;
        }
        if (iter >= cfg.max_iter) break;

        jac = jacobian(p, ring_size, a);
        condition = condition_number(jac);
        if (condition > cfg.singular_condition) {
            singular = true;
            break;
        }
        Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(f.data(), n);
        Eigen::VectorXd step = jac.partialPivLu().solve(rhs);

        double t = 1.0;
        std::vector<double> trial(p.size());
        std::pair<std::vector<double>, double> evaluated;
        while (true) {
            for (int j = 0; j < n; ++j) {
                trial[static_cast<std::size_t>(j)] = std::clamp(p[static_cast<std::size_t>(j)] + t * step(j), lo, hi);
            }
            evaluated = try_residual(trial);
            if (evaluated.second < r || t <= cfg.damping_floor) break;
            t *= 0.5;
        }
        if (!std::isfinite(evaluated.second)) break;
        p = trial;
        f = std::move(evaluated.first);
        r = evaluated.second;
    }

    // Polish: a root just under tol can still be ~1e-13 off, which the Bethe vector amplifies by |Lambda|.
    // Full Newton steps are kept only while they strictly lower the residual.
    for (int extra = 0; converged && r > 0.0 && extra < 3; ++extra) {
        jac = jacobian(p, ring_size, a);
        Eigen::VectorXd step = jac.partialPivLu().solve(-Eigen::Map<const Eigen::VectorXd>(f.data(), n));
        std::vector<double> trial(p.size());
        for (int j = 0; j < n; ++j) {
            trial[static_cast<std::size_t>(j)] = std::clamp(p[static_cast<std::size_t>(j)] + step(j), lo, hi);
        }
        auto evaluated = try_residual(trial);
        if (!(evaluated.second < r)) break;
        p = std::move(trial);
        f = std::move(evaluated.first);
        r = evaluated.second;
        history.push_back(r);
        ++iter;
    }

    if (n > 0 && !singular) {
        condition = condition_number(jacobian(p, ring_size, a));
    }

    auto momenta = MomentumSet::relaxed(p, a, cfg.thresholds);
    const bool degenerate = !momenta.distinct();
    SolveReport report{std::move(momenta), iter, r, converged, condition, singular, degenerate, std::move(history)};
    return report;
}

}  // namespace bethe
