// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "bethe/transfer_matrix.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace bethe {

namespace {

// Vertex classes of the six-vertex model. Arrows are +1 (right/up) or -1 (left/down).
enum class VertexClass { forbidden, a, b, c };

// Ice rule: the arrows entering through the left and bottom edges balance those leaving
// through the right and top edges.
VertexClass classify_vertex(int left, int bottom, int right, int top) {
    if (left + bottom != right + top) return VertexClass::forbidden;
    if (left != right) return VertexClass::c;
    return left == bottom ? VertexClass::a : VertexClass::b;
}

struct VertexCounts {
    int a = 0;
    int b = 0;
    int c = 0;
};

double configuration_weight(const VertexCounts& counts, const VertexWeights& weights) {
    return std::pow(VertexWeights::a(), counts.a) * std::pow(VertexWeights::b(), counts.b) *
           weight_power(weights.c(), counts.c);
}

}  // namespace

VertexWeights::VertexWeights(double c) : c_(c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("vertex weight c must be positive and finite");
    }
}

double weight_power(double c, int k) {
    if (k < 0) throw std::invalid_argument("weight_power: negative exponent");
    double result = (k % 2 == 1) ? c : 1.0;
    double base = c * c;
    for (int e = k / 2; e > 0; e >>= 1) {
        if ((e & 1) != 0) result *= base;
        base *= base;
    }
    return result;
}

std::string_view to_string(MatrixKind kind) noexcept {
    return kind == MatrixKind::transfer ? "transfer" : "hamiltonian";
}

namespace detail {
void check_dense_cap(std::uint64_t dim, const Limits& limits) {
    if (dim > limits.max_dense_dim) {
        throw CapExceeded(fmt::format("block dimension {} exceeds the dense storage cap {}", dim,
                                      limits.max_dense_dim));
    }
}
}  // namespace detail

SectorMatrix build_transfer_block(int ring_size, int particles, const VertexWeights& weights,
                                  const Limits& limits) {
    if (ring_size >= 1 && particles >= 0 && particles <= ring_size) {
        detail::check_dense_cap(binomial(ring_size, particles), limits);
    }
    SectorIndex basis(ring_size, particles);
    const auto dim = static_cast<Eigen::Index>(basis.dimension());

    // P is always even within a sector, so only (c^2)^k is needed.
    std::vector<double> powers(static_cast<std::size_t>(ring_size) + 1);
    for (int p = 0; p <= ring_size; ++p) powers[static_cast<std::size_t>(p)] = weight_power(weights.c(), p);

    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(dim, dim);
    const auto& states = basis.states();
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i, i) = 2.0;
        const auto& x = states[static_cast<std::size_t>(i)];
        for (Eigen::Index j = i + 1; j < dim; ++j) {
            const auto& y = states[static_cast<std::size_t>(j)];
            if (!interlaced(x, y)) continue;
            double entry = powers[static_cast<std::size_t>(mismatch_count(x, y))];
            v(i, j) = entry;
            v(j, i) = entry;
        }
    }
    return SectorMatrix{std::move(basis), MatrixKind::transfer, std::move(v)};
}

SectorMatrix build_transfer_block_by_configuration(int ring_size, int particles, const VertexWeights& weights,
                                                   const Limits& limits) {
    if (ring_size >= 1 && particles >= 0 && particles <= ring_size) {
        detail::check_dense_cap(binomial(ring_size, particles), limits);
    }
    if (ring_size > 24) throw CapExceeded("row completion enumeration limited to N <= 24");
    SectorIndex basis(ring_size, particles);
    const auto dim = static_cast<Eigen::Index>(basis.dimension());
    const auto& states = basis.states();
    const std::uint64_t completions = std::uint64_t{1} << ring_size;

    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<int> horizontal(static_cast<std::size_t>(ring_size));
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto& bottom = states[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < dim; ++j) {
            const auto& top = states[static_cast<std::size_t>(j)];
            double total = 0.0;
            // horizontal[s] is the arrow on the edge from site s+1 to site s+2 (periodically).
            for (std::uint64_t bits = 0; bits < completions; ++bits) {
                for (int s = 0; s < ring_size; ++s) horizontal[static_cast<std::size_t>(s)] = ((bits >> s) & 1U) ? 1 : -1;
                VertexCounts counts;
                bool admissible = true;
                for (int s = 0; s < ring_size && admissible; ++s) {
                    int left = horizontal[static_cast<std::size_t>((s + ring_size - 1) % ring_size)];
                    int right = horizontal[static_cast<std::size_t>(s)];
                    switch (classify_vertex(left, bottom.spin(s + 1), right, top.spin(s + 1))) {
                        case VertexClass::forbidden: admissible = false; break;
                        case VertexClass::a: ++counts.a; break;
                        case VertexClass::b: ++counts.b; break;
                        case VertexClass::c: ++counts.c; break;
                    }
                }
                if (admissible) total += configuration_weight(counts, weights);
            }
            v(i, j) = total;
        }
    }
    return SectorMatrix{std::move(basis), MatrixKind::transfer, std::move(v)};
}

namespace {

// Depth-first enumeration over the torus. Step s = row * N + col assigns the
// horizontal edge leaving (col, row) to the right and the vertical edge leaving it upward.
class TorusEnumerator {
public:
    TorusEnumerator(int cols, int rows) : cols_(cols), rows_(rows), steps_(cols * rows) {
        horizontal_.assign(static_cast<std::size_t>(steps_), 0);
        vertical_.assign(static_cast<std::size_t>(steps_), 0);
        checks_.resize(static_cast<std::size_t>(steps_));
        c_histogram_.assign(static_cast<std::size_t>(steps_) + 1, 0);
        for (int row = 0; row < rows; ++row) {
            for (int col = 0; col < cols; ++col) {
                int last = std::max({step(col, row), step(wrap_col(col - 1), row), step(col, wrap_row(row - 1))});
                checks_[static_cast<std::size_t>(last)].push_back(step(col, row));
            }
        }
    }

    std::vector<std::uint64_t> run() {
        recurse(0, 0);
        return c_histogram_;
    }

private:
    int step(int col, int row) const { return row * cols_ + col; }
    int wrap_col(int col) const { return (col + cols_) % cols_; }
    int wrap_row(int row) const { return (row + rows_) % rows_; }

    void recurse(int s, int c_vertices) {
        if (s == steps_) {
            ++c_histogram_[static_cast<std::size_t>(c_vertices)];
            return;
        }
        for (int choice = 0; choice < 4; ++choice) {
            horizontal_[static_cast<std::size_t>(s)] = (choice & 1) ? 1 : -1;
            vertical_[static_cast<std::size_t>(s)] = (choice & 2) ? 1 : -1;
            int added = 0;
            bool admissible = true;
            for (int vertex : checks_[static_cast<std::size_t>(s)]) {
                int col = vertex % cols_;
                int row = vertex / cols_;
                auto cls = classify_vertex(horizontal_[static_cast<std::size_t>(step(wrap_col(col - 1), row))],
                                           vertical_[static_cast<std::size_t>(step(col, wrap_row(row - 1)))],
                                           horizontal_[static_cast<std::size_t>(vertex)],
                                           vertical_[static_cast<std::size_t>(vertex)]);
                if (cls == VertexClass::forbidden) {
                    admissible = false;
                    break;
                }
                if (cls == VertexClass::c) ++added;
            }
            if (admissible) recurse(s + 1, c_vertices + added);
        }
    }

    int cols_;
    int rows_;
    int steps_;
    std::vector<int> horizontal_;
    std::vector<int> vertical_;
    std::vector<std::vector<int>> checks_;
    std::vector<std::uint64_t> c_histogram_;
};

}  // namespace

double partition_function_bruteforce(int ring_size, int rows, const VertexWeights& weights, const Limits& limits) {
    if (ring_size < 2 || rows < 2) {
        throw std::invalid_argument("brute-force partition function requires N >= 2 and M >= 2");
    }
    if (2 * ring_size * rows > limits.max_enumeration_log2) {
        throw CapExceeded(fmt::format("4^(N*M) = 2^{} raw configurations exceeds the enumeration cap 2^{}",
                                      2 * ring_size * rows, limits.max_enumeration_log2));
    }
    auto histogram = TorusEnumerator(ring_size, rows).run();
    // a = b = 1, so the weight only depends on the number of c-vertices.
    double z = 0.0;
    for (std::size_t k = 0; k < histogram.size(); ++k) {
        if (histogram[k] != 0) z += static_cast<double>(histogram[k]) * weight_power(weights.c(), static_cast<int>(k));
    }
    return z;
}

double block_trace_power(const Eigen::MatrixXd& block, int rows) {
    if (rows < 1) throw std::invalid_argument("trace power requires M >= 1");
    Eigen::MatrixXd power = block;
    for (int m = 1; m < rows; ++m) power = power * block;
    return power.trace();
}

double trace_power(int ring_size, int rows, const VertexWeights& weights, const Limits& limits) {
    if (ring_size < 1 || rows < 1) throw std::invalid_argument("trace power requires N >= 1 and M >= 1");
    double total = 0.0;
    for (int n = 0; n <= ring_size; ++n) {
        total += block_trace_power(build_transfer_block(ring_size, n, weights, limits).entries, rows);
    }
    return total;
}

void write_matrix(std::ostream& out, const SectorMatrix& m) {
    const auto dim = m.entries.rows();
    out << fmt::format("{} {} {} {}\n", m.ring_size(), m.particles(), dim, to_string(m.kind));
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (j > 0) out << ' ';
            out << fmt::format("{:.17g}", m.entries(i, j));
        }
        out << '\n';
    }
}

SectorMatrix read_matrix(std::istream& in) {
    int ring_size = 0;
    int particles = 0;
    std::size_t dim = 0;
    std::string kind_name;
    if (!(in >> ring_size >> particles >> dim >> kind_name)) {
        throw std::runtime_error("matrix file: malformed header");
    }
    MatrixKind kind;
    if (kind_name == "transfer") {
        kind = MatrixKind::transfer;
    } else if (kind_name == "hamiltonian") {
        kind = MatrixKind::hamiltonian;
    } else {
        throw std::runtime_error("matrix file: unknown kind '" + kind_name + "'");
    }
    SectorIndex basis(ring_size, particles);
    if (basis.dimension() != dim) throw std::runtime_error("matrix file: dimension does not match C(N, n)");
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd entries(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            if (!(in >> entries(i, j))) throw std::runtime_error("matrix file: truncated body");
        }
    }
    return SectorMatrix{std::move(basis), kind, std::move(entries)};
}

}  // namespace bethe
