// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "bethe/bethe_ansatz.hpp"
#include "bethe/bethe_functions.hpp"
#include "bethe/bethe_solver.hpp"
#include "bethe/spectral_oracle.hpp"
#include "bethe/transfer_matrix.hpp"
#include "bethe/xxz_hamiltonian.hpp"
#include "report.hpp"

namespace bethe::cli {

namespace {

constexpr double kEigenpairTol = 1e-9;
constexpr double kImagTol = 1e-9;
constexpr double kMatchTol = 1e-8;
constexpr double kBetheTol = 1e-10;
constexpr double kCommutatorTol = 1e-10;
constexpr double kPartitionTol = 1e-12;
constexpr double kIdentityTol = 1e-11;
constexpr double kFiniteDifferenceTol = 1e-6;
constexpr double kAdjacentTol = 1e-10;
constexpr double kCyclicTol = 1e-9;
constexpr double kDecompositionTol = 1e-10;

/// Raised for flag combinations CLI11 cannot reject on its own.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Stopwatch {
public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

struct Check {
    std::string name;
    double value;
    double threshold;
    [[nodiscard]] bool passed() const { return value <= threshold; }
};

/// Writes the checks block and returns whether all of them passed.
bool write_checks(ReportWriter& w, const std::vector<Check>& checks) {
    bool all = true;
    w.begin("verification");
    for (const auto& c : checks) {
        w.begin(c.name);
        w.field("value", c.value);
        w.field("threshold", c.threshold);
        w.field("passed", c.passed());
        w.end();
        all = all && c.passed();
    }
    w.field("passed", all);
    w.end();
    return all;
}

void write_timings(ReportWriter& w, const std::vector<std::pair<std::string, double>>& timings) {
    w.begin("timings");
    for (const auto& [name, seconds] : timings) w.field(name + "_seconds", seconds);
    w.end();
}

void require_positive_c(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw UsageError(fmt::format("--c must be a positive number (got {})", c));
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    return f;
}

double max_abs(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

struct SolveOptions {
    int capital_n = 0;
    int n = 0;
    double c = 0.0;
    std::string quantum_numbers;
    double tol = SolverConfig{}.tol;
    int max_iter = SolverConfig{}.max_iter;
    std::string dump_psi;
};

int cmd_solve(const SolveOptions& o, std::ostream& out) {
    require_positive_c(o.c);
    if (o.capital_n < 2) throw UsageError("--capital-n must be at least 2");
    if (o.n < 0 || 2 * o.n > o.capital_n) {
        throw UsageError(fmt::format("--n must satisfy 0 <= n <= N/2 (got n={}, N={})", o.n, o.capital_n));
    }
    QuantumNumbers qn = o.quantum_numbers.empty() ? ground_state_quantum_numbers(o.n)
                                                  : QuantumNumbers::parse(o.quantum_numbers);
    if (static_cast<int>(qn.size()) != o.n) {
        throw UsageError(fmt::format("--quantum-numbers lists {} values but n = {}", qn.size(), o.n));
    }
    if (!(o.tol > 0.0) || o.max_iter < 1) throw UsageError("--tol must be positive and --max-iter at least 1");
    const Limits limits = Limits::from_environment();
    const Anisotropy a(o.c);

    ReportWriter w(out);
    Stopwatch clock;
    std::vector<std::pair<std::string, double>> timings;

    w.field("command", "solve");
    w.begin("parameters");
    w.field("capital_n", o.capital_n);
    w.field("n", o.n);
    w.field("c", o.c);
    w.field("delta", a.delta());
    w.field("quantum_numbers", qn.to_string());
    w.field("tol", o.tol);
    w.field("max_iter", o.max_iter);
    w.end();

    SolverConfig cfg;
    cfg.tol = o.tol;
    cfg.max_iter = o.max_iter;
    const SolveReport sr = solve(o.capital_n, qn, a, cfg);
    timings.emplace_back("solve", clock.lap());

    std::vector<double> momenta(sr.momenta.momenta().begin(), sr.momenta.momenta().end());
    w.begin("solver");
    w.field("converged", sr.converged);
    w.field("iterations", sr.iterations);
    w.field("final_residual", sr.final_residual);
    w.field("jacobian_condition_estimate", sr.jacobian_condition_estimate);
    w.field("jacobian_singular", sr.jacobian_singular);
    w.field("degenerate", sr.degenerate);
    w.field("momenta", std::span<const double>(momenta));
    w.field("residual_history", std::span<const double>(sr.residual_history));
    w.end();

    if (!sr.converged) {
        write_timings(w, timings);
        return kNotConvergedOrCapExceeded;
    }

    std::vector<Check> checks;
    checks.push_back({"solver_residual", sr.final_residual, o.tol});

    const SectorIndex sector(o.capital_n, o.n);
    const AmplitudeEvaluator ev(sr.momenta, limits);
    const SpectralPrediction pred = predict(sector, ev);
    const double be = max_abs(bethe_residual(sr.momenta, o.capital_n));
    timings.emplace_back("predict", clock.lap());

    w.begin("prediction");
    w.field("branch", pred.singular ? "singular" : "regular");
    w.field("singular", pred.singular);
    w.field("lambda_real", pred.lambda.real());
    w.field("lambda_imag", pred.lambda.imag());
    w.field("energy", pred.energy);
    w.field("psi_norm", pred.psi_norm);
    w.field("dimension", sector.dimension());
    w.end();

    checks.push_back({"bethe_equations", be, kBetheTol});
    checks.push_back({"lambda_imaginary", std::abs(pred.lambda.imag()), kImagTol});
    // A vanishing psi carries no eigenvector claim.
    const double psi_scale = std::sqrt(static_cast<double>(sector.dimension())) * ev.max_amplitude_magnitude();
    checks.push_back({"psi_collapse", psi_scale > 0.0 ? psi_scale / pred.psi_norm : 0.0, 1e6});

    if (!o.dump_psi.empty()) {
        auto f = open_output(o.dump_psi);
        write_psi(f, pred.psi);
    }

    w.begin("residuals");
    w.field("bethe_equations", be);
    const bool dense = sector.dimension() <= limits.max_dense_dim;
    const bool spectral = sector.dimension() <= limits.max_spectrum_dim;
    w.field("dense_checks", dense);
    w.field("spectrum_checks", spectral);
    std::optional<SectorMatrix> v;
    std::optional<HamiltonianBlock> h;
    if (dense && pred.psi_norm > 0.0) {
        v = build_transfer_block(o.capital_n, o.n, VertexWeights(o.c), limits);
        h = build_hamiltonian_block(o.capital_n, o.n, a.delta(), limits);
        const double rv = check_eigenpair(*v, pred.psi, pred.lambda);
        const double rh = check_eigenpair(h->matrix, pred.psi, Complex(pred.energy, 0.0));
        w.field("transfer_eigenpair", rv);
        w.field("hamiltonian_eigenpair", rh);
        checks.push_back({"transfer_eigenpair", rv, kEigenpairTol});
        checks.push_back({"hamiltonian_eigenpair", rh, kEigenpairTol});
        if (spectral) {
            const double comm = commutator_norm(*v, *h);
            w.field("commutator_max", comm);
            checks.push_back({"commutator_max", comm, kCommutatorTol});
        }
    }
    w.end();
    timings.emplace_back("dense_checks", clock.lap());

    if (spectral && v && h) {
        const auto vs = dense_spectrum(*v, limits);
        const auto hs = dense_spectrum(h->matrix, limits);
        const auto vm = match_eigenvalue(pred.lambda.real(), vs, kMatchTol);
        const auto hm = match_eigenvalue(pred.energy, hs, kMatchTol);
        w.begin("oracle");
        w.field("lambda_matched", vm.has_value());
        w.field("lambda_nearest", vs.eigenvalues.empty() ? 0.0 : vs.eigenvalues[vm ? vm->nearest : 0]);
        w.field("lambda_cluster_size", vm ? vm->cluster.size() : std::size_t{0});
        w.field("lambda_is_largest", !vs.eigenvalues.empty() &&
                                         std::abs(vs.eigenvalues.back() - pred.lambda.real()) <=
                                             kMatchTol * std::max(1.0, std::abs(pred.lambda.real())));
        w.field("energy_matched", hm.has_value());
        w.field("energy_cluster_size", hm ? hm->cluster.size() : std::size_t{0});
        w.end();
        auto distance = [](const std::optional<EigenvalueMatch>& m) {
            return m ? m->distance : std::numeric_limits<double>::infinity();
        };
        checks.push_back({"lambda_in_spectrum", distance(vm) / std::max(1.0, std::abs(pred.lambda.real())), kMatchTol});
        checks.push_back({"energy_in_spectrum", distance(hm) / std::max(1.0, std::abs(pred.energy)), kMatchTol});
        timings.emplace_back("spectrum", clock.lap());
    }

    const bool ok = write_checks(w, checks);
    write_timings(w, timings);
    return ok ? kOk : kVerificationFailed;
}

struct PartitionOptions {
    int capital_n = 0;
    int m = 0;
    double c = 0.0;
    bool bruteforce = false;
};

int cmd_partition(const PartitionOptions& o, std::ostream& out) {
    require_positive_c(o.c);
    if (o.capital_n < 1 || o.m < 1) throw UsageError("--capital-n and --m must be positive");
    if (o.bruteforce && (o.capital_n < 2 || o.m < 2)) {
        throw UsageError("--bruteforce needs --capital-n >= 2 and --m >= 2");
    }
    const Limits limits = Limits::from_environment();
    const VertexWeights weights(o.c);

    ReportWriter w(out);
    Stopwatch clock;
    std::vector<std::pair<std::string, double>> timings;
    w.field("command", "partition");
    w.begin("parameters");
    w.field("capital_n", o.capital_n);
    w.field("m", o.m);
    w.field("c", o.c);
    w.field("bruteforce", o.bruteforce);
    w.end();

    const double trace = trace_power(o.capital_n, o.m, weights, limits);
    timings.emplace_back("trace", clock.lap());
    w.begin("result");
    w.field("trace", trace);

    std::vector<Check> checks;
    if (o.bruteforce) {
        const double z = partition_function_bruteforce(o.capital_n, o.m, weights, limits);
        timings.emplace_back("bruteforce", clock.lap());
        const double discrepancy = std::abs(trace - z) / trace;
        w.field("bruteforce", z);
        w.field("relative_discrepancy", discrepancy);
        checks.push_back({"relative_discrepancy", discrepancy, kPartitionTol});
    }
    w.end();

    const bool ok = write_checks(w, checks);
    write_timings(w, timings);
    return ok ? kOk : kVerificationFailed;
}

struct IdentityOptions {
    double c = 0.0;
    int grid = 50;
    std::optional<int> capital_n;
    std::optional<int> n;
};

int cmd_verify_identities(const IdentityOptions& o, std::ostream& out) {
    require_positive_c(o.c);
    if (o.grid < 2) throw UsageError("--grid must be at least 2");
    if (o.capital_n.has_value() != o.n.has_value()) throw UsageError("--capital-n and --n must be given together");
    if (o.capital_n && (*o.capital_n < 1 || *o.n < 0 || 2 * *o.n > *o.capital_n)) {
        throw UsageError("--n must satisfy 0 <= n <= N/2");
    }
    const Anisotropy a(o.c);

    ReportWriter w(out);
    Stopwatch clock;
    std::vector<std::pair<std::string, double>> timings;
    w.field("command", "verify-identities");
    w.begin("parameters");
    w.field("c", o.c);
    w.field("delta", a.delta());
    w.field("mu", a.mu());
    w.field("grid", o.grid);
    if (o.capital_n) {
        w.field("capital_n", *o.capital_n);
        w.field("n", *o.n);
    }
    w.end();

    const auto r = function_identity_suite(a, o.grid);
    timings.emplace_back("functions", clock.lap());
    w.begin("functions");
    w.field("defining_relation", r.defining_relation);
    w.field("antisymmetry", r.antisymmetry);
    w.field("theta_origin", r.theta_origin);
    w.field("ratio_identity", r.ratio_identity);
    w.field("zero_identity", r.zero_identity);
    w.field("lm_sum", r.lm_sum);
    w.field("derivative_fd", r.derivative_fd);
    w.field("min_real_s", r.min_real_s);
    w.end();

    std::vector<Check> checks{
        {"defining_relation", r.defining_relation, kIdentityTol},
        {"antisymmetry", r.antisymmetry, kIdentityTol},
        {"theta_origin", r.theta_origin, kIdentityTol},
        {"ratio_identity", r.ratio_identity, kIdentityTol},
        {"zero_identity", r.zero_identity, kIdentityTol},
        {"lm_sum", r.lm_sum, kIdentityTol},
        {"derivative_fd", r.derivative_fd, kFiniteDifferenceTol},
    };

    if (o.capital_n) {
        const auto qn = ground_state_quantum_numbers(*o.n);
        const auto sr = solve(*o.capital_n, qn, a);
        timings.emplace_back("solve", clock.lap());
        w.begin("roots");
        w.field("converged", sr.converged);
        w.field("final_residual", sr.final_residual);
        if (!sr.converged) {
            w.end();
            write_timings(w, timings);
            return kNotConvergedOrCapExceeded;
        }
        const auto ar = identity_suite(sr.momenta, *o.capital_n);
        timings.emplace_back("amplitudes", clock.lap());
        w.field("samples", ar.samples);
        w.field("adjacent", ar.adjacent);
        w.field("boundary", ar.boundary);
        w.field("cyclic", ar.cyclic);
        w.end();
        checks.push_back({"adjacent", ar.adjacent, kAdjacentTol});
        checks.push_back({"boundary", ar.boundary, kCyclicTol});
        checks.push_back({"cyclic", ar.cyclic, kCyclicTol});
    }

    const bool ok = write_checks(w, checks);
    write_timings(w, timings);
    return ok ? kOk : kVerificationFailed;
}

struct SpectrumOptions {
    int capital_n = 0;
    int n = 0;
    double c = 0.0;
    std::string kind = "transfer";
    std::string dump_matrix;
    std::string csv;
};

int cmd_spectrum(const SpectrumOptions& o, std::ostream& out) {
    require_positive_c(o.c);
    const bool hamiltonian = o.kind == "hamiltonian";
    if (o.capital_n < (hamiltonian ? 2 : 1)) throw UsageError("--capital-n is too small");
    if (o.n < 0 || o.n > o.capital_n) throw UsageError("--n must satisfy 0 <= n <= N");
    const Limits limits = Limits::from_environment();
    const Anisotropy a(o.c);

    ReportWriter w(out);
    Stopwatch clock;
    std::vector<std::pair<std::string, double>> timings;
    w.field("command", "spectrum");
    w.begin("parameters");
    w.field("capital_n", o.capital_n);
    w.field("n", o.n);
    w.field("c", o.c);
    w.field("delta", a.delta());
    w.field("kind", o.kind);
    w.end();

    const SectorMatrix m = hamiltonian ? build_hamiltonian_block(o.capital_n, o.n, a.delta(), limits).matrix
                                       : build_transfer_block(o.capital_n, o.n, VertexWeights(o.c), limits);
    timings.emplace_back("build", clock.lap());
    if (!o.dump_matrix.empty()) {
        auto f = open_output(o.dump_matrix);
        write_matrix(f, m);
    }
    const auto s = dense_spectrum(m, limits);
    timings.emplace_back("eigensolve", clock.lap());

    if (!o.csv.empty()) {
        auto f = open_output(o.csv);
        f << "index,eigenvalue\n";
        for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) f << fmt::format("{},{:.17g}\n", i, s.eigenvalues[i]);
    }

    w.begin("spectrum");
    w.field("dimension", m.dimension());
    w.field("eigenvalues", std::span<const double>(s.eigenvalues));
    w.field("orthonormality_defect", s.orthonormality_defect);
    w.field("reconstruction_defect", s.reconstruction_defect);
    w.field("trace_defect", s.trace_defect);
    w.end();

    const bool ok = write_checks(w, {
                                        {"orthonormality_defect", s.orthonormality_defect, kDecompositionTol},
                                        {"reconstruction_defect", s.reconstruction_defect, kDecompositionTol},
                                        {"trace_defect", s.trace_defect, kDecompositionTol},
                                    });
    write_timings(w, timings);
    return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coordinate Bethe ansatz for the six-vertex transfer matrix and the XXZ chain", "bethe6v"};
    app.require_subcommand(1);

    SolveOptions so;
    auto* solve_cmd = app.add_subcommand("solve", "Solve the Bethe equations and verify psi, Lambda and E");
    solve_cmd->add_option("--capital-n", so.capital_n, "Ring size N")->required();
    solve_cmd->add_option("--n", so.n, "Number of up arrows")->required();
    solve_cmd->add_option("--c", so.c, "Vertex weight c > 0")->required();
    solve_cmd->add_option("--quantum-numbers", so.quantum_numbers, "Comma-separated I_j, e.g. \"-1/2,1/2\"");
    solve_cmd->add_option("--tol", so.tol, "Newton residual tolerance");
    solve_cmd->add_option("--max-iter", so.max_iter, "Newton iteration cap");
    solve_cmd->add_option("--dump-psi", so.dump_psi, "Write psi as 'index real imag' lines");

    PartitionOptions po;
    auto* partition_cmd = app.add_subcommand("partition", "Torus partition function from Tr(V^M)");
    partition_cmd->add_option("--capital-n", po.capital_n, "Ring size N")->required();
    partition_cmd->add_option("--m", po.m, "Number of rows M")->required();
    partition_cmd->add_option("--c", po.c, "Vertex weight c > 0")->required();
    partition_cmd->add_flag("--bruteforce", po.bruteforce, "Also enumerate arrow configurations");

    IdentityOptions io;
    int id_capital_n = 0;
    int id_n = 0;
    auto* identities_cmd = app.add_subcommand("verify-identities", "Check the kernel identities on a grid");
    identities_cmd->add_option("--c", io.c, "Vertex weight c > 0")->required();
    identities_cmd->add_option("--grid", io.grid, "Grid points per axis");
    auto* id_n_opt = identities_cmd->add_option("--capital-n", id_capital_n, "Ring size for the root checks");
    auto* id_small_n_opt = identities_cmd->add_option("--n", id_n, "Particle number for the root checks");

    SpectrumOptions sp;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Full spectrum of one sector block");
    spectrum_cmd->add_option("--capital-n", sp.capital_n, "Ring size N")->required();
    spectrum_cmd->add_option("--n", sp.n, "Number of up arrows")->required();
    spectrum_cmd->add_option("--c", sp.c, "Vertex weight c > 0")->required();
    spectrum_cmd->add_option("--kind", sp.kind, "transfer or hamiltonian")
        ->check(CLI::IsMember({"transfer", "hamiltonian"}));
    spectrum_cmd->add_option("--dump-matrix", sp.dump_matrix, "Write the block in matrix text format");
    spectrum_cmd->add_option("--csv", sp.csv, "Write eigenvalues as CSV");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidArguments;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(so, out);
        if (partition_cmd->parsed()) return cmd_partition(po, out);
        if (identities_cmd->parsed()) {
            if (id_n_opt->count() > 0) io.capital_n = id_capital_n;
            if (id_small_n_opt->count() > 0) io.n = id_n;
            return cmd_verify_identities(io, out);
        }
        if (spectrum_cmd->parsed()) return cmd_spectrum(sp, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kNotConvergedOrCapExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kInvalidArguments;
}

}  // namespace bethe::cli
