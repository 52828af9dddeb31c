#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsphere/charts.hpp"
#include "qsphere/checks.hpp"
#include "qsphere/density.hpp"
#include "qsphere/linalg.hpp"
#include "qsphere/qubit_group.hpp"
#include "qsphere/random.hpp"

// Exit codes: 0 success, 1 property violation (check failures, non-separable
// split), 2 usage or input errors.

namespace {

using namespace qsphere;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);  // folds -0 into 0
    return buf;
}

std::string g15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v + 0.0);
    return buf;
}

std::string entry_text(cplx z) {
    if (z.imag() == 0.0) return g15(z.real());
    if (z.real() == 0.0) return g15(z.imag()) + "i";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
    return buf;
}

void print_matrix(std::ostream& os, const CMat4& m) {
    std::size_t width = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) width = std::max(width, entry_text(m(i, j)).size());
    for (std::size_t i = 0; i < 4; ++i) {
        os << "  [";
        for (std::size_t j = 0; j < 4; ++j) {
            std::string e = entry_text(m(i, j));
            os << ' ' << std::string(width - e.size(), ' ') << e;
        }
        os << " ]\n";
    }
}

// 2k reals (re, im interleaved) -> k complex coordinates; warns on stderr when
// the normalization correction is visible.
template <std::size_t K>
Vec<K> parse_coords(const std::vector<double>& raw) {
    Vec<K> v;
    for (std::size_t i = 0; i < K; ++i) v[i] = cplx(raw[2 * i], raw[2 * i + 1]);
    const double n = norm(v);
    if (n <= 1e-12) throw ZeroVector("input vector has norm below 1e-12");
    if (std::abs(n - 1.0) > 1e-9)
        std::cerr << "warning: input renormalized, correction " << g17(std::abs(n - 1.0))
                  << "\n";
    for (std::size_t i = 0; i < K; ++i) v[i] /= n;
    return v;
}

int cmd_tables(std::ostream& os, const std::string& which, cplx u) {
    os << which << " basis embeddings at gauge u = " << entry_text(u) << "\n";
    if (which == "canonical") {
        for (int k = 0; k < 4; ++k) {
            os << "\nbasis vector " << k << ", chart " << k << " (unitary):\n";
            print_matrix(os, chart_embedding(canonical_vector(k), k, u).matrix);
        }
        return 0;
    }
    const double root2 = std::sqrt(2.0);
    for (int i = 0; i < 4; ++i) {
        const int ka = i < 2 ? 0 : 1;
        const int kb = i < 2 ? 3 : 2;
        const CMat4 m = chart_embedding(bell_vector(i), ka, u).matrix;
        os << "\nbell vector " << i << ", identical in charts " << ka << " and " << kb
           << " (non-unitary, spectral norm sqrt(2) = " << g15(root2) << "):\n";
        print_matrix(os, m);
    }
    return 0;
}

int cmd_sweep(std::ostream& os, int steps) {
    os << "p,nu,spectral_norm_minus_1,entropy\n";
    for (const SweepRow& r : sweep_rows(steps))
        os << g17(r.p) << ',' << g17(r.nu) << ',' << g17(r.spectral_norm_minus_1) << ','
           << g17(r.entropy) << "\n";
    return 0;
}

int cmd_check(std::ostream& os, const std::string& suite, int samples, std::uint64_t seed,
              std::optional<double> tol) {
    const CheckReport rep = run_check_suite(suite, samples, seed, tol);
    os << rep.to_text();
    return rep.ok() ? 0 : 1;
}

int cmd_measure(std::ostream& os, const std::vector<double>& raw) {
    const TwoQubitState x = TwoQubitState::normalized(parse_coords<4>(raw));
    const EntanglementReport r = report(x);
    os << "nu: " << g17(r.nu) << "\n";
    os << "nu_scaled: " << g17(r.nu_scaled) << "\n";
    os << "t_abs: " << g17(r.t_abs) << "\n";
    os << "s: " << g17(r.s) << "\n";
    os << "lambda0: " << g17(r.lambda0) << "\n";
    os << "lambda1: " << g17(r.lambda1) << "\n";
    os << "entropy: " << g17(r.entropy) << "\n";
    os << "separable: " << (r.separable ? "true" : "false") << "\n";
    return 0;
}

int cmd_split(std::ostream& os, const std::vector<double>& raw, std::optional<int> chart,
              cplx u) {
    const TwoQubitState x = TwoQubitState::normalized(parse_coords<4>(raw));
    const int k = chart ? *chart : canonical_chart(x);
    const TensorSplit s = tensor_split(x, k, u);
    os << "chart: " << s.chart << "\n";
    os << "gauge: " << g17(s.gauge.real()) << " " << g17(s.gauge.imag()) << "\n";
    os << "c0: " << g17(s.c0[0].real()) << " " << g17(s.c0[0].imag()) << " "
       << g17(s.c0[1].real()) << " " << g17(s.c0[1].imag()) << "\n";
    os << "c1: " << g17(s.c1[0].real()) << " " << g17(s.c1[0].imag()) << " "
       << g17(s.c1[1].real()) << " " << g17(s.c1[1].imag()) << "\n";
    os << "recombination_error: " << g17(distance(kron_vec(s.c0.vec(), s.c1.vec()), x.vec()))
       << "\n";
    return 0;
}

int cmd_orbit(std::ostream& os, const std::vector<double>& raw, long long count) {
    const Qubit x = Qubit::normalized(parse_coords<2>(raw));
    os << "n,re0,im0,re1,im1\n";
    long long n = 1;
    for (const Qubit& p : orbit(x, count)) {
        os << n++ << ',' << g17(p[0].real()) << ',' << g17(p[0].imag()) << ','
           << g17(p[1].real()) << ',' << g17(p[1].imag()) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sphere-to-matrix embeddings for one and two qubits: group structure, "
                 "chart transforms, entanglement measure, density apparatus"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::uint64_t seed = 42;
    double tol_value = 0.0;
    std::string out_path;
    std::vector<double> u_parts = {1.0, 0.0};
    app.add_option("--seed", seed, "RNG seed (default 42)");
    CLI::Option* tol_opt =
        app.add_option("--tol", tol_value, "override every property tolerance in check");
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--u", u_parts, "gauge phase as two reals re im (default 1 0)")
        ->expected(2);

    auto* tables = app.add_subcommand("tables", "print the canonical or Bell fixture matrices");
    std::string which = "canonical";
    tables->add_option("which", which, "canonical or bell")
        ->required()
        ->check(CLI::IsMember({"canonical", "bell"}));

    auto* sweep = app.add_subcommand("sweep-xp", "CSV sweep of the interpolating family");
    int steps = 101;
    sweep->add_option("--steps", steps, "number of p values in [0,1] (default 101)");

    auto* check = app.add_subcommand("check", "run a seeded property suite");
    std::string suite;
    int samples = 1000;
    check->add_option("suite", suite, "qubit-group, charts, density or all")->required();
    check->add_option("--samples", samples, "random draws per suite (default 1000)");

    auto* measure = app.add_subcommand("measure", "entanglement report for a state");
    std::vector<double> measure_raw;
    measure->add_option("state", measure_raw, "8 reals: re0 im0 re1 im1 re2 im2 re3 im3")
        ->expected(8);

    auto* split = app.add_subcommand("split", "tensor-factor a separable state");
    std::vector<double> split_raw;
    std::optional<int> split_chart;
    int split_chart_value = 0;
    split->add_option("state", split_raw, "8 reals: re0 im0 ... re3 im3")->expected(8);
    CLI::Option* chart_opt =
        split->add_option("--chart", split_chart_value, "chart index 0..3 (default: canonical)");

    auto* orbit_cmd = app.add_subcommand("orbit", "CSV of consecutive star powers of a qubit");
    std::vector<double> orbit_raw;
    long long count = 16;
    orbit_cmd->add_option("qubit", orbit_raw, "4 reals: re0 im0 re1 im1")->expected(4);
    orbit_cmd->add_option("--count", count, "number of powers to emit (default 16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const cplx u(u_parts[0], u_parts[1]);
    if (std::abs(std::abs(u) - 1.0) > 1e-9) {
        std::cerr << "error: --u must have unit modulus within 1e-9 (got |u| = "
                  << g17(std::abs(u)) << ")\n";
        return 2;
    }
    if (*chart_opt) split_chart = split_chart_value;

    std::ofstream ofs;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        ofs.open(out_path);
        if (!ofs) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return 2;
        }
        os = &ofs;
    }

    std::optional<double> tol;
    if (*tol_opt) tol = tol_value;

    try {
        if (app.got_subcommand(tables)) return cmd_tables(*os, which, u);
        if (app.got_subcommand(sweep)) return cmd_sweep(*os, steps);
        if (app.got_subcommand(check)) return cmd_check(*os, suite, samples, seed, tol);
        if (app.got_subcommand(measure)) return cmd_measure(*os, measure_raw);
        if (app.got_subcommand(split)) return cmd_split(*os, split_raw, split_chart, u);
        if (app.got_subcommand(orbit_cmd)) return cmd_orbit(*os, orbit_raw, count);
    } catch (const NotSeparable& e) {
        *os << "not separable: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
