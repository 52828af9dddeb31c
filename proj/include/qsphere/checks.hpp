#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Seeded property suites behind the `check` subcommand, and the row generator
// for the interpolating-family sweep. A violation is a failed property with a
// replayable input; a finding is a measured, systematic gap between a closed
// form and its numerical oracle, reported with statistics instead of being
// either asserted or hidden.

namespace qsphere {

struct UnknownSuite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string property;
    std::string input;
    double deviation;
};

struct Finding {
    std::string property;
    std::string details;
};

struct CheckReport {
    std::string suite;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<Violation> violations;
    std::vector<Finding> findings;

    bool ok() const { return violations.empty(); }
    std::string to_text() const;
};

// suite is one of qubit-group, charts, density, all. Deterministic in
// (suite, samples, seed). tol_override replaces every property tolerance,
// which exists so the harness itself can be falsified on demand.
CheckReport run_check_suite(const std::string& suite, int samples, std::uint64_t seed,
                            std::optional<double> tol_override = std::nullopt);

struct SweepRow {
    double p;
    double nu;                      // closed form sqrt(1 + 2|t|) - 1
    double spectral_norm_minus_1;   // numerical largest singular value - 1
    double entropy;                 // closed-form reduced entropy H(p)
};

// steps >= 2 evenly spaced p values covering [0, 1]. The embedding chart is
// the canonical one (p = 0 leaves the chart-0 domain).
std::vector<SweepRow> sweep_rows(int steps);

}  // namespace qsphere
