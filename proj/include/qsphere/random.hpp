#pragma once

#include <cstdint>
#include <random>

#include "qsphere/charts.hpp"
#include "qsphere/qubit_group.hpp"

namespace qsphere {

// Deterministic sampling for property sweeps. The Gaussian pipeline is
// spelled out (Box-Muller over mt19937_64) instead of using
// std::normal_distribution, whose output is implementation-defined; given a
// seed, every value here is identical across standard libraries.
class Sampler {
  public:
    static constexpr const char* kAlgorithm = "mt19937_64+box-muller";

    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double gaussian();

    cplx gaussian_cplx() {
        const double re = gaussian();
        const double im = gaussian();
        return cplx(re, im);
    }

    // Uniform on the unit sphere of C^2 (normalized Gaussian pair).
    Qubit qubit();

    // Uniform on the unit sphere of C^4.
    TwoQubitState state();

    // kron of two independent qubits: a separable state.
    TwoQubitState product_state();

    // Embedded random qubit: uniform over the special-unitary group.
    SU2Matrix special_unitary();

    // Random special unitary times diag(1, e^{i theta}) with theta in
    // [0.2, 2pi - 0.2], so |det - 1| >= 2 sin(0.1) > 0.1.
    Gate2 off_special_unitary();

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qsphere
