#include "qsphere/random.hpp"

#include <cmath>
#include <numbers>

namespace qsphere {

double Sampler::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 shifted into (0, 1] so the log is finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Qubit Sampler::qubit() {
    return Qubit::normalized(CVec2{{gaussian_cplx(), gaussian_cplx()}});
}

TwoQubitState Sampler::state() {
    return TwoQubitState::normalized(
        CVec4{{gaussian_cplx(), gaussian_cplx(), gaussian_cplx(), gaussian_cplx()}});
}

TwoQubitState Sampler::product_state() {
    return TwoQubitState::normalized(kron_vec(qubit().vec(), qubit().vec()));
}

SU2Matrix Sampler::special_unitary() {
    return su2_from_qubit(qubit());
}

Gate2 Sampler::off_special_unitary() {
    const double theta = uniform(0.2, 2.0 * std::numbers::pi - 0.2);
    CMat2 d = CMat2::identity();
    d(1, 1) = std::exp(cplx(0.0, theta));
    return Gate2(special_unitary().mat() * d);
}

}  // namespace qsphere
