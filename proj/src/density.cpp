#include "qsphere/density.hpp"

#include <cmath>

namespace qsphere {

namespace {

template <std::size_t N>
void validate_density(const Mat<N>& m) {
    if (frobenius_norm(m - adjoint(m)) > 1e-10)
        throw InvalidDensity("density matrix is not Hermitian within 1e-10");
    if (std::abs(trace(m) - cplx(1.0)) > 1e-10)
        throw InvalidDensity("density matrix trace deviates from 1 by more than 1e-10");
    for (double lam : hermitian_eigenvalues(m))
        if (lam < -1e-10) throw InvalidDensity("density matrix has a negative eigenvalue");
}

template <std::size_t N>
double entropy_of_spectrum(const std::array<double, N>& ev) {
    double e = 0.0;
    for (double lam : ev) {
        double w = lam;
        if (w < 0.0) w = 0.0;
        if (w > 1.0) w = 1.0;
        if (w > 0.0) e -= w * std::log2(w);
    }
    return e;
}

}  // namespace

DensityMatrix2::DensityMatrix2(const CMat2& m) : m_(m) { validate_density(m); }
DensityMatrix4::DensityMatrix4(const CMat4& m) : m_(m) { validate_density(m); }

DensityMatrix4 pure_density(const TwoQubitState& x) {
    CMat4 m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = x[i] * std::conj(x[j]);
    return DensityMatrix4(m);
}

DensityMatrix2 pure_density(const Qubit& z) {
    CMat2 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = z[i] * std::conj(z[j]);
    return DensityMatrix2(m);
}

DensityMatrix2 partial_trace(const DensityMatrix4& Q, int subsystem) {
    if (subsystem != 0 && subsystem != 1)
        throw IndexOutOfRange("subsystem must be 0 or 1");
    const CMat4& q = Q.mat();
    CMat2 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r(i, j) = subsystem == 0 ? q(2 * i, 2 * j) + q(2 * i + 1, 2 * j + 1)
                                     : q(i, j) + q(2 + i, 2 + j);
    return DensityMatrix2(r);
}

std::pair<double, double> lambda_pair(const TwoQubitState& x) {
    const double s = s_value(x);
    return {0.5 * (1.0 - s), 0.5 * (1.0 + s)};
}

double von_neumann_entropy(const DensityMatrix2& m) {
    return entropy_of_spectrum(hermitian_eigenvalues(m.mat()));
}

double von_neumann_entropy(const DensityMatrix4& m) {
    return entropy_of_spectrum(hermitian_eigenvalues(m.mat()));
}

double reduced_entropy(const DensityMatrix4& m, int subsystem) {
    return von_neumann_entropy(partial_trace(m, subsystem));
}

double entropy_closed_form(const TwoQubitState& x) {
    const double s = s_value(x);
    auto plog2 = [](double w) { return w > 0.0 ? w * std::log2(w) : 0.0; };
    return -0.5 * (plog2(1.0 - s) + plog2(1.0 + s)) + 1.0;
}

DensityMatrix4 mix(const MixedState& components) {
    double total = 0.0;
    for (const auto& [w, x] : components.components) {
        (void)x;
        if (w < 0.0) throw InvalidWeights("negative component weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw InvalidWeights("component weights sum to " + std::to_string(total));

    CMat4 acc;
    for (const auto& [w, x] : components.components)
        acc = acc + w * pure_density(x).mat();
    return DensityMatrix4(acc);
}

bool is_pure(const DensityMatrix4& m, double tol) {
    return std::abs(trace(m.mat() * m.mat()) - cplx(1.0)) < tol;
}

}  // namespace qsphere
