#pragma once

#include <cmath>
#include <complex>

#include "qsphere/charts.hpp"
#include "qsphere/linalg.hpp"
#include "qsphere/qubit_group.hpp"

namespace testutil {

using qsphere::cplx;

inline qsphere::Qubit qb(cplx a, cplx b) { return qsphere::Qubit(qsphere::CVec2{a, b}); }

inline qsphere::TwoQubitState st(cplx a, cplx b, cplx c, cplx d) {
    return qsphere::TwoQubitState(qsphere::CVec4{a, b, c, d});
}

template <std::size_t N>
double max_entry_diff(const qsphere::Mat<N>& a, const qsphere::Mat<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

template <std::size_t N>
double max_entry_diff(const qsphere::Vec<N>& a, const qsphere::Vec<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Largest singular value via power iteration on M^H M. Deliberately avoids the
// Jacobi code path so it can serve as an independent cross-check.
inline double power_spectral_norm(const qsphere::CMat4& m, int iters = 200000) {
    using namespace qsphere;
    CMat4 g = adjoint(m) * m;
    CVec4 v{cplx(1.0, 0.3), cplx(-0.7, 0.2), cplx(0.4, -0.9), cplx(0.1, 0.8)};
    double n0 = norm(v);
    for (auto& c : v) c /= n0;
    double rq = 0.0;
    for (int i = 0; i < iters; ++i) {
        CVec4 w = g * v;
        double n = norm(w);
        if (n == 0.0) return 0.0;
        for (auto& c : w) c /= n;
        v = w;
        double next = dot(v, g * v).real();
        if (i > 64 && std::abs(next - rq) < 1e-16 * std::max(1.0, next)) {
            rq = next;
            break;
        }
        rq = next;
    }
    return std::sqrt(rq < 0.0 ? 0.0 : rq);
}

// Distance up to a global phase: min over |z|=1 of ||a - z b||.
template <std::size_t N>
double phase_free_distance(const qsphere::Vec<N>& a, const qsphere::Vec<N>& b) {
    cplx ip = qsphere::dot(b, a);
    cplx z = std::abs(ip) <= 1e-300 ? cplx(1.0, 0.0) : ip / std::abs(ip);
    qsphere::Vec<N> scaled = b;
    for (auto& c : scaled) c *= z;
    return qsphere::distance(a, scaled);
}

}  // namespace testutil
