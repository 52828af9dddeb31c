#include "qsphere/qubit_group.hpp"

#include <cmath>

#include "qsphere/random.hpp"

namespace qsphere {

Qubit::Qubit(const CVec2& v) : v_(v) {
    const double n = norm(v);
    if (n <= 1e-12) throw ZeroVector("zero vector is not a qubit");
    if (std::abs(n - 1.0) > 1e-12)
        throw std::invalid_argument("qubit norm deviates from 1 by more than 1e-12");
}

Qubit Qubit::normalized(const CVec2& v) {
    const double n = norm(v);
    if (n <= 1e-12) throw ZeroVector("cannot normalize a zero vector");
    return Qubit(CVec2{{v[0] / n, v[1] / n}}, Trusted{});
}

SU2Matrix::SU2Matrix(const CMat2& m) : m_(m) {
    if (frobenius_norm(adjoint(m) * m - CMat2::identity()) > 1e-10)
        throw NotUnitary("matrix is not unitary within 1e-10");
    if (std::abs(det2(m) - cplx(1.0)) > 1e-10)
        throw NotSpecialUnitary("determinant deviates from 1 by more than 1e-10");
}

Gate2::Gate2(const CMat2& m) : m_(m) {
    if (frobenius_norm(adjoint(m) * m - CMat2::identity()) > 1e-10)
        throw NotUnitary("matrix is not unitary within 1e-10");
}

SU2Matrix su2_from_qubit(const Qubit& x) {
    CMat2 m;
    m(0, 0) = x[0];
    m(0, 1) = -std::conj(x[1]);
    m(1, 0) = x[1];
    m(1, 1) = std::conj(x[0]);
    return SU2Matrix(m);
}

Qubit qubit_from_su2(const SU2Matrix& M) {
    return Qubit::normalized(CVec2{{M.mat()(0, 0), M.mat()(1, 0)}});
}

Qubit star(const Qubit& a, const Qubit& b) {
    const cplx r0 = a[0] * b[0] - std::conj(a[1]) * b[1];
    const cplx r1 = a[1] * b[0] + std::conj(a[0]) * b[1];
    return Qubit::normalized(CVec2{{r0, r1}});
}

Qubit star_inverse(const Qubit& x) {
    // First column of the adjoint of the embedded matrix.
    return Qubit::normalized(CVec2{{std::conj(x[0]), -x[1]}});
}

Qubit star_power(const Qubit& x, long long n) {
    Qubit base = n < 0 ? star_inverse(x) : x;
    long long steps = n < 0 ? -n : n;
    Qubit acc(cplx(1.0), cplx(0.0));
    for (long long i = 0; i < steps; ++i) acc = star(acc, base);
    return acc;
}

std::optional<long long> order(const Qubit& x, long long max_n, double tol) {
    const Qubit id(cplx(1.0), cplx(0.0));
    Qubit acc = id;
    for (long long n = 1; n <= max_n; ++n) {
        acc = star(acc, x);
        if (distance(acc.vec(), id.vec()) < tol) return n;
    }
    return std::nullopt;
}

std::vector<Qubit> orbit(const Qubit& x, long long count) {
    std::vector<Qubit> out;
    out.reserve(static_cast<std::size_t>(count));
    Qubit acc = x;
    for (long long n = 1; n <= count; ++n) {
        out.push_back(acc);
        acc = star(acc, x);
    }
    return out;
}

CommutationCheck gate_commutes_with_embedding(const Gate2& U, int samples,
                                              double tol, std::uint64_t seed) {
    Sampler rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Qubit x = rng.qubit();
        const CVec2 ux = U.mat() * x.vec();
        const CMat2 lhs = su2_from_qubit(Qubit::normalized(ux)).mat();
        const CMat2 rhs = U.mat() * su2_from_qubit(x).mat();
        worst = std::max(worst, frobenius_norm(lhs - rhs));
    }
    return CommutationCheck{worst < tol, worst};
}

}  // namespace qsphere
