#include "qsphere/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qsphere {

CVec4 kron_vec(const CVec2& a, const CVec2& b) {
    CVec4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r[2 * i + j] = a[i] * b[j];
    return r;
}

CMat4 kron_mat(const CMat2& A, const CMat2& B) {
    CMat4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = A(i, j) * B(k, l);
    return r;
}

cplx det4(const CMat4& M) {
    // Gaussian elimination with partial pivoting on a working copy.
    CMat4 A = M;
    cplx det = 1.0;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        double best = std::abs(A(col, col));
        for (std::size_t r = col + 1; r < 4; ++r) {
            const double m = std::abs(A(r, col));
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t j = 0; j < 4; ++j) std::swap(A(piv, j), A(col, j));
            det = -det;
        }
        det *= A(col, col);
        for (std::size_t r = col + 1; r < 4; ++r) {
            const cplx f = A(r, col) / A(col, col);
            for (std::size_t j = col; j < 4; ++j) A(r, j) -= f * A(col, j);
        }
    }
    return det;
}

namespace {

template <std::size_t N>
double off_diagonal_max(const Mat<N>& A) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i != j) m = std::max(m, std::abs(A(i, j)));
    return m;
}

}  // namespace

template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Mat<N>& M) {
    if (frobenius_norm(M - adjoint(M)) > 1e-10)
        throw NotHermitian("matrix is not Hermitian within 1e-10");

    // Work on the exactly-Hermitian average to keep the iteration stable.
    Mat<N> A;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            A(i, j) = 0.5 * (M(i, j) + std::conj(M(j, i)));

    Mat<N> V = Mat<N>::identity();
    constexpr double kOffTol = 1e-13;
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_max(A) > kOffTol; ++sweep) {
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const cplx apq = A(p, q);
                const double r = std::abs(apq);
                if (r <= kOffTol) continue;

                // Unitary plane rotation G (identity outside rows/cols p,q)
                // chosen so (G^H A G)(p,q) = 0:
                //   G(p,p)=c, G(p,q)=-s e^{i phi}, G(q,p)=s e^{-i phi}, G(q,q)=c
                // with phi = arg(A(p,q)) and 2*theta = atan2(2r, A(p,p)-A(q,q)).
                const cplx phase = apq / r;
                const double theta =
                    0.5 * std::atan2(2.0 * r, A(p, p).real() - A(q, q).real());
                const double c = std::cos(theta);
                const double s = std::sin(theta);

                // A <- G^H A G, applied as row and column updates.
                for (std::size_t j = 0; j < N; ++j) {
                    const cplx apj = A(p, j);
                    const cplx aqj = A(q, j);
                    A(p, j) = c * apj + s * phase * aqj;
                    A(q, j) = -s * std::conj(phase) * apj + c * aqj;
                }
                for (std::size_t i = 0; i < N; ++i) {
                    const cplx aip = A(i, p);
                    const cplx aiq = A(i, q);
                    A(i, p) = c * aip + s * std::conj(phase) * aiq;
                    A(i, q) = -s * phase * aip + c * aiq;
                    const cplx vip = V(i, p);
                    const cplx viq = V(i, q);
                    V(i, p) = c * vip + s * std::conj(phase) * viq;
                    V(i, q) = -s * phase * vip + c * viq;
                }
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                A(p, p) = A(p, p).real();
                A(q, q) = A(q, q).real();
            }
        }
    }

    EigenSystem<N> out;
    std::array<std::size_t, N> idx{};
    for (std::size_t i = 0; i < N; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return A(a, a).real() < A(b, b).real(); });
    for (std::size_t j = 0; j < N; ++j) {
        out.values[j] = A(idx[j], idx[j]).real();
        for (std::size_t i = 0; i < N; ++i) out.vectors(i, j) = V(i, idx[j]);
    }
    return out;
}

template EigenSystem<2> hermitian_eigensystem<2>(const Mat<2>&);
template EigenSystem<4> hermitian_eigensystem<4>(const Mat<4>&);

CMat4 psd_sqrt(const CMat4& A) {
    const EigenSystem<4> es = hermitian_eigensystem(A);
    CMat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                const double lam = es.values[k] > 0.0 ? std::sqrt(es.values[k]) : 0.0;
                s += es.vectors(i, k) * lam * std::conj(es.vectors(j, k));
            }
            r(i, j) = s;
        }
    return r;
}

}  // namespace qsphere
