#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

// Fixed-size dense complex linear algebra. Everything downstream works with
// 2x2 and 4x4 matrices exclusively, so sizes are compile-time constants and
// nothing here allocates.

namespace qsphere {

using cplx = std::complex<double>;

template <std::size_t N>
struct Vec {
    std::array<cplx, N> v{};

    cplx& operator[](std::size_t i) { return v[i]; }
    const cplx& operator[](std::size_t i) const { return v[i]; }

    auto begin() { return v.begin(); }
    auto end() { return v.end(); }
    auto begin() const { return v.begin(); }
    auto end() const { return v.end(); }
};

template <std::size_t N>
struct Mat {
    // Row-major: entry (i, j) at a[i*N + j].
    std::array<cplx, N * N> a{};

    cplx& operator()(std::size_t i, std::size_t j) { return a[i * N + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * N + j]; }

    static Mat identity() {
        Mat m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }
};

using CVec2 = Vec<2>;
using CVec4 = Vec<4>;
using CMat2 = Mat<2>;
using CMat4 = Mat<4>;

struct NotHermitian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <std::size_t N>
Vec<N> operator+(const Vec<N>& a, const Vec<N>& b) {
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
}

template <std::size_t N>
Vec<N> operator-(const Vec<N>& a, const Vec<N>& b) {
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
    return r;
}

template <std::size_t N>
Vec<N> operator*(cplx s, const Vec<N>& a) {
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
    return r;
}

template <std::size_t N>
Mat<N> operator+(const Mat<N>& A, const Mat<N>& B) {
    Mat<N> r;
    for (std::size_t i = 0; i < N * N; ++i) r.a[i] = A.a[i] + B.a[i];
    return r;
}

template <std::size_t N>
Mat<N> operator-(const Mat<N>& A, const Mat<N>& B) {
    Mat<N> r;
    for (std::size_t i = 0; i < N * N; ++i) r.a[i] = A.a[i] - B.a[i];
    return r;
}

template <std::size_t N>
Mat<N> operator*(cplx s, const Mat<N>& A) {
    Mat<N> r;
    for (std::size_t i = 0; i < N * N; ++i) r.a[i] = s * A.a[i];
    return r;
}

template <std::size_t N>
Mat<N> matmul(const Mat<N>& A, const Mat<N>& B) {
    Mat<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            const cplx aik = A(i, k);
            for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * B(k, j);
        }
    return r;
}

template <std::size_t N>
Mat<N> operator*(const Mat<N>& A, const Mat<N>& B) {
    return matmul(A, B);
}

template <std::size_t N>
Vec<N> matvec(const Mat<N>& A, const Vec<N>& x) {
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < N; ++j) s += A(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

template <std::size_t N>
Vec<N> operator*(const Mat<N>& A, const Vec<N>& x) {
    return matvec(A, x);
}

template <std::size_t N>
Mat<N> adjoint(const Mat<N>& A) {
    Mat<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(A(j, i));
    return r;
}

template <std::size_t N>
cplx trace(const Mat<N>& A) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += A(i, i);
    return s;
}

inline cplx det2(const CMat2& A) {
    return A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
}

cplx det4(const CMat4& A);

template <std::size_t N>
double frobenius_norm(const Mat<N>& A) {
    double s = 0.0;
    for (const cplx& z : A.a) s += std::norm(z);
    return std::sqrt(s);
}

// Euclidean norm and conjugate-linear-in-first-argument inner product.
template <std::size_t N>
double norm(const Vec<N>& x) {
    double s = 0.0;
    for (const cplx& z : x.v) s += std::norm(z);
    return std::sqrt(s);
}

template <std::size_t N>
cplx dot(const Vec<N>& a, const Vec<N>& b) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

template <std::size_t N>
double distance(const Vec<N>& a, const Vec<N>& b) {
    return norm(a - b);
}

template <std::size_t N>
struct EigenSystem {
    std::array<double, N> values;  // ascending
    Mat<N> vectors;                // column j pairs with values[j]
};

// Cyclic Jacobi on the Hermitian part of M. Rejects inputs with
// ||M - M^H||_F > 1e-10, iterates until every off-diagonal magnitude is
// below 1e-13. Eigenvalue sums match the trace to ~1e-14 at these sizes.
template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Mat<N>& M);

extern template EigenSystem<2> hermitian_eigensystem<2>(const Mat<2>&);
extern template EigenSystem<4> hermitian_eigensystem<4>(const Mat<4>&);

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Mat<N>& M) {
    return hermitian_eigensystem(M).values;
}

// Largest singular value, computed as sqrt(max eig of M^H M).
template <std::size_t N>
double spectral_norm(const Mat<N>& M) {
    const auto ev = hermitian_eigenvalues(adjoint(M) * M);
    const double top = ev[N - 1];
    return std::sqrt(top > 0.0 ? top : 0.0);
}

// Hermitian PSD square root via the eigensystem; negative roundoff
// eigenvalues are clamped to zero.
CMat4 psd_sqrt(const CMat4& A);

// z/|z| for z away from zero, 1 otherwise. Magnitudes at or below 1e-14
// count as zero; below that the direction is numerically meaningless.
inline cplx unit_direction(cplx z) {
    const double m = std::abs(z);
    if (m <= 1e-14) return cplx(1.0, 0.0);
    return z / m;
}

CVec4 kron_vec(const CVec2& a, const CVec2& b);
CMat4 kron_mat(const CMat2& A, const CMat2& B);

}  // namespace qsphere
