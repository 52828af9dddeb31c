#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsphere/linalg.hpp"

// The group structure carried by unit vectors in C^2: each qubit maps to a
// special-unitary 2x2 matrix (first column = the qubit, second column forced
// by unitarity), and the matrix product pulls back to the star() operation on
// coordinates. Powers, element orders, orbits and the gate-commutation
// dichotomy all live here.

namespace qsphere {

struct ZeroVector : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSpecialUnitary : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotUnitary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Qubit {
  public:
    // Strict: rejects vectors whose norm deviates from 1 by more than 1e-12.
    explicit Qubit(const CVec2& v);
    Qubit(cplx x0, cplx x1) : Qubit(CVec2{{x0, x1}}) {}

    // Rescales to unit norm; rejects only the (numerically) zero vector.
    static Qubit normalized(const CVec2& v);

    const CVec2& vec() const { return v_; }
    cplx operator[](std::size_t i) const { return v_[i]; }

  private:
    struct Trusted {};
    Qubit(const CVec2& v, Trusted) : v_(v) {}
    CVec2 v_;
};

// Unitary with det = 1 within 1e-10; construction validates.
class SU2Matrix {
  public:
    explicit SU2Matrix(const CMat2& m);
    const CMat2& mat() const { return m_; }

  private:
    CMat2 m_;
};

// Unitary with unconstrained determinant; construction validates.
class Gate2 {
  public:
    explicit Gate2(const CMat2& m);
    const CMat2& mat() const { return m_; }

  private:
    CMat2 m_;
};

// x -> [[x0, -conj(x1)], [x1, conj(x0)]].
SU2Matrix su2_from_qubit(const Qubit& x);

// First column of M; inverse of su2_from_qubit.
Qubit qubit_from_su2(const SU2Matrix& M);

// The group product pulled back to coordinates:
//   (a0*b0 - conj(a1)*b1, a1*b0 + conj(a0)*b1),
// renormalized so iterated products cannot drift off the sphere.
Qubit star(const Qubit& a, const Qubit& b);

Qubit star_inverse(const Qubit& x);

// Iterated star; negative n iterates the inverse. Renormalizes each step.
Qubit star_power(const Qubit& x, long long n);

// Smallest n in [1, max_n] with ||x^n - (1,0)|| < tol, if any.
std::optional<long long> order(const Qubit& x, long long max_n = 1'000'000,
                               double tol = 1e-9);

// (x^1, x^2, ..., x^count).
std::vector<Qubit> orbit(const Qubit& x, long long count);

struct CommutationCheck {
    bool commutes;
    double max_deviation;
};

// Max over sampled qubits x of ||embed(U x) - U * embed(x)||_F. Zero exactly
// when det U = 1; unitaries with other determinants always separate.
CommutationCheck gate_commutes_with_embedding(const Gate2& U, int samples,
                                              double tol, std::uint64_t seed);

}  // namespace qsphere
