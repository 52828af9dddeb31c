#pragma once

#include <set>
#include <stdexcept>

#include "qsphere/linalg.hpp"
#include "qsphere/qubit_group.hpp"

// Charts on the unit sphere of C^4 and the chart-wise 4x4 embeddings.
// Chart k is the open set {x : x_k != 0}. On each chart a gauge phase u picks
// one member of a family of embeddings; column 0 is always the state itself.
// The invariant t(x) = x0*x3 - x1*x2 drives separability, the entanglement
// measure and the entropy formulas.

namespace qsphere {

struct NotInChart : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSeparable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BellSingularity : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

class TwoQubitState {
  public:
    // Strict: rejects vectors whose norm deviates from 1 by more than 1e-12.
    explicit TwoQubitState(const CVec4& v);
    TwoQubitState(cplx x0, cplx x1, cplx x2, cplx x3)
        : TwoQubitState(CVec4{{x0, x1, x2, x3}}) {}

    static TwoQubitState normalized(const CVec4& v);

    const CVec4& vec() const { return v_; }
    cplx operator[](std::size_t i) const { return v_[i]; }

  private:
    struct Trusted {};
    TwoQubitState(const CVec4& v, Trusted) : v_(v) {}
    CVec4 v_;
};

struct ChartEmbedding {
    CMat4 matrix;
    int chart;
    cplx gauge;
};

struct TensorSplit {
    Qubit c0;
    Qubit c1;
    int chart;
    cplx gauge;
};

struct EntanglementReport {
    double nu;
    double nu_scaled;
    double t_abs;
    double s;
    double lambda0;
    double lambda1;
    double entropy;
    bool separable;
};

struct ZMatrixResult {
    CMat4 z;
    std::array<double, 4> spectrum;  // ascending
};

// t(x) = x0*x3 - x1*x2. |t| <= 1/2 for every unit vector. The raw overload
// exists because t scales by det(A) under one-sided A (x) I or I (x) A maps,
// which produce unnormalized vectors.
cplx t_invariant(const TwoQubitState& x);
cplx t_invariant(const CVec4& v);

// s(x) = sqrt(1 - 4|t|^2), in [0, 1].
double s_value(const TwoQubitState& x);

// |t| < tol. Unit product states satisfy t = 0 exactly (up to roundoff).
bool is_separable(const TwoQubitState& x, double tol = 1e-10);

std::set<int> charts_containing(const TwoQubitState& x, double tol = 1e-12);

// argmax_k |x_k|, ties to the smallest index.
int canonical_chart(const TwoQubitState& x);

// Factor a separable state as c0 (x) c1 using the chart-k formulas, then
// apply the gauge: (u^-1 c0, u c1). Requires |x_k| > 1e-12 and |t| < 1e-8.
TensorSplit tensor_split(const TwoQubitState& x, int k, cplx u = 1.0);

// The chart-k embedding with gauge u. Column 0 equals x. Unitary exactly on
// separable states.
ChartEmbedding chart_embedding(const TwoQubitState& x, int k, cplx u = 1.0);

// spectral_norm(chart_embedding(x,k,u).matrix) - 1. Zero iff x is separable.
double nu(const TwoQubitState& x, int k, cplx u = 1.0);

// sqrt(1 + 2|t(x)|) - 1. Chart-free. Coincides with nu() on separable states
// and on states with x1 = x2 = 0; for generic entangled states it is a strict
// lower bound on nu(), not an identity (see the charts test suite).
double nu_closed_form(const TwoQubitState& x);

// Z = Phi^H Phi * C(t)^-1, where C(t) is the identity except for the
// {0,3}x{0,3} block [[1, 2*conj(t)], [2t, 1]]. C is singular at |t| = 1/2, so
// states with |t| >= 1/2 - 1e-8 are refused. Z is similar to the Hermitian
// matrix sqrt(A) C^-1 sqrt(A) with A = Phi^H Phi, which is how the (real)
// spectrum is computed.
ZMatrixResult z_matrix(const TwoQubitState& x, int k, cplx u = 1.0);

enum class Side { left, right };

// (A (x) I) x or (I (x) A) x, as a raw, unnormalized 4-vector.
CVec4 local_transform(const TwoQubitState& x, const CMat2& A, Side side);

TwoQubitState bell_vector(int i);
TwoQubitState canonical_vector(int i);

// (sqrt(p), 0, 0, sqrt(1-p)).
TwoQubitState x_p_family(double p);

// The gauge under which chart_embedding(c0 (x) c1, k, gauge) equals
// kron_mat(su2(c0), su2(c1)) entrywise: the unit direction of the c1
// component consumed by the chart's anchor coordinate x_k, i.e. c1[k mod 2].
cplx product_coincidence_gauge(const Qubit& c1, int k);

// Closed-form bundle: nu from nu_closed_form, lambdas and entropy from s(x).
EntanglementReport report(const TwoQubitState& x);

}  // namespace qsphere
