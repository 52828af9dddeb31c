#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qsphere/charts.hpp"
#include "qsphere/linalg.hpp"
#include "qsphere/qubit_group.hpp"

// Density matrices, partial traces and entropies. Subsystem 0 is the left
// (most significant) tensor factor under the basis ordering
// e_{2i+j} = e_i (x) e_j; partial_trace(Q, i) returns the reduced state of
// subsystem i.

namespace qsphere {

struct InvalidDensity : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidWeights : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hermitian, trace 1, eigenvalues >= -1e-10; validated at construction.
class DensityMatrix2 {
  public:
    explicit DensityMatrix2(const CMat2& m);
    const CMat2& mat() const { return m_; }

  private:
    CMat2 m_;
};

class DensityMatrix4 {
  public:
    explicit DensityMatrix4(const CMat4& m);
    const CMat4& mat() const { return m_; }

  private:
    CMat4 m_;
};

// Convex combination, kept in decomposed form so per-component structure
// (e.g. every component separable) stays checkable.
struct MixedState {
    std::vector<std::pair<double, TwoQubitState>> components;
};

// Outer products x x^H: rank-1 projections.
DensityMatrix4 pure_density(const TwoQubitState& x);
DensityMatrix2 pure_density(const Qubit& z);

// Entrywise marginals: subsystem 0 keeps index pairs (2i+k, 2j+k), subsystem
// 1 keeps (i+2k, j+2k).
DensityMatrix2 partial_trace(const DensityMatrix4& Q, int subsystem);

// (lambda0, lambda1) = ((1 -+ s)/2) with s = sqrt(1 - 4|t|^2): the shared
// spectrum of both marginals of the pure state x x^H.
std::pair<double, double> lambda_pair(const TwoQubitState& x);

// -sum lambda_j log2 lambda_j with 0 log 0 = 0; eigenvalues clamped to [0,1]
// (clamp width 1e-10) to absorb roundoff.
double von_neumann_entropy(const DensityMatrix2& m);
double von_neumann_entropy(const DensityMatrix4& m);

double reduced_entropy(const DensityMatrix4& m, int subsystem);

// The closed form of the reduced entropy of a pure state:
//   -((1-s)log2(1-s) + (1+s)log2(1+s))/2 + 1.
double entropy_closed_form(const TwoQubitState& x);

DensityMatrix4 mix(const MixedState& components);

// Purity via the trace criterion: |Tr(m^2) - 1| < tol.
bool is_pure(const DensityMatrix4& m, double tol = 1e-9);

}  // namespace qsphere
