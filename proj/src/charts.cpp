#include "qsphere/charts.hpp"

#include <cmath>

namespace qsphere {

namespace {

void require_chart(const TwoQubitState& x, int k) {
    if (k < 0 || k > 3) throw IndexOutOfRange("chart index must be in 0..3");
    if (std::abs(x[static_cast<std::size_t>(k)]) <= 1e-12)
        throw NotInChart("state coordinate " + std::to_string(k) + " vanishes");
}

// xi(z)^2 and xi(z)^-2, where xi is unit_direction.
cplx dir_sq(cplx z) {
    const cplx d = unit_direction(z);
    return d * d;
}

cplx dir_sq_inv(cplx z) {
    const cplx d = std::conj(unit_direction(z));
    return d * d;
}

double entropy_from_s(double s) {
    auto plog2 = [](double w) { return w > 0.0 ? w * std::log2(w) : 0.0; };
    return -0.5 * (plog2(1.0 - s) + plog2(1.0 + s)) + 1.0;
}

}  // namespace

TwoQubitState::TwoQubitState(const CVec4& v) : v_(v) {
    const double n = norm(v);
    if (n <= 1e-12) throw ZeroVector("zero vector is not a state");
    if (std::abs(n - 1.0) > 1e-12)
        throw std::invalid_argument("state norm deviates from 1 by more than 1e-12");
}

TwoQubitState TwoQubitState::normalized(const CVec4& v) {
    const double n = norm(v);
    if (n <= 1e-12) throw ZeroVector("cannot normalize a zero vector");
    CVec4 w;
    for (std::size_t i = 0; i < 4; ++i) w[i] = v[i] / n;
    return TwoQubitState(w, Trusted{});
}

cplx t_invariant(const TwoQubitState& x) {
    return t_invariant(x.vec());
}

cplx t_invariant(const CVec4& v) {
    return v[0] * v[3] - v[1] * v[2];
}

double s_value(const TwoQubitState& x) {
    const double t2 = std::norm(t_invariant(x));
    const double inner = 1.0 - 4.0 * t2;
    return std::sqrt(inner > 0.0 ? inner : 0.0);
}

bool is_separable(const TwoQubitState& x, double tol) {
    return std::abs(t_invariant(x)) < tol;
}

std::set<int> charts_containing(const TwoQubitState& x, double tol) {
    std::set<int> out;
    for (int k = 0; k < 4; ++k)
        if (std::abs(x[static_cast<std::size_t>(k)]) > tol) out.insert(k);
    return out;
}

int canonical_chart(const TwoQubitState& x) {
    int best = 0;
    double mag = std::abs(x[0]);
    for (int k = 1; k < 4; ++k) {
        const double m = std::abs(x[static_cast<std::size_t>(k)]);
        if (m > mag) {
            mag = m;
            best = k;
        }
    }
    return best;
}

TensorSplit tensor_split(const TwoQubitState& x, int k, cplx u) {
    require_chart(x, k);
    if (!is_separable(x, 1e-8))
        throw NotSeparable("|t| = " + std::to_string(std::abs(t_invariant(x))) +
                           " exceeds the splitting tolerance 1e-8");

    const cplx x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3];
    const double r02 = std::sqrt(std::norm(x0) + std::norm(x2));
    const double r13 = std::sqrt(std::norm(x1) + std::norm(x3));

    CVec2 c0, c1;
    switch (k) {
        case 0:
            c0 = CVec2{{x0 / r02, x2 / r02}};
            c1 = CVec2{{r02, r02 * (x1 / x0)}};
            break;
        case 1:
            c0 = CVec2{{x1 / r13, x3 / r13}};
            c1 = CVec2{{r13 * (x0 / x1), r13}};
            break;
        case 2:
            c0 = CVec2{{x0 / r02, x2 / r02}};
            c1 = CVec2{{r02, r02 * (x3 / x2)}};
            break;
        default:
            c0 = CVec2{{x1 / r13, x3 / r13}};
            c1 = CVec2{{r13 * (x2 / x3), r13}};
            break;
    }

    const cplx g = unit_direction(u);
    const Qubit q0 = Qubit::normalized(CVec2{{std::conj(g) * c0[0], std::conj(g) * c0[1]}});
    const Qubit q1 = Qubit::normalized(CVec2{{g * c1[0], g * c1[1]}});
    return TensorSplit{q0, q1, k, g};
}

ChartEmbedding chart_embedding(const TwoQubitState& x, int k, cplx u) {
    require_chart(x, k);
    const cplx x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3];
    const cplx g = unit_direction(u);
    const cplx u2 = g * g;
    const cplx ui2 = std::conj(g) * std::conj(g);

    CMat4 m;
    m(0, 0) = x0;
    m(1, 0) = x1;
    m(2, 0) = x2;
    m(3, 0) = x3;
    m(0, 3) = std::conj(x3);
    m(1, 3) = -std::conj(x2);
    m(2, 3) = -std::conj(x1);
    m(3, 3) = std::conj(x0);

    switch (k) {
        case 0:
            m(0, 1) = -ui2 * dir_sq(x0) * std::conj(x1);
            m(1, 1) = ui2 * x0;
            m(2, 1) = -ui2 * dir_sq_inv(x1 / x0) * x3;
            m(3, 1) = ui2 * x2;
            m(0, 2) = -u2 * std::conj(x2);
            m(1, 2) = -u2 * dir_sq_inv(x2) * x3;
            m(2, 2) = u2 * std::conj(x0);
            m(3, 2) = u2 * dir_sq_inv(x0) * x1;
            break;
        case 1:
            m(0, 1) = -ui2 * x1;
            m(1, 1) = ui2 * dir_sq(x1) * std::conj(x0);
            m(2, 1) = -ui2 * x3;
            m(3, 1) = ui2 * dir_sq_inv(x0 / x1) * x2;
            m(0, 2) = -u2 * dir_sq_inv(x3) * x2;
            m(1, 2) = -u2 * std::conj(x3);
            m(2, 2) = u2 * dir_sq_inv(x1) * x0;
            m(3, 2) = u2 * std::conj(x1);
            break;
        case 2:
            m(0, 1) = -ui2 * dir_sq_inv(x3 / x2) * x1;
            m(1, 1) = ui2 * x0;
            m(2, 1) = -ui2 * dir_sq(x2) * std::conj(x3);
            m(3, 1) = ui2 * x2;
            m(0, 2) = -u2 * std::conj(x2);
            m(1, 2) = -u2 * dir_sq_inv(x2) * x3;
            m(2, 2) = u2 * std::conj(x0);
            m(3, 2) = u2 * dir_sq_inv(x0) * x1;
            break;
        default:
            m(0, 1) = -ui2 * x1;
            m(1, 1) = ui2 * dir_sq_inv(x2 / x3) * x0;
            m(2, 1) = -ui2 * x3;
            m(3, 1) = ui2 * dir_sq(x3) * std::conj(x2);
            m(0, 2) = -u2 * dir_sq_inv(x3) * x2;
            m(1, 2) = -u2 * std::conj(x3);
            m(2, 2) = u2 * dir_sq_inv(x1) * x0;
            m(3, 2) = u2 * std::conj(x1);
            break;
    }
    return ChartEmbedding{m, k, g};
}

double nu(const TwoQubitState& x, int k, cplx u) {
    return spectral_norm(chart_embedding(x, k, u).matrix) - 1.0;
}

double nu_closed_form(const TwoQubitState& x) {
    return std::sqrt(1.0 + 2.0 * std::abs(t_invariant(x))) - 1.0;
}

ZMatrixResult z_matrix(const TwoQubitState& x, int k, cplx u) {
    require_chart(x, k);
    const cplx t = t_invariant(x);
    const double tabs = std::abs(t);
    if (tabs >= 0.5 - 1e-8)
        throw BellSingularity("correction matrix is singular at |t| = 1/2 (got " +
                              std::to_string(tabs) + ")");

    // C(t) is the identity outside the {0,3} block [[1, 2*conj(t)],[2t, 1]].
    const double d = 1.0 - 4.0 * tabs * tabs;
    CMat4 cinv = CMat4::identity();
    cinv(0, 0) = 1.0 / d;
    cinv(3, 3) = 1.0 / d;
    cinv(0, 3) = -2.0 * std::conj(t) / d;
    cinv(3, 0) = -2.0 * t / d;

    const CMat4 phi = chart_embedding(x, k, u).matrix;
    const CMat4 gram = adjoint(phi) * phi;
    const CMat4 z = gram * cinv;

    // Z is similar to sqrt(gram) * C^-1 * sqrt(gram), which is Hermitian, so
    // the spectrum (always real) comes out of the usual eigensolver.
    const CMat4 root = psd_sqrt(gram);
    const CMat4 sym = root * cinv * root;
    return ZMatrixResult{z, hermitian_eigenvalues(sym)};
}

CVec4 local_transform(const TwoQubitState& x, const CMat2& A, Side side) {
    const CMat2 eye = CMat2::identity();
    const CMat4 op = side == Side::left ? kron_mat(A, eye) : kron_mat(eye, A);
    return op * x.vec();
}

TwoQubitState bell_vector(int i) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (i) {
        case 0: return TwoQubitState(r, 0.0, 0.0, r);
        case 1: return TwoQubitState(r, 0.0, 0.0, -r);
        case 2: return TwoQubitState(0.0, r, r, 0.0);
        case 3: return TwoQubitState(0.0, r, -r, 0.0);
        default: throw IndexOutOfRange("Bell index must be in 0..3");
    }
}

TwoQubitState canonical_vector(int i) {
    if (i < 0 || i > 3) throw IndexOutOfRange("basis index must be in 0..3");
    CVec4 v;
    v[static_cast<std::size_t>(i)] = 1.0;
    return TwoQubitState(v);
}

TwoQubitState x_p_family(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw IndexOutOfRange("p must be in [0,1]");
    return TwoQubitState::normalized(CVec4{{std::sqrt(p), 0.0, 0.0, std::sqrt(1.0 - p)}});
}

cplx product_coincidence_gauge(const Qubit& c1, int k) {
    if (k < 0 || k > 3) throw IndexOutOfRange("chart index must be in 0..3");
    return unit_direction(c1[static_cast<std::size_t>(k % 2)]);
}

EntanglementReport report(const TwoQubitState& x) {
    const double tabs = std::abs(t_invariant(x));
    const double s = s_value(x);
    EntanglementReport r;
    r.nu = nu_closed_form(x);
    r.nu_scaled = 2.0 / (std::sqrt(2.0) - 1.0) * r.nu;
    r.t_abs = tabs;
    r.s = s;
    r.lambda0 = 0.5 * (1.0 - s);
    r.lambda1 = 0.5 * (1.0 + s);
    r.entropy = entropy_from_s(s);
    r.separable = tabs < 1e-10;
    return r;
}

}  // namespace qsphere
