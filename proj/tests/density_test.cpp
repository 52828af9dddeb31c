#include <cmath>
#include <complex>

#include "doctest.h"
#include "qsphere/charts.hpp"
#include "qsphere/density.hpp"
#include "qsphere/linalg.hpp"
#include "qsphere/qubit_group.hpp"
#include "qsphere/random.hpp"
#include "test_util.hpp"

using namespace qsphere;
using testutil::max_entry_diff;
using doctest::Approx;

namespace {

double binary_entropy(double p) {
    auto plog2 = [](double w) { return w > 0.0 ? w * std::log2(w) : 0.0; };
    return -plog2(p) - plog2(1.0 - p);
}

CMat2 expected_left_marginal(const TwoQubitState& x) {
    CMat2 r;
    r(0, 0) = std::norm(x[0]) + std::norm(x[1]);
    r(0, 1) = x[0] * std::conj(x[2]) + x[1] * std::conj(x[3]);
    r(1, 0) = x[2] * std::conj(x[0]) + x[3] * std::conj(x[1]);
    r(1, 1) = std::norm(x[2]) + std::norm(x[3]);
    return r;
}

CMat2 expected_right_marginal(const TwoQubitState& x) {
    CMat2 r;
    r(0, 0) = std::norm(x[0]) + std::norm(x[2]);
    r(0, 1) = x[0] * std::conj(x[1]) + x[2] * std::conj(x[3]);
    r(1, 0) = x[1] * std::conj(x[0]) + x[3] * std::conj(x[2]);
    r(1, 1) = std::norm(x[1]) + std::norm(x[3]);
    return r;
}

}  // namespace

TEST_CASE("pure densities are rank-one projections") {
    CMat4 m = pure_density(canonical_vector(0)).mat();
    CHECK(std::abs(m(0, 0) - cplx(1, 0)) < 1e-15);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i + j > 0) CHECK(std::abs(m(i, j)) < 1e-15);

    m = pure_density(bell_vector(0)).mat();
    for (std::size_t i : {std::size_t(0), std::size_t(3)})
        for (std::size_t j : {std::size_t(0), std::size_t(3)})
            CHECK(std::abs(m(i, j) - cplx(0.5, 0)) < 1e-15);
    CHECK(std::abs(m(1, 1)) < 1e-15);

    Sampler rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        TwoQubitState x = rng.state();
        CMat4 q = pure_density(x).mat();
        CHECK(max_entry_diff(q * q, q) < 1e-13);  // idempotent
        CHECK(std::abs(trace(q) - cplx(1, 0)) < 1e-14);
        CHECK(is_pure(DensityMatrix4(q)));
    }
}

TEST_CASE("density of a product state factors through the kronecker product") {
    Sampler rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        Qubit a = rng.qubit(), b = rng.qubit();
        TwoQubitState x = TwoQubitState::normalized(kron_vec(a.vec(), b.vec()));
        CMat4 lhs = pure_density(x).mat();
        CMat4 rhs = kron_mat(pure_density(a).mat(), pure_density(b).mat());
        CHECK(max_entry_diff(lhs, rhs) < 1e-13);

        // marginals recover the factors
        CHECK(max_entry_diff(partial_trace(pure_density(x), 0).mat(),
                             pure_density(a).mat()) < 1e-13);
        CHECK(max_entry_diff(partial_trace(pure_density(x), 1).mat(),
                             pure_density(b).mat()) < 1e-13);
    }
}

TEST_CASE("partial traces match the closed-form quadratic expressions") {
    Sampler rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        TwoQubitState x = rng.state();
        DensityMatrix4 q = pure_density(x);
        CHECK(max_entry_diff(partial_trace(q, 0).mat(), expected_left_marginal(x)) < 1e-13);
        CHECK(max_entry_diff(partial_trace(q, 1).mat(), expected_right_marginal(x)) < 1e-13);
    }
    CHECK_THROWS_AS(partial_trace(pure_density(bell_vector(0)), 2), IndexOutOfRange);
}

TEST_CASE("interpolating family marginals are diagonal") {
    for (double p : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
        DensityMatrix4 q = pure_density(x_p_family(p));
        for (int sub : {0, 1}) {
            CMat2 r = partial_trace(q, sub).mat();
            CHECK(std::abs(r(0, 0) - cplx(p, 0)) < 1e-13);
            CHECK(std::abs(r(1, 1) - cplx(1.0 - p, 0)) < 1e-13);
            CHECK(std::abs(r(0, 1)) < 1e-13);
            CHECK(std::abs(r(1, 0)) < 1e-13);
        }
    }
}

TEST_CASE("bell state marginals are maximally mixed") {
    CMat2 half = cplx(0.5, 0) * CMat2::identity();
    for (int i = 0; i < 4; ++i)
        for (int sub : {0, 1})
            CHECK(max_entry_diff(partial_trace(pure_density(bell_vector(i)), sub).mat(),
                                 half) < 1e-13);
}

TEST_CASE("marginal spectra come from the t invariant") {
    Sampler rng(54);
    for (int trial = 0; trial < 200; ++trial) {
        TwoQubitState x = rng.state();
        auto [l0, l1] = lambda_pair(x);
        CHECK(l0 >= -1e-12);
        CHECK(l1 <= 1.0 + 1e-12);
        CHECK(l0 + l1 == Approx(1.0).epsilon(1e-13));

        DensityMatrix4 q = pure_density(x);
        for (int sub : {0, 1}) {
            auto ev = hermitian_eigenvalues(partial_trace(q, sub).mat());
            CHECK(std::abs(ev[0] - l0) < 1e-10);
            CHECK(std::abs(ev[1] - l1) < 1e-10);
        }
    }
}

TEST_CASE("pure four-level density has spectrum {0,0,0,1} with the state on top") {
    for (double p : {0.1, 0.5, 0.9}) {
        TwoQubitState x = x_p_family(p);
        auto es = hermitian_eigensystem(pure_density(x).mat());
        CHECK(std::abs(es.values[0]) < 1e-10);
        CHECK(std::abs(es.values[1]) < 1e-10);
        CHECK(std::abs(es.values[2]) < 1e-10);
        CHECK(std::abs(es.values[3] - 1.0) < 1e-10);

        CVec4 top{es.vectors(0, 3), es.vectors(1, 3), es.vectors(2, 3), es.vectors(3, 3)};
        CHECK(testutil::phase_free_distance(top, x.vec()) < 1e-8);

        // the orthogonal direction in the same coordinate plane is annihilated
        CVec4 y{cplx(std::sqrt(1.0 - p), 0), cplx(0, 0), cplx(0, 0), cplx(-std::sqrt(p), 0)};
        CHECK(norm(pure_density(x).mat() * y) < 1e-10);
    }
}

TEST_CASE("entropy fixtures") {
    for (int i = 0; i < 4; ++i) {
        CHECK(reduced_entropy(pure_density(canonical_vector(i)), 0) < 1e-12);
        CHECK(reduced_entropy(pure_density(bell_vector(i)), 0) ==
              Approx(1.0).epsilon(1e-12));
        CHECK(von_neumann_entropy(pure_density(bell_vector(i))) < 1e-9);
    }

    CHECK(von_neumann_entropy(DensityMatrix2(cplx(0.5, 0) * CMat2::identity())) ==
          Approx(1.0).epsilon(1e-13));
    CHECK(von_neumann_entropy(DensityMatrix4(cplx(0.25, 0) * CMat4::identity())) ==
          Approx(2.0).epsilon(1e-13));

    for (double p : {0.05, 0.2, 0.25, 0.5, 0.8}) {
        CHECK(entropy_closed_form(x_p_family(p)) == Approx(binary_entropy(p)).epsilon(1e-12));
    }
    CHECK(entropy_closed_form(x_p_family(0.25)) == Approx(0.8112781244591328).epsilon(1e-13));
}

TEST_CASE("closed-form entropy equals both reduced entropies") {
    Sampler rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        TwoQubitState x = rng.state();
        DensityMatrix4 q = pure_density(x);
        double e = entropy_closed_form(x);
        CHECK(std::abs(reduced_entropy(q, 0) - e) < 1e-10);
        CHECK(std::abs(reduced_entropy(q, 1) - e) < 1e-10);
        CHECK(std::abs(von_neumann_entropy(q)) < 1e-9);
        CHECK(e >= -1e-12);
        CHECK(e <= 1.0 + 1e-12);
    }
}

TEST_CASE("mixtures accumulate convexly and partial trace is linear") {
    MixedState ms;
    ms.components = {{0.5, canonical_vector(0)}, {0.5, canonical_vector(3)}};
    DensityMatrix4 m = mix(ms);
    CHECK(std::abs(m.mat()(0, 0) - cplx(0.5, 0)) < 1e-15);
    CHECK(std::abs(m.mat()(3, 3) - cplx(0.5, 0)) < 1e-15);
    CHECK(std::abs(m.mat()(0, 3)) < 1e-15);
    CHECK(std::abs(trace(m.mat() * m.mat()) - cplx(0.5, 0)) < 1e-14);
    CHECK(!is_pure(m));
    CHECK(von_neumann_entropy(m) == Approx(1.0).epsilon(1e-12));

    Sampler rng(56);
    MixedState r;
    r.components = {{0.2, rng.state()}, {0.3, rng.state()}, {0.5, rng.state()}};
    DensityMatrix4 rm = mix(r);
    for (int sub : {0, 1}) {
        CMat2 lhs = partial_trace(rm, sub).mat();
        CMat2 acc;
        for (const auto& [w, x] : r.components)
            acc = acc + cplx(w, 0) * partial_trace(pure_density(x), sub).mat();
        CHECK(max_entry_diff(lhs, acc) < 1e-12);
    }

    MixedState bad;
    bad.components = {{0.7, canonical_vector(0)}, {0.7, canonical_vector(3)}};
    CHECK_THROWS_AS(mix(bad), InvalidWeights);
    bad.components = {{-0.5, canonical_vector(0)}, {1.5, canonical_vector(3)}};
    CHECK_THROWS_AS(mix(bad), InvalidWeights);
}

TEST_CASE("density validation rejects malformed matrices") {
    CMat2 nonherm;
    nonherm(0, 0) = cplx(0.5, 0);
    nonherm(1, 1) = cplx(0.5, 0);
    nonherm(0, 1) = cplx(0.3, 0);  // (1,0) left at zero
    CHECK_THROWS_AS(DensityMatrix2{nonherm}, InvalidDensity);

    CMat2 offtrace = cplx(0.7, 0) * CMat2::identity();
    CHECK_THROWS_AS(DensityMatrix2{offtrace}, InvalidDensity);

    CMat2 negative;
    negative(0, 0) = cplx(1.5, 0);
    negative(1, 1) = cplx(-0.5, 0);
    CHECK_THROWS_AS(DensityMatrix2{negative}, InvalidDensity);
}
