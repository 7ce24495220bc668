#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcat/entmetrics.hpp"
#include "qcat/linalg.hpp"
#include "qcat/qstate.hpp"
#include "test_helpers.hpp"

using namespace qcat;
using namespace qcat::test;

TEST_CASE("density-matrix construction enforces the invariants") {
    ComplexMatrix bad = ComplexMatrix::identity(2); // trace 2
    CHECK_THROWS_AS(DensityMatrix(bad, {2}), std::invalid_argument);
    ComplexMatrix nh(2, 2);
    nh(0, 0) = 0.5;
    nh(1, 1) = 0.5;
    nh(0, 1) = cdouble{0.3, 0.1};
    nh(1, 0) = cdouble{0.3, 0.1}; // not the conjugate
    CHECK_THROWS_AS(DensityMatrix(nh, {2}), std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diag(std::vector<double>{0.5, 0.5}), Dims{3}),
                    std::invalid_argument);
}

TEST_CASE("partial trace of the maximally entangled state is maximally mixed") {
    DensityMatrix rho = from_pure(max_entangled_state(2, 2));
    DensityMatrix red = partial_trace(rho, {0});
    CHECK(max_abs_diff(red.mat, DensityMatrix::maximally_mixed(2).mat) <= 1e-14);
}

TEST_CASE("partial trace of a product state returns the factor") {
    Rng rng(3);
    DensityMatrix a = random_density_matrix({2}, rng);
    DensityMatrix b = random_density_matrix({3}, rng);
    DensityMatrix prod = kron(a, b);
    CHECK(max_abs_diff(partial_trace(prod, {0}).mat, a.mat) <= 1e-13);
    CHECK(max_abs_diff(partial_trace(prod, {1}).mat, b.mat) <= 1e-13);
}

TEST_CASE("partial trace of a random 4-qubit state stays a valid state") {
    Rng rng(5);
    PureState psi = haar_random_pure(16, rng);
    DensityMatrix rho(ComplexMatrix::outer(psi.vec, psi.vec), {2, 2, 2, 2});
    DensityMatrix red = partial_trace(rho, {2});
    CHECK(std::abs(red.mat.trace() - cdouble{1.0, 0.0}) <= 1e-12);
    red.full_validate();
    CHECK_THROWS_AS((void)partial_trace(rho, {4}), std::invalid_argument);
}

TEST_CASE("partial trace composed over disjoint sets equals one shot") {
    Rng rng(7);
    DensityMatrix rho = random_density_matrix({2, 2, 2, 2}, rng);
    DensityMatrix a = partial_trace(rho, {0, 3});
    DensityMatrix b = partial_trace(partial_trace(rho, {0, 1, 3}), {0, 2});
    CHECK(max_abs_diff(a.mat, b.mat) <= 1e-12);
}

TEST_CASE("schmidt spectrum of the Bell state") {
    SchmidtSpectrum bell = schmidt(max_entangled_state(2, 2), {0});
    CHECK(bell.lambdas[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bell.lambdas[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("schmidt of a product basis state is (1, 0)") {
    std::vector<cdouble> v(4, cdouble{0.0, 0.0});
    v[0] = 1.0;
    PureState psi(std::move(v), {2, 2});
    SchmidtSpectrum s = schmidt(psi, {0});
    CHECK(s.lambdas[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(s.lambdas[1]) <= 1e-13);
}

TEST_CASE("two singlet copies have uniform rank-4 Schmidt spectrum") {
    std::vector<cdouble> v(9, cdouble{0.0, 0.0});
    v[0] = v[4] = 1.0 / std::sqrt(2.0);
    PureState psi(std::move(v), {3, 3});
    PureState two = kron(psi, psi); // A1 B1 A2 B2
    SchmidtSpectrum s = schmidt(two, {0, 2});
    for (int i = 0; i < 4; ++i) CHECK(s.lambdas[i] == doctest::Approx(0.25).epsilon(1e-12));
    for (std::size_t i = 4; i < s.size(); ++i) CHECK(std::abs(s.lambdas[i]) <= 1e-12);
}

TEST_CASE("schmidt spectrum equals the reduced-state spectrum") {
    Rng rng(11);
    PureState psi = haar_random_pure(12, rng);
    PureState shaped(psi.vec, {3, 4});
    SchmidtSpectrum s = schmidt(shaped, {0});
    DensityMatrix red = partial_trace(from_pure(shaped), {0});
    auto w = linalg::eigvals_hermitian(red.mat);
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(s.lambdas[i] == doctest::Approx(w[i]).epsilon(1e-10));
}

TEST_CASE("entropy of pure and maximally mixed states") {
    DensityMatrix pure = from_pure(PureState::basis_state(4, 2));
    CHECK(std::abs(von_neumann_entropy(pure)) <= 1e-12);
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2), true) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("the uniform-tail state at the binary-entropy root has entropy log 2") {
    const double x = 0.7729078047806517;
    DensityMatrix rho(ComplexMatrix::diag(std::vector<double>{x, (1 - x) / 2, (1 - x) / 2}), {3});
    CHECK(von_neumann_entropy(rho) == doctest::Approx(std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("entropy is invariant under unitary conjugation") {
    Rng rng(13);
    DensityMatrix rho = random_density_matrix({5}, rng);
    ComplexMatrix u = haar_random_unitary(5, rng);
    ComplexMatrix rot = u * rho.mat * u.adjoint();
    DensityMatrix sigma((rot + rot.adjoint()) * cdouble{0.5, 0.0}, {5});
    CHECK(std::abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma)) <= 1e-9);
}

TEST_CASE("trace distance basics") {
    DensityMatrix a(ComplexMatrix::diag(std::vector<double>{1.0, 0.0}), {2});
    DensityMatrix b(ComplexMatrix::diag(std::vector<double>{0.5, 0.5}), {2});
    CHECK(trace_distance(a, a) == doctest::Approx(0.0));
    CHECK(trace_distance(a, b) == doctest::Approx(0.5).epsilon(1e-12));
    DensityMatrix e0 = from_pure(PureState::basis_state(2, 0));
    DensityMatrix e1 = from_pure(PureState::basis_state(2, 1));
    CHECK(trace_distance(e0, e1) == doctest::Approx(1.0).epsilon(1e-12));
    DensityMatrix c(ComplexMatrix::diag(std::vector<double>{0.5, 0.5}), {1, 2});
    CHECK_THROWS_AS((void)trace_distance(a, c), std::invalid_argument);
}

TEST_CASE("trace distance satisfies the triangle inequality") {
    Rng rng(17);
    for (int rep = 0; rep < 4; ++rep) {
        DensityMatrix a = random_density_matrix({4}, rng);
        DensityMatrix b = random_density_matrix({4}, rng);
        DensityMatrix c = random_density_matrix({4}, rng);
        CHECK(trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-10);
    }
}

TEST_CASE("haar_random_pure determinism and the d = 1 edge") {
    PureState one = haar_random_pure(1, 42);
    CHECK(std::abs(std::abs(one.vec[0]) - 1.0) <= 1e-12);
    PureState a = haar_random_pure(6, 42);
    PureState b = haar_random_pure(6, 42);
    for (std::size_t i = 0; i < 6; ++i) CHECK(a.vec[i] == b.vec[i]);
}

TEST_CASE("Haar moment: mean |<0|psi>|^2 = 1/d") {
    const std::size_t d = 4, samples = 100000;
    double mean = 0.0, m2 = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        Rng rng(999, s);
        PureState psi = haar_random_pure(d, rng);
        double v = std::norm(psi.vec[0]);
        mean += v;
        m2 += v * v;
    }
    mean /= samples;
    m2 /= samples;
    double se = std::sqrt((m2 - mean * mean) / samples);
    CHECK(std::abs(mean - 0.25) <= 3.0 * se);
}

TEST_CASE("haar_random_unitary is unitary") {
    Rng rng(19);
    CHECK(haar_random_unitary(7, rng).is_unitary(1e-11));
}
