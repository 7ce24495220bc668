#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcat/entmetrics.hpp"
#include "qcat/kernels.hpp"
#include "test_helpers.hpp"

using namespace qcat;
using namespace qcat::test;

TEST_CASE("singlet fraction of canonical states") {
    DensityMatrix bell = from_pure(max_entangled_state(3, 3));
    CHECK(singlet_fraction(bell) == doctest::Approx(1.0).epsilon(1e-13));
    DensityMatrix mixed(DensityMatrix::maximally_mixed(9).mat, {3, 3});
    CHECK(singlet_fraction(mixed) == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
    CHECK_THROWS_AS((void)singlet_fraction(DensityMatrix::maximally_mixed(4)), std::invalid_argument);
}

TEST_CASE("unequal local dimensions embed phi+ on the smaller support") {
    // |phi+> on 2 levels inside 2 (x) 3
    std::vector<cdouble> v(6, cdouble{0.0, 0.0});
    v[0 * 3 + 0] = v[1 * 3 + 1] = 1.0 / std::sqrt(2.0);
    DensityMatrix rho = from_pure(PureState(std::move(v), {2, 3}));
    CHECK(singlet_fraction(rho) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("pure entanglement fraction closed form") {
    CHECK(pure_ent_fraction(SchmidtSpectrum({0.5, 0.5, 0.0}), 3) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(pure_ent_fraction(SchmidtSpectrum(std::vector<double>(4, 0.25)), 4) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pure_ent_fraction(SchmidtSpectrum({1.0, 0.0, 0.0}), 3) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("closed form equals the raw overlap on Schmidt-basis states") {
    Rng rng(3);
    for (int rep = 0; rep < 6; ++rep) {
        std::vector<double> lam(3);
        double s = 0.0;
        for (auto& x : lam) {
            x = rng.uniform();
            s += x;
        }
        for (auto& x : lam) x /= s;
        std::sort(lam.begin(), lam.end(), std::greater<double>());
        DensityMatrix rho = from_pure(schmidt_basis_state(lam, 3));
        CHECK(std::abs(pure_ent_fraction(SchmidtSpectrum(lam), 3) - singlet_fraction(rho)) <= 1e-10);
    }
}

TEST_CASE("teleportation fidelity relation") {
    CHECK(tele_fidelity(2.0 / 3.0, 3) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(tele_fidelity(1.0, 5) == doctest::Approx(1.0).epsilon(1e-15));
    const double f_star = 0.5 + std::sqrt(3.0) / 9.0;
    CHECK(tele_fidelity(f_star, 3) ==
          doctest::Approx(0.75 + (1.0 / std::sqrt(3.0) - 0.5) / 4.0).epsilon(1e-14));
    // strictly increasing in f
    CHECK(tele_fidelity(0.31, 3) > tele_fidelity(0.30, 3));
}

TEST_CASE("classical threshold") {
    CHECK(classical_threshold(3) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(classical_threshold(2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    double prev = classical_threshold(2);
    for (std::size_t d = 3; d <= 64; d *= 2) {
        CHECK(classical_threshold(d) < prev);
        prev = classical_threshold(d);
    }
    CHECK_THROWS_AS((void)classical_threshold(1), std::invalid_argument);
}

TEST_CASE("isotropic twirl fixed points and preserved fraction") {
    DensityMatrix bell = from_pure(max_entangled_state(2, 2));
    CHECK(max_abs_diff(isotropic_twirl(bell).mat, bell.mat) <= 1e-14);
    DensityMatrix mixed(DensityMatrix::maximally_mixed(4).mat, {2, 2});
    CHECK(max_abs_diff(isotropic_twirl(mixed).mat, mixed.mat) <= 1e-14);

    Rng rng(7);
    DensityMatrix rho = random_density_matrix({2, 2}, rng);
    DensityMatrix tw = isotropic_twirl(rho);
    CHECK(singlet_fraction(tw) == doctest::Approx(singlet_fraction(rho)).epsilon(1e-13));
    // idempotent and trace preserving
    CHECK(max_abs_diff(isotropic_twirl(tw).mat, tw.mat) <= 1e-12);
    CHECK(std::abs(tw.mat.trace() - cdouble{1.0, 0.0}) <= 1e-12);
}

TEST_CASE("twirled states commute with U (x) conj(U) rotations") {
    Rng rng(11);
    DensityMatrix rho = random_density_matrix({2, 2}, rng);
    DensityMatrix tw = isotropic_twirl(rho);
    for (int rep = 0; rep < 24; ++rep) {
        ComplexMatrix u = haar_random_unitary(2, rng);
        ComplexMatrix big = kernels::kron(u, u.conjugate());
        ComplexMatrix rotated = big * tw.mat * big.adjoint();
        CHECK(max_abs_diff(rotated, tw.mat) <= 1e-3); // far tighter in practice
    }
}

TEST_CASE("majorization boundary of the small-catalyst construction") {
    SchmidtSpectrum source(std::vector<double>{0.25, 0.25, 0.25, 0.25});
    auto target_at = [](double x) {
        return SchmidtSpectrum({x / 3.0, x / 3.0, x / 3.0, 1.0 - x});
    };
    CHECK(majorizes(target_at(0.75), source));       // boundary inclusive
    CHECK_FALSE(majorizes(target_at(0.7), source));  // construction order below 3/4
    CHECK(majorizes(source, source));                // reflexive
}

TEST_CASE("majorization is a partial order on sorted vectors") {
    Rng rng(13);
    auto random_sorted = [&](std::size_t d) {
        std::vector<double> v(d);
        double s = 0.0;
        for (auto& x : v) {
            x = rng.uniform() + 1e-6;
            s += x;
        }
        for (auto& x : v) x /= s;
        std::sort(v.begin(), v.end(), std::greater<double>());
        return SchmidtSpectrum(v);
    };
    for (int rep = 0; rep < 40; ++rep) {
        SchmidtSpectrum a = random_sorted(4), b = random_sorted(4), c = random_sorted(4);
        // antisymmetry
        if (majorizes(a, b) && majorizes(b, a)) {
            for (std::size_t i = 0; i < 4; ++i)
                CHECK(a.lambdas[i] == doctest::Approx(b.lambdas[i]).epsilon(1e-9));
        }
        // transitivity
        if (majorizes(a, b) && majorizes(b, c)) CHECK(majorizes(a, c));
    }
}

TEST_CASE("fidelity record ties the two quantities together") {
    Rng rng(17);
    DensityMatrix rho = random_density_matrix({3, 3}, rng);
    FidelityRecord rec = make_fidelity_record(rho, 3);
    CHECK(rec.tele_fidelity ==
          doctest::Approx((rec.singlet_fraction * 3 + 1) / 4).epsilon(1e-12));
    CHECK(rec.singlet_fraction >= 0.0);
    CHECK(rec.tele_fidelity <= 1.0);
}
