#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qcat/advopt.hpp"
#include "qcat/entmetrics.hpp"
#include "test_helpers.hpp"

using namespace qcat;
using namespace qcat::test;

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

double entropy3(double a, double b, double c) { return plogp(a) + plogp(b) + plogp(c); }

// brute-force oracle: dense grid over the ordered qutrit simplex
double dense_grid_bound(const std::vector<double>& lam, int steps) {
    const double s0 = entropy3(lam[0], lam[1], lam[2]);
    double best = 0.0;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= std::min(i, steps - i); ++j) {
            const int k = steps - i - j;
            if (k > j) continue;
            const double l1 = static_cast<double>(i) / steps;
            const double l2 = static_cast<double>(j) / steps;
            const double l3 = static_cast<double>(k) / steps;
            if (entropy3(l1, l2, l3) > s0 + 1e-13) continue;
            const double v = std::sqrt(l1) + std::sqrt(l2) + std::sqrt(l3);
            best = std::max(best, v * v / 3.0);
        }
    return best;
}

} // namespace

TEST_CASE("binary entropy equation root") {
    const double x = solve_binary_entropy_eq();
    CHECK(x == doctest::Approx(0.7729078047806517).epsilon(1e-10));
    CHECK(std::abs(plogp(x) + plogp(1 - x) - x * std::log(2.0)) <= 1e-10);
    CHECK(x == doctest::Approx(0.773).epsilon(2e-3)); // the 3-digit report
}

TEST_CASE("main-text bound: lambda = (1/2, 1/2, 0) reaches ~4/5") {
    auto r = lemma1_bound(SchmidtSpectrum({0.5, 0.5, 0.0}), 3);
    CHECK(r.f_cat_lb == doctest::Approx(0.8040230861972169).epsilon(5e-7));
    CHECK(r.f_cat_lb == doctest::Approx(0.8).epsilon(5e-3)); // paper rounds to 4/5
    // optimizer is the uniform-tail state at the binary-entropy root
    CHECK(r.lam_opt.lambdas[0] == doctest::Approx(0.7729078).epsilon(1e-3));
    CHECK(r.lam_opt.lambdas[1] == doctest::Approx(r.lam_opt.lambdas[2]).epsilon(1e-4));
    // feasibility
    const double s_in = entropy3(0.5, 0.5, 0.0);
    CHECK(entropy3(r.lam_opt.lambdas[0], r.lam_opt.lambdas[1], r.lam_opt.lambdas[2]) <=
          s_in + 1e-9);
}

TEST_CASE("maximally entangled input is a fixed point with f = 1") {
    auto r = lemma1_bound(SchmidtSpectrum({1.0 / 3, 1.0 / 3, 1.0 / 3}), 3);
    CHECK(r.f_cat_lb == doctest::Approx(1.0).epsilon(1e-12));
    for (double l : r.lam_opt.lambdas) CHECK(l == doctest::Approx(1.0 / 3).epsilon(1e-9));
}

TEST_CASE("zero entropy forces the pure optimizer") {
    auto r = lemma1_bound(SchmidtSpectrum({1.0, 0.0, 0.0}), 3);
    CHECK(r.f_cat_lb == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(r.lam_opt.lambdas[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bound dominates the standard fraction and agrees with the grid oracle") {
    Rng rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> lam(3);
        double s = 0.0;
        for (auto& x : lam) {
            x = rng.uniform() + 1e-3;
            s += x;
        }
        for (auto& x : lam) x /= s;
        std::sort(lam.begin(), lam.end(), std::greater<double>());
        SchmidtSpectrum spec(lam);
        auto r = lemma1_bound(spec, 3);
        CHECK(r.f_cat_lb >= pure_ent_fraction(spec, 3) - 1e-9);
        // independent dense grid at step 1e-3
        const double oracle = dense_grid_bound(lam, 1000);
        CHECK(std::abs(r.f_cat_lb - oracle) <= 1e-4);
        CHECK(r.f_cat_lb >= oracle - 1e-9); // the grid can only undershoot
        // feasibility of the returned optimizer
        CHECK(entropy3(r.lam_opt.lambdas[0], r.lam_opt.lambdas[1], r.lam_opt.lambdas[2]) <=
              entropy3(lam[0], lam[1], lam[2]) + 1e-9);
    }
}

TEST_CASE("bound is monotone in the input entropy") {
    // along the ray from pure toward uniform the entropy grows
    double prev = 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double t = static_cast<double>(k) / 10.0;
        std::vector<double> lam{1.0 - 2.0 * t / 3.0, t / 3.0, t / 3.0};
        auto r = lemma1_bound(SchmidtSpectrum(lam), 3);
        CHECK(r.f_cat_lb >= prev - 1e-9);
        prev = r.f_cat_lb;
    }
}

TEST_CASE("advantage map: corners and the main-text point") {
    auto points = advantage_map(1.0 / 30, 3); // grid contains (1/3,1/3,1/3) and (1/2,1/2,0)
    bool saw_uniform = false, saw_pure = false, saw_main = false;
    for (const auto& p : points) {
        CHECK(p.eta >= -1e-9);
        CHECK(p.F_cat_lb >= p.F_std - 1e-9);
        if (std::abs(p.lam[0] - 1.0) < 1e-12) {
            saw_pure = true;
            CHECK(std::abs(p.eta) <= 1e-6);
        }
        if (std::abs(p.lam[0] - p.lam[2]) < 1e-12 && std::abs(p.lam[0] - 1.0 / 3) < 1e-9) {
            saw_uniform = true;
            CHECK(std::abs(p.eta) <= 1e-6);
        }
        if (std::abs(p.lam[0] - 0.5) < 1e-9 && std::abs(p.lam[1] - 0.5) < 1e-9) {
            saw_main = true;
            CHECK(p.F_std == doctest::Approx(0.75).epsilon(1e-12));
            CHECK(p.eta == doctest::Approx(0.1373564195).epsilon(5e-4));
        }
    }
    CHECK(saw_pure);
    CHECK(saw_main);
    CHECK(saw_uniform);
}

TEST_CASE("advantage CSV format") {
    auto points = advantage_map(0.5, 3);
    std::ostringstream os;
    write_advantage_csv(os, points);
    const std::string text = os.str();
    CHECK(text.rfind("lambda1,lambda2,lambda3,f_std,f_cat_lb,F_std,F_cat_lb,eta\n", 0) == 0);
    // one row per grid point plus header
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == points.size() + 1);
}

TEST_CASE("resolution validation") {
    CHECK_THROWS_AS((void)advantage_map(0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)advantage_map(0.7, 3), std::invalid_argument);
}
