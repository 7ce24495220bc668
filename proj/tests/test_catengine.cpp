#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcat/catengine.hpp"
#include "qcat/entmetrics.hpp"
#include "qcat/kernels.hpp"
#include "test_helpers.hpp"

using namespace qcat;
using namespace qcat::test;

namespace {

DensityMatrix singlet_qubits() { return from_pure(max_entangled_state(2, 2)); }

// closed-form oracle: (1/n) sum_i tr_{/i} sigma^n
ComplexMatrix effective_state_oracle(const BlockCatalystState& cat) {
    const std::size_t n = cat.n;
    ComplexMatrix acc(cat.rho.dim(), cat.rho.dim());
    for (std::size_t i = 0; i < n; ++i)
        acc += kernels::partial_trace(cat.sigma_n.mat, cat.sigma_n.dims, {i});
    acc *= cdouble{1.0 / static_cast<double>(n), 0.0};
    return acc;
}

} // namespace

TEST_CASE("identity channel gives iid blocks") {
    DensityMatrix rho = singlet_qubits();
    auto id = MultiCopyChannel::identity(2, 2, 2);
    BlockCatalystState cat = build_catalyst(rho, id, 2);
    CHECK(cat.blocks.size() == 2);
    CHECK(max_abs_diff(cat.blocks[0].mat, rho.mat) <= 1e-13); // sigma^1 = rho
    CHECK(max_abs_diff(cat.blocks[1].mat, rho.mat) <= 1e-13); // rho^(x)1
    CHECK(cat.marginal_consistency_defect() <= 1e-10);
}

TEST_CASE("copy swap leaves iid input unchanged") {
    DensityMatrix rho = singlet_qubits();
    auto swap = MultiCopyChannel::copy_permutation({1, 0}, 2, 2);
    BlockCatalystState cat = build_catalyst(rho, swap, 2);
    CHECK(max_abs_diff(cat.blocks[0].mat, rho.mat) <= 1e-13);
    CHECK(max_abs_diff(cat.blocks[1].mat, rho.mat) <= 1e-13);
}

TEST_CASE("marginal consistency for a random local-unitary channel at n = 3") {
    Rng rng(3);
    DensityMatrix rho = singlet_qubits();
    auto ch = MultiCopyChannel::random_local_unitaries(3, 2, 2, rng);
    BlockCatalystState cat = build_catalyst(rho, ch, 3);
    CHECK(cat.marginal_consistency_defect() <= 1e-10);
}

TEST_CASE("build_catalyst respects the dimension cap") {
    auto saved = tolerances();
    tolerances().dim_cap = 32;
    DensityMatrix rho = singlet_qubits();
    auto id = MultiCopyChannel::identity(3, 2, 2);
    CHECK_THROWS_AS((void)build_catalyst(rho, id, 3), dimension_limit_error);
    tolerances() = saved;
}

TEST_CASE("identity channel: system unchanged, catalyst exact") {
    DensityMatrix rho = singlet_qubits();
    auto id = MultiCopyChannel::identity(2, 2, 2);
    BlockCatalystState cat = build_catalyst(rho, id, 2);
    ProtocolReport rep = run_subroutine(rho, cat, id);
    CHECK(max_abs_diff(rep.system_out.mat, rho.mat) <= 1e-12);
    CHECK(rep.catalyst_drift <= 1e-10);
    CHECK(rep.bound_3eps_satisfied);
}

TEST_CASE("two-copy brute-force oracle for a one-sided unitary") {
    // U (x) conj(U) on copy 1 only, U a Hadamard-like rotation
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix u(2, 2);
    u(0, 0) = r;
    u(0, 1) = r;
    u(1, 0) = r;
    u(1, 1) = -r;
    ComplexMatrix ua = kernels::kron(u, ComplexMatrix::identity(2));
    ComplexMatrix ub = kernels::kron(u.conjugate(), ComplexMatrix::identity(2));
    auto ch = MultiCopyChannel::local_unitaries(ua, ub, 2, 2, 2);

    DensityMatrix rho = singlet_qubits();
    BlockCatalystState cat = build_catalyst(rho, ch, 2);
    ProtocolReport rep = run_subroutine(rho, cat, ch);

    // direct 16-dimensional computation of 1/2 (tr_2 + tr_1) E(rho^(x)2)
    CHECK(max_abs_diff(rep.system_out.mat, effective_state_oracle(cat)) <= 1e-10);
    CHECK(rep.catalyst_drift <= 1e-10);
}

TEST_CASE("effective-channel identity across the randomized grid") {
    Rng rng(7);
    for (std::size_t n : {2u, 3u}) {
        for (std::size_t d : {2u, 3u}) {
            if (n == 3 && d == 3) continue; // exercised in the acceptance suite
            DensityMatrix rho = random_density_matrix({d, d}, rng);
            auto ch = MultiCopyChannel::random_channel(n, d, d, rng);
            BlockCatalystState cat = build_catalyst(rho, ch, n);
            ProtocolReport rep = run_subroutine(rho, cat, ch);
            CHECK(max_abs_diff(rep.system_out.mat, effective_state_oracle(cat)) <= 1e-10);
            CHECK(rep.catalyst_drift <= 1e-10);
            CHECK(correlation_check(rep));
        }
    }
}

TEST_CASE("monotone bound: identity product channel reproduces f(rho)") {
    Rng rng(11);
    for (int rep_i = 0; rep_i < 4; ++rep_i) {
        std::vector<double> lam(3);
        double s = 0.0;
        for (auto& x : lam) {
            x = rng.uniform() + 0.05;
            s += x;
        }
        for (auto& x : lam) x /= s;
        std::sort(lam.begin(), lam.end(), std::greater<double>());
        DensityMatrix rho = from_pure(schmidt_basis_state(lam, 3));
        auto id = MultiCopyChannel::identity(2, 3, 3);
        BlockCatalystState cat = build_catalyst(rho, id, 2);
        ProtocolReport rep = run_subroutine(rho, cat, id);
        DensityMatrix out(rep.system_out.mat, {3, 3});
        CHECK(singlet_fraction(out) >= singlet_fraction(rho) - 1e-10);
    }
}

TEST_CASE("correlation check degenerate cases") {
    // identity on a pure product state: both sides zero
    DensityMatrix prod = from_pure(kron(PureState::basis_state(2, 0), PureState::basis_state(2, 1)));
    DensityMatrix rho(prod.mat, {2, 2});
    auto id = MultiCopyChannel::identity(2, 2, 2);
    BlockCatalystState cat = build_catalyst(rho, id, 2);
    ProtocolReport rep = run_subroutine(rho, cat, id);
    CHECK(rep.joint_correlation <= 1e-12);
    CHECK(rep.epsilon_iid <= 1e-12);
    CHECK(correlation_check(rep));

    // per-copy local unitaries: epsilon = 0 forces a product joint
    Rng rng(13);
    ComplexMatrix ua = haar_random_unitary(2, rng);
    ComplexMatrix ub = haar_random_unitary(2, rng);
    auto ch = MultiCopyChannel::local_unitaries(kernels::kron(ua, ua), kernels::kron(ub, ub), 2, 2, 2);
    DensityMatrix bell = singlet_qubits();
    BlockCatalystState cat2 = build_catalyst(bell, ch, 2);
    ProtocolReport rep2 = run_subroutine(bell, cat2, ch);
    CHECK(rep2.epsilon_iid <= 1e-10);
    CHECK(rep2.joint_correlation <= 1e-10);
    CHECK(correlation_check(rep2));

    // generic instrument: the bound holds with slack
    auto inst = MultiCopyChannel::random_instrument(2, 2, 2, 2, rng);
    BlockCatalystState cat3 = build_catalyst(bell, inst, 2);
    ProtocolReport rep3 = run_subroutine(bell, cat3, inst);
    CHECK(correlation_check(rep3));
    CHECK(2.0 * rep3.joint_correlation <= 3.0 * rep3.epsilon_iid + 1e-8);
}

TEST_CASE("joint retention flag") {
    DensityMatrix rho = singlet_qubits();
    auto id = MultiCopyChannel::identity(2, 2, 2);
    BlockCatalystState cat = build_catalyst(rho, id, 2);
    SubroutineOptions opts;
    opts.retain_joint = false;
    ProtocolReport rep = run_subroutine(rho, cat, id, opts);
    CHECK_FALSE(rep.has_joint_data);
    CHECK_THROWS_AS((void)correlation_check(rep), std::invalid_argument);
}

TEST_CASE("mismatched catalyst is rejected") {
    Rng rng(17);
    DensityMatrix rho = singlet_qubits();
    DensityMatrix other = random_density_matrix({2, 2}, rng);
    auto id = MultiCopyChannel::identity(2, 2, 2);
    BlockCatalystState cat = build_catalyst(rho, id, 2);
    CHECK_THROWS_AS((void)run_subroutine(other, cat, id), std::invalid_argument);
}
