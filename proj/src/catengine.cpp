#include "qcat/catengine.hpp"

#include <numeric>
#include <stdexcept>

#include "qcat/kernels.hpp"
#include "qcat/linalg.hpp"
#include "qcat/tolerances.hpp"

namespace qcat {

namespace {

std::size_t dims_product(const Dims& d) {
    std::size_t p = 1;
    for (auto x : d) p *= x;
    return p;
}

// sigma^{n-i}: marginal of sigma_n over copies i+1..n (0 copies -> 1x1 "scalar").
ComplexMatrix sigma_marginal(const DensityMatrix& sigma_n, std::size_t n, std::size_t i) {
    if (i == n) {
        ComplexMatrix one(1, 1);
        one(0, 0) = 1.0;
        return one;
    }
    std::vector<std::size_t> keep(n - i);
    std::iota(keep.begin(), keep.end(), i);
    return kernels::partial_trace(sigma_n.mat, sigma_n.dims, keep);
}

ComplexMatrix kron_power(const ComplexMatrix& m, std::size_t k) {
    ComplexMatrix out(1, 1);
    out(0, 0) = 1.0;
    for (std::size_t i = 0; i < k; ++i) out = kernels::kron(out, m);
    return out;
}

} // namespace

double BlockCatalystState::marginal_consistency_defect() const {
    double worst = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n) continue; // trailing group empty
        std::vector<std::size_t> keep(n - i);
        std::iota(keep.begin(), keep.end(), i - 1); // positions of the sigma group in the block
        ComplexMatrix tail = kernels::partial_trace(blocks[i - 1].mat, blocks[i - 1].dims, keep);
        ComplexMatrix expect = sigma_marginal(sigma_n, n, i);
        worst = std::max(worst, (tail - expect).max_abs());
    }
    return worst;
}

BlockCatalystState build_catalyst(const DensityMatrix& rho, const MultiCopyChannel& channel,
                                  std::size_t n) {
    if (n < 2) throw std::invalid_argument("build_catalyst: n must be >= 2");
    if (channel.copies() != n) throw std::invalid_argument("build_catalyst: channel acts on wrong copy count");
    const std::size_t d = dims_product(rho.dims);
    if (d != channel.copy_dim())
        throw std::invalid_argument("build_catalyst: channel copy dimension does not match rho");
    Dims joint_dims(n, d);
    kernels::checked_total_dim(joint_dims); // fail fast before building rho^(x)n

    DensityMatrix rho_flat(rho.mat, {d});
    DensityMatrix rho_n = n_copies(rho_flat, n);
    DensityMatrix sigma_n = channel.apply(rho_n);

    BlockCatalystState cat{n, rho.dims, rho_flat, {}, sigma_n};
    for (std::size_t i = 1; i <= n; ++i) {
        ComplexMatrix block = kernels::kron(kron_power(rho.mat, i - 1), sigma_marginal(sigma_n, n, i));
        cat.blocks.emplace_back(std::move(block), Dims(n - 1, d));
    }
    return cat;
}

ProtocolReport run_subroutine(const DensityMatrix& rho, const BlockCatalystState& catalyst,
                              const MultiCopyChannel& channel, const SubroutineOptions& opts) {
    const std::size_t n = catalyst.n;
    const std::size_t d = channel.copy_dim();
    if (dims_product(rho.dims) != d || rho.dims != catalyst.copy_dims)
        throw std::invalid_argument("run_subroutine: rho does not match the catalyst");
    if ((rho.mat - catalyst.rho.mat).max_abs() > 1e-12)
        throw std::invalid_argument("run_subroutine: catalyst was built from a different state");
    if (channel.copies() != n)
        throw std::invalid_argument("run_subroutine: channel copy count does not match catalyst");

    const Dims joint_dims(n, d);

    // Joint state rho (x) omega: block i = rho^(x)i (x) sigma^(n-i), M = i.
    std::vector<DensityMatrix> joint;
    joint.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        joint.emplace_back(kernels::kron(rho.mat, catalyst.blocks[i].mat), joint_dims);

    // Step 1: apply the channel conditioned on M = n.
    joint[n - 1] = channel.apply(joint[n - 1]);

    // Step 2: cyclic relabel |i>_M -> |i+1>_M, |n>_M -> |1>_M.
    std::rotate(joint.rbegin(), joint.rbegin() + 1, joint.rend());

    // Step 3: conditioned on M = i, swap copy registers 1 and i.
    for (std::size_t i = 2; i <= n; ++i) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::swap(perm[0], perm[i - 1]);
        joint[i - 1] = permute_factors(joint[i - 1], perm);
    }

    ProtocolReport rep{DensityMatrix::maximally_mixed(d), 0.0, 0.0, 0.0, false, opts.retain_joint};

    // Catalyst marginal: trace out the system copy of each block.
    std::vector<std::size_t> keep_cat(n - 1);
    std::iota(keep_cat.begin(), keep_cat.end(), std::size_t{1});
    double drift = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ComplexMatrix marg = kernels::partial_trace(joint[i].mat, joint_dims, keep_cat);
        drift += 0.5 * linalg::trace_norm_hermitian(marg - catalyst.blocks[i].mat) / static_cast<double>(n);
    }
    rep.catalyst_drift = drift;

    // System marginal: mixture over M of the copy-1 marginals.
    ComplexMatrix sys(d, d);
    for (std::size_t i = 0; i < n; ++i)
        sys += kernels::partial_trace(joint[i].mat, joint_dims, {0});
    sys *= cdouble{1.0 / static_cast<double>(n), 0.0};
    ComplexMatrix sys_h = (sys + sys.adjoint()) * cdouble{0.5, 0.0};
    rep.system_out = DensityMatrix(std::move(sys_h), rho.dims);

    if (opts.retain_joint) {
        // epsilon: how far E(rho^(x)n) is from i.i.d. copies of the averaged output
        DensityMatrix out_flat(rep.system_out.mat, {d});
        DensityMatrix out_n = n_copies(out_flat, n);
        rep.epsilon_iid = linalg::trace_norm_hermitian(catalyst.sigma_n.mat - out_n.mat);

        double corr = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ComplexMatrix prod = kernels::kron(rep.system_out.mat, catalyst.blocks[i].mat);
            corr += 0.5 * linalg::trace_norm_hermitian(joint[i].mat - prod) / static_cast<double>(n);
        }
        rep.joint_correlation = corr;
        rep.bound_3eps_satisfied = correlation_check(rep);
    }
    return rep;
}

bool correlation_check(const ProtocolReport& report) {
    if (!report.has_joint_data)
        throw std::invalid_argument("correlation_check: report was built without joint-state retention");
    return 2.0 * report.joint_correlation <= 3.0 * report.epsilon_iid + tolerances().bound_slack;
}

} // namespace qcat
