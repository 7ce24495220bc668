#include "qcat/gencat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qcat/errors.hpp"
#include "qcat/kernels.hpp"
#include "qcat/linalg.hpp"
#include "qcat/tolerances.hpp"

namespace qcat {

namespace {

// n-fold tensor spectra without building dense matrices: products of
// eigenvalues / sums of energies.
std::vector<double> tensor_products(const std::vector<double>& w, std::size_t n) {
    std::vector<double> out{1.0};
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<double> next;
        next.reserve(out.size() * w.size());
        for (double a : out)
            for (double b : w) next.push_back(a * b);
        out = std::move(next);
    }
    return out;
}

std::vector<double> tensor_sums(const std::vector<double>& e, std::size_t n) {
    std::vector<double> out{0.0};
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<double> next;
        next.reserve(out.size() * e.size());
        for (double a : out)
            for (double b : e) next.push_back(a + b);
        out = std::move(next);
    }
    return out;
}

double passive_energy(std::vector<double> w, std::vector<double> e) {
    std::sort(w.begin(), w.end(), std::greater<double>());
    std::sort(e.begin(), e.end());
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * e[i];
    return s;
}

} // namespace

Observable::Observable(ComplexMatrix m, std::string r) : mat(std::move(m)), role(std::move(r)) {
    if (!mat.is_square()) throw std::invalid_argument("Observable: matrix not square");
    if (mat.hermiticity_defect() > tolerances().hermiticity)
        throw std::invalid_argument("Observable: not Hermitian within tolerance");
}

double expectation(const DensityMatrix& rho, const Observable& o) {
    if (o.mat.rows() != rho.dim()) throw std::invalid_argument("expectation: dimension mismatch");
    return (o.mat * rho.mat).trace().real();
}

double ergotropy(const DensityMatrix& rho, const Observable& h) {
    if (h.mat.rows() != rho.dim()) throw std::invalid_argument("ergotropy: dimension mismatch");
    auto w = linalg::eigvals_hermitian(rho.mat);
    auto e = linalg::eigvals_hermitian(h.mat);
    return expectation(rho, h) - passive_energy(w, e);
}

double collective_ergotropy(const DensityMatrix& rho, const Observable& h, std::size_t n) {
    if (n < 1) throw std::invalid_argument("collective_ergotropy: n must be >= 1");
    if (h.mat.rows() != rho.dim())
        throw std::invalid_argument("collective_ergotropy: dimension mismatch");
    kernels::checked_total_dim(Dims(n, rho.dim()));
    auto w = tensor_products(linalg::eigvals_hermitian(rho.mat), n);
    auto e = tensor_sums(linalg::eigvals_hermitian(h.mat), n);
    return expectation(rho, h) - passive_energy(std::move(w), std::move(e)) / static_cast<double>(n);
}

MultiCopyChannel optimal_extraction_unitary(const DensityMatrix& rho, const Observable& h,
                                            std::size_t n) {
    const std::size_t d = rho.dim();
    kernels::checked_total_dim(Dims(n, d));
    DensityMatrix rho_flat(rho.mat, {d});
    DensityMatrix rho_n = n_copies(rho_flat, n);
    auto er = linalg::eig_hermitian(rho_n.mat); // descending

    // total energy operator sum_i 1_{/i} (x) H
    const std::size_t dn = rho_n.dim();
    ComplexMatrix htot(dn, dn);
    ComplexMatrix hsingle = h.mat;
    for (std::size_t i = 0; i < n; ++i) {
        ComplexMatrix term = ComplexMatrix::identity(1);
        for (std::size_t j = 0; j < n; ++j)
            term = kernels::kron(term, j == i ? hsingle : ComplexMatrix::identity(d));
        htot += term;
    }
    auto eh = linalg::eig_hermitian(htot); // descending; we need ascending

    // U = sum_k |h_asc(k)><r_desc(k)|: k-th largest population lands on the
    // k-th smallest energy level
    ComplexMatrix u(dn, dn);
    for (std::size_t k = 0; k < dn; ++k) {
        const std::size_t asc = dn - 1 - k;
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c2 = 0; c2 < dn; ++c2)
                u(r, c2) += eh.eigenvectors(r, asc) * std::conj(er.eigenvectors(c2, k));
    }
    return MultiCopyChannel::global_unitary(std::move(u), n, d);
}

CatalyticValue catalytic_expectation(const DensityMatrix& rho, const Observable& o,
                                     const MultiCopyChannel& channel, std::size_t n) {
    if (o.mat.rows() != rho.dim())
        throw std::invalid_argument("catalytic_expectation: observable dimension mismatch");
    BlockCatalystState cat = build_catalyst(rho, channel, n);
    SubroutineOptions opts;
    opts.retain_joint = false; // only the effective output and drift matter here
    ProtocolReport rep = run_subroutine(rho, cat, channel, opts);
    return {expectation(rep.system_out, o), rep.catalyst_drift, rep.system_out};
}

GibbsResult entropy_matched_gibbs(const DensityMatrix& rho, const Observable& h) {
    if (h.mat.rows() != rho.dim())
        throw std::invalid_argument("entropy_matched_gibbs: dimension mismatch");
    const std::size_t d = rho.dim();
    const double target = von_neumann_entropy(rho);
    const double max_entropy = std::log(static_cast<double>(d));

    auto e = linalg::eig_hermitian(h.mat); // descending eigenvalues + vectors
    auto gibbs = [&](double beta) {
        // populations in h's eigenbasis
        std::vector<double> p(d);
        double zmax = -beta * e.eigenvalues[d - 1]; // largest exponent (smallest energy)
        for (std::size_t i = 0; i < d; ++i) zmax = std::max(zmax, -beta * e.eigenvalues[i]);
        double z = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            p[i] = std::exp(-beta * e.eigenvalues[i] - zmax);
            z += p[i];
        }
        for (auto& x : p) x /= z;
        return p;
    };
    auto entropy_at = [&](double beta) { return shannon_entropy(gibbs(beta)); };

    if (target <= 1e-12)
        throw boundary_error("entropy_matched_gibbs: pure input needs beta -> +inf");
    if (target >= max_entropy - 1e-12) {
        GibbsResult r{DensityMatrix::maximally_mixed(d), 0.0, true};
        r.tau.dims = rho.dims;
        return r;
    }

    // S is strictly decreasing on beta >= 0 (toward log of the ground
    // degeneracy); widen the bracket until it straddles the target.
    double lo = 0.0, hi = 1.0;
    std::size_t iters = 0;
    while (entropy_at(hi) > target) {
        hi *= 2.0;
        if (++iters > 200 || hi > 1e8)
            throw numeric_error("entropy_matched_gibbs: target entropy unreachable at beta >= 0");
    }
    for (iters = 0; iters < 10000 && hi - lo > 1e-13 * std::max(1.0, hi); ++iters) {
        const double mid = 0.5 * (lo + hi);
        if (entropy_at(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    const double beta = 0.5 * (lo + hi);
    auto p = gibbs(beta);
    // assemble tau in h's eigenbasis
    ComplexMatrix tau(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c2 = 0; c2 < d; ++c2)
                tau(r, c2) += cdouble{p[i], 0.0} * e.eigenvectors(r, i) * std::conj(e.eigenvectors(c2, i));
    ComplexMatrix tau_h = (tau + tau.adjoint()) * cdouble{0.5, 0.0};
    GibbsResult res{DensityMatrix(std::move(tau_h), rho.dims), beta, false};
    return res;
}

WorkReport make_work_report(const DensityMatrix& rho, const Observable& h, std::size_t n_max) {
    WorkReport w;
    w.single_copy = ergotropy(rho, h);
    const double base = expectation(rho, h);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double work = collective_ergotropy(rho, h, n);
        w.per_copy_work[n] = work;
        w.per_copy_residual_energy[n] = base - work;
    }
    auto g = entropy_matched_gibbs(rho, h);
    w.gibbs_beta = g.beta;
    w.free_energy_gap = base - expectation(g.tau, h);
    return w;
}

} // namespace qcat
