#include "qcat/channels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qcat/kernels.hpp"
#include "qcat/linalg.hpp"
#include "qcat/tolerances.hpp"

namespace qcat {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t p = 1;
    while (e--) p *= b;
    return p;
}

// pair-major fine factors [dA, dB, dA, dB, ...] -> cut-major [all A, all B]
std::vector<std::size_t> to_cut_perm(std::size_t n) {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(2 * i);
    for (std::size_t i = 0; i < n; ++i) p.push_back(2 * i + 1);
    return p;
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& p) {
    std::vector<std::size_t> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

} // namespace

// ---- factories -------------------------------------------------------------

MultiCopyChannel MultiCopyChannel::identity(std::size_t n, std::size_t d_a, std::size_t d_b) {
    MultiCopyChannel c;
    c.kind_ = ChannelKind::identity;
    c.n_ = n;
    c.d_a_ = d_a;
    c.d_b_ = d_b;
    return c;
}

MultiCopyChannel MultiCopyChannel::local_unitaries(ComplexMatrix u_a, ComplexMatrix u_b, std::size_t n,
                                                   std::size_t d_a, std::size_t d_b) {
    if (u_a.rows() != ipow(d_a, n) || u_b.rows() != ipow(d_b, n))
        throw std::invalid_argument("local_unitaries: operator dimensions do not match d^n");
    MultiCopyChannel c;
    c.kind_ = ChannelKind::local_unitary_pair;
    c.n_ = n;
    c.d_a_ = d_a;
    c.d_b_ = d_b;
    c.kraus_.push_back({std::move(u_a), std::move(u_b)});
    return c;
}

MultiCopyChannel MultiCopyChannel::one_way_instrument(std::vector<KrausPair> kraus, std::size_t n,
                                                      std::size_t d_a, std::size_t d_b) {
    if (kraus.empty()) throw std::invalid_argument("one_way_instrument: no branches");
    for (const auto& k : kraus)
        if (k.alice.rows() != ipow(d_a, n) || k.bob.rows() != ipow(d_b, n))
            throw std::invalid_argument("one_way_instrument: operator dimensions do not match d^n");
    MultiCopyChannel c;
    c.kind_ = ChannelKind::one_way_instrument;
    c.n_ = n;
    c.d_a_ = d_a;
    c.d_b_ = d_b;
    c.kraus_ = std::move(kraus);
    return c;
}

MultiCopyChannel MultiCopyChannel::copy_permutation(std::vector<std::size_t> perm, std::size_t d_a,
                                                    std::size_t d_b) {
    MultiCopyChannel c;
    c.kind_ = ChannelKind::copy_permutation;
    c.n_ = perm.size();
    c.d_a_ = d_a;
    c.d_b_ = d_b;
    c.perm_ = std::move(perm);
    return c;
}

MultiCopyChannel MultiCopyChannel::global_unitary(ComplexMatrix u, std::size_t n, std::size_t copy_dim) {
    if (u.rows() != ipow(copy_dim, n))
        throw std::invalid_argument("global_unitary: operator dimension does not match copy_dim^n");
    MultiCopyChannel c;
    c.kind_ = ChannelKind::global_unitary;
    c.n_ = n;
    c.d_a_ = copy_dim;
    c.d_b_ = 1;
    c.global_u_ = std::move(u);
    return c;
}

MultiCopyChannel MultiCopyChannel::random_local_unitaries(std::size_t n, std::size_t d_a,
                                                          std::size_t d_b, Rng& rng) {
    return local_unitaries(haar_random_unitary(ipow(d_a, n), rng),
                           haar_random_unitary(ipow(d_b, n), rng), n, d_a, d_b);
}

MultiCopyChannel MultiCopyChannel::random_instrument(std::size_t n, std::size_t d_a, std::size_t d_b,
                                                     std::size_t branches, Rng& rng) {
    const std::size_t da = ipow(d_a, n);
    const std::size_t db = ipow(d_b, n);
    std::vector<ComplexMatrix> g;
    ComplexMatrix s(da, da);
    for (std::size_t k = 0; k < branches; ++k) {
        ComplexMatrix m(da, da);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) m(i, j) = rng.complex_normal();
        s += m.adjoint() * m;
        g.push_back(std::move(m));
    }
    ComplexMatrix norm = linalg::inv_sqrt_psd(s);
    std::vector<KrausPair> kraus;
    for (auto& m : g) kraus.push_back({m * norm, haar_random_unitary(db, rng)});
    return one_way_instrument(std::move(kraus), n, d_a, d_b);
}

MultiCopyChannel MultiCopyChannel::random_copy_permutation(std::size_t n, std::size_t d_a,
                                                           std::size_t d_b, Rng& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.raw() % i]);
    return copy_permutation(std::move(perm), d_a, d_b);
}

MultiCopyChannel MultiCopyChannel::random_channel(std::size_t n, std::size_t d_a, std::size_t d_b,
                                                  Rng& rng) {
    switch (rng.raw() % 4) {
        case 0: return identity(n, d_a, d_b);
        case 1: return random_local_unitaries(n, d_a, d_b, rng);
        case 2: return random_copy_permutation(n, d_a, d_b, rng);
        default: return random_instrument(n, d_a, d_b, 2, rng);
    }
}

// ---- application -------------------------------------------------------

std::size_t MultiCopyChannel::branch_count() const {
    switch (kind_) {
        case ChannelKind::identity:
        case ChannelKind::copy_permutation:
        case ChannelKind::global_unitary:
            return 1;
        default:
            return kraus_.size();
    }
}

DensityMatrix MultiCopyChannel::apply(const DensityMatrix& rho) const {
    const std::size_t d = copy_dim();
    if (rho.dims != Dims(n_, d))
        throw std::invalid_argument("MultiCopyChannel::apply: state dims must be n copies of dA*dB");

    switch (kind_) {
        case ChannelKind::identity:
            return rho;
        case ChannelKind::copy_permutation:
            return permute_factors(rho, perm_);
        case ChannelKind::global_unitary: {
            ComplexMatrix out = global_u_ * rho.mat * global_u_.adjoint();
            return DensityMatrix(std::move(out), rho.dims);
        }
        default:
            break;
    }

    // fine pair-major factors -> cut-major, sandwich each branch, return
    std::vector<std::size_t> fine;
    for (std::size_t i = 0; i < n_; ++i) {
        fine.push_back(d_a_);
        fine.push_back(d_b_);
    }
    auto perm = to_cut_perm(n_);
    ComplexMatrix cut = kernels::permute_factors(rho.mat, fine, perm);
    ComplexMatrix acc(cut.rows(), cut.cols());
    for (const auto& k : kraus_) acc += kernels::sandwich_cut(k.alice, k.bob, cut);
    std::vector<std::size_t> cut_dims(2 * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        cut_dims[i] = d_a_;
        cut_dims[n_ + i] = d_b_;
    }
    ComplexMatrix back = kernels::permute_factors(acc, cut_dims, invert(perm));
    // channels are trace-preserving; scrub rounding so downstream validity
    // checks see exact Hermitian trace-one input
    ComplexMatrix h = (back + back.adjoint()) * cdouble{0.5, 0.0};
    return DensityMatrix(std::move(h), rho.dims);
}

bool MultiCopyChannel::kraus_complete() const {
    const double tol = tolerances().kraus_complete;
    switch (kind_) {
        case ChannelKind::identity:
        case ChannelKind::copy_permutation:
            return true;
        case ChannelKind::global_unitary:
            return global_u_.is_unitary(tol);
        default: {
            ComplexMatrix s(kraus_.front().alice.rows(), kraus_.front().alice.rows());
            for (const auto& k : kraus_) {
                if (!k.bob.is_unitary(tol)) return false;
                s += k.alice.adjoint() * k.alice;
            }
            s -= ComplexMatrix::identity(s.rows());
            return s.max_abs() <= tol;
        }
    }
}

} // namespace qcat
