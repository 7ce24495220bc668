#include "qcat/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qcat/errors.hpp"
#include "qcat/tolerances.hpp"

namespace qcat::kernels {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
}

void check_perm(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
    if (perm.size() != dims.size()) throw std::invalid_argument("permute_factors: perm size != #factors");
    std::vector<bool> seen(dims.size(), false);
    for (auto p : perm) {
        if (p >= dims.size() || seen[p]) throw std::invalid_argument("permute_factors: not a permutation");
        seen[p] = true;
    }
}

void check_keep(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= dims.size()) throw std::invalid_argument("partial_trace: factor index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("partial_trace: keep indices must be ascending and distinct");
    }
}

// Row offsets of each composite index for a sublist of factors.
std::vector<std::size_t> offset_table(const std::vector<std::size_t>& dims,
                                      const std::vector<std::size_t>& factors) {
    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t f = dims.size(); f-- > 1;) stride[f - 1] = stride[f] * dims[f];
    std::size_t count = 1;
    for (auto f : factors) count *= dims[f];
    std::vector<std::size_t> table(count, 0);
    std::size_t built = 1;
    for (auto f : factors) {
        std::size_t d = dims[f];
        // extend the table by one factor
        for (std::size_t rep = built; rep-- > 0;) {
            for (std::size_t v = d; v-- > 0;) {
                table[rep * d + v] = table[rep] + v * stride[f];
            }
        }
        built *= d;
    }
    return table;
}

} // namespace

std::size_t checked_total_dim(const std::vector<std::size_t>& dims) {
    const std::size_t cap = tolerances().dim_cap;
    std::size_t p = 1;
    for (auto d : dims) {
        if (d == 0) throw std::invalid_argument("zero factor dimension");
        if (p > cap / d)
            throw dimension_limit_error("total dimension exceeds cap of " + std::to_string(cap) +
                                        "; reduce the copy count or raise tolerances().dim_cap");
        p *= d;
    }
    return p;
}

// ---- matmul -----------------------------------------------------------

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    ComplexMatrix c(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        cdouble* crow = c.data() + i * n;
        const cdouble* arow = a.data() + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const cdouble av = arow[p];
            if (av == cdouble{0.0, 0.0}) continue;
            const cdouble* brow = b.data() + p * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    ComplexMatrix c(m, n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
        cdouble* crow = c.data() + static_cast<std::size_t>(i) * n;
        const cdouble* arow = a.data() + static_cast<std::size_t>(i) * k;
        for (std::size_t p = 0; p < k; ++p) {
            const cdouble av = arow[p];
            if (av == cdouble{0.0, 0.0}) continue;
            const cdouble* brow = b.data() + p * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

// ---- kron ---------------------------------------------------------------

ComplexMatrix kron_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
    checked_total_dim({a.rows(), b.rows()});
    checked_total_dim({a.cols(), b.cols()});
    const std::size_t ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    ComplexMatrix c(ar * br, ac * bc);
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t k = 0; k < br; ++k) {
            cdouble* crow = c.data() + (i * br + k) * (ac * bc);
            const cdouble* brow = b.data() + k * bc;
            for (std::size_t j = 0; j < ac; ++j) {
                const cdouble av = a(i, j);
                for (std::size_t l = 0; l < bc; ++l) crow[j * bc + l] = av * brow[l];
            }
        }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    checked_total_dim({a.rows(), b.rows()});
    checked_total_dim({a.cols(), b.cols()});
    const std::size_t ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    ComplexMatrix c(ar * br, ac * bc);
#pragma omp parallel for collapse(2) schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ar); ++i)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(br); ++k) {
            cdouble* crow = c.data() + (static_cast<std::size_t>(i) * br + static_cast<std::size_t>(k)) * (ac * bc);
            const cdouble* brow = b.data() + static_cast<std::size_t>(k) * bc;
            for (std::size_t j = 0; j < ac; ++j) {
                const cdouble av = a(static_cast<std::size_t>(i), j);
                for (std::size_t l = 0; l < bc; ++l) crow[j * bc + l] = av * brow[l];
            }
        }
    return c;
}

// ---- factor permutation -------------------------------------------------

std::vector<std::size_t> permutation_offsets(const std::vector<std::size_t>& dims,
                                             const std::vector<std::size_t>& perm) {
    check_perm(dims, perm);
    // For output composite index r (in permuted dims), map[r] = input index.
    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t f = dims.size(); f-- > 1;) stride[f - 1] = stride[f] * dims[f];
    const std::size_t total = product(dims);
    std::vector<std::size_t> map(total, 0);
    std::size_t built = 1;
    for (auto p : perm) {
        std::size_t d = dims[p];
        for (std::size_t rep = built; rep-- > 0;) {
            for (std::size_t v = d; v-- > 0;) map[rep * d + v] = map[rep] + v * stride[p];
        }
        built *= d;
    }
    return map;
}

ComplexMatrix permute_factors_serial(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                                     const std::vector<std::size_t>& perm) {
    const std::size_t total = product(dims);
    if (m.rows() != total || m.cols() != total)
        throw std::invalid_argument("permute_factors: dims product != matrix dimension");
    auto map = permutation_offsets(dims, perm);
    ComplexMatrix out(total, total);
    for (std::size_t r = 0; r < total; ++r) {
        const cdouble* src = m.data() + map[r] * total;
        cdouble* dst = out.data() + r * total;
        for (std::size_t c = 0; c < total; ++c) dst[c] = src[map[c]];
    }
    return out;
}

ComplexMatrix permute_factors(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& perm) {
    const std::size_t total = product(dims);
    if (m.rows() != total || m.cols() != total)
        throw std::invalid_argument("permute_factors: dims product != matrix dimension");
    auto map = permutation_offsets(dims, perm);
    ComplexMatrix out(total, total);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(total); ++r) {
        const cdouble* src = m.data() + map[static_cast<std::size_t>(r)] * total;
        cdouble* dst = out.data() + static_cast<std::size_t>(r) * total;
        for (std::size_t c = 0; c < total; ++c) dst[c] = src[map[c]];
    }
    return out;
}

std::vector<cdouble> permute_factors_vec(const std::vector<cdouble>& v,
                                         const std::vector<std::size_t>& dims,
                                         const std::vector<std::size_t>& perm) {
    const std::size_t total = product(dims);
    if (v.size() != total) throw std::invalid_argument("permute_factors_vec: dims product != length");
    auto map = permutation_offsets(dims, perm);
    std::vector<cdouble> out(total);
    for (std::size_t r = 0; r < total; ++r) out[r] = v[map[r]];
    return out;
}

// ---- partial trace --------------------------------------------------------

ComplexMatrix partial_trace_serial(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                                   const std::vector<std::size_t>& keep) {
    const std::size_t total = product(dims);
    if (m.rows() != total || m.cols() != total)
        throw std::invalid_argument("partial_trace: dims product != matrix dimension");
    check_keep(dims, keep);
    std::vector<std::size_t> drop;
    for (std::size_t f = 0; f < dims.size(); ++f)
        if (!std::binary_search(keep.begin(), keep.end(), f)) drop.push_back(f);
    auto ko = offset_table(dims, keep);
    auto dofs = offset_table(dims, drop);
    ComplexMatrix out(ko.size(), ko.size());
    for (std::size_t r = 0; r < ko.size(); ++r) {
        for (std::size_t c = 0; c < ko.size(); ++c) {
            cdouble acc = 0.0;
            for (std::size_t t : dofs) acc += m.data()[(ko[r] + t) * total + (ko[c] + t)];
            out(r, c) = acc;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
    const std::size_t total = product(dims);
    if (m.rows() != total || m.cols() != total)
        throw std::invalid_argument("partial_trace: dims product != matrix dimension");
    check_keep(dims, keep);
    std::vector<std::size_t> drop;
    for (std::size_t f = 0; f < dims.size(); ++f)
        if (!std::binary_search(keep.begin(), keep.end(), f)) drop.push_back(f);
    auto ko = offset_table(dims, keep);
    auto dofs = offset_table(dims, drop);
    ComplexMatrix out(ko.size(), ko.size());
    const std::size_t nk = ko.size();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(nk); ++r) {
        for (std::size_t c = 0; c < nk; ++c) {
            cdouble acc = 0.0;
            for (std::size_t t : dofs) acc += m.data()[(ko[static_cast<std::size_t>(r)] + t) * total + (ko[c] + t)];
            out(static_cast<std::size_t>(r), c) = acc;
        }
    }
    return out;
}

// ---- bipartite sandwich ----------------------------------------------------

ComplexMatrix apply_cut_left(const ComplexMatrix& a_op, const ComplexMatrix& b_op,
                             const ComplexMatrix& m) {
    const std::size_t da = a_op.rows(), db = b_op.rows();
    if (a_op.cols() != da || b_op.cols() != db) throw std::invalid_argument("apply_cut_left: ops must be square");
    if (m.rows() != da * db) throw std::invalid_argument("apply_cut_left: row dimension mismatch");
    const std::size_t ncols = m.cols();
    // X = (A (x) I) m : mix row blocks of size db*ncols
    ComplexMatrix x(m.rows(), ncols);
    const std::size_t blk = db * ncols;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t a = 0; a < static_cast<std::ptrdiff_t>(da); ++a) {
        cdouble* dst = x.data() + static_cast<std::size_t>(a) * blk;
        for (std::size_t ap = 0; ap < da; ++ap) {
            const cdouble w = a_op(static_cast<std::size_t>(a), ap);
            if (w == cdouble{0.0, 0.0}) continue;
            const cdouble* src = m.data() + ap * blk;
            for (std::size_t t = 0; t < blk; ++t) dst[t] += w * src[t];
        }
    }
    // Y = (I (x) B) X : per a-block, mix rows of size ncols
    ComplexMatrix y(m.rows(), ncols);
#pragma omp parallel for collapse(2) schedule(static)
    for (std::ptrdiff_t a = 0; a < static_cast<std::ptrdiff_t>(da); ++a) {
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(db); ++b) {
            cdouble* dst = y.data() + (static_cast<std::size_t>(a) * db + static_cast<std::size_t>(b)) * ncols;
            for (std::size_t bp = 0; bp < db; ++bp) {
                const cdouble w = b_op(static_cast<std::size_t>(b), bp);
                if (w == cdouble{0.0, 0.0}) continue;
                const cdouble* src = x.data() + (static_cast<std::size_t>(a) * db + bp) * ncols;
                for (std::size_t t = 0; t < ncols; ++t) dst[t] += w * src[t];
            }
        }
    }
    return y;
}

ComplexMatrix sandwich_cut(const ComplexMatrix& a_op, const ComplexMatrix& b_op,
                           const ComplexMatrix& rho) {
    // (A (x) B) rho (A (x) B)^dag = (M (M rho)^dag)^dag with M = A (x) B.
    ComplexMatrix t = apply_cut_left(a_op, b_op, rho);
    ComplexMatrix u = apply_cut_left(a_op, b_op, t.adjoint());
    return u.adjoint();
}

ComplexMatrix sandwich_cut_serial(const ComplexMatrix& a_op, const ComplexMatrix& b_op,
                                  const ComplexMatrix& rho) {
    ComplexMatrix k = kron_serial(a_op, b_op);
    return matmul_serial(matmul_serial(k, rho), k.adjoint());
}

} // namespace qcat::kernels
