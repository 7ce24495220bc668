#include "qcat/qstate.hpp"

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

std::size_t dims_product(const Dims& dims) {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
}

} // namespace

// ---- DensityMatrix ---------------------------------------------------------

DensityMatrix::DensityMatrix(ComplexMatrix m, Dims d) : mat(std::move(m)), dims(std::move(d)) {
    if (!mat.is_square()) throw std::invalid_argument("DensityMatrix: matrix not square");
    if (dims.empty()) dims = {mat.rows()};
    if (dims_product(dims) != mat.rows())
        throw std::invalid_argument("DensityMatrix: factor dimensions do not multiply to matrix dimension");
    const auto& tol = tolerances();
    if (mat.hermiticity_defect() > tol.hermiticity)
        throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
    if (std::abs(mat.trace() - cdouble{1.0, 0.0}) > tol.trace_one)
        throw std::invalid_argument("DensityMatrix: trace != 1 within tolerance");
}

void DensityMatrix::full_validate() const {
    auto w = linalg::eigvals_hermitian(mat);
    if (!w.empty() && w.back() < tolerances().psd_floor)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
    ComplexMatrix m = ComplexMatrix::identity(d);
    m *= cdouble{1.0 / static_cast<double>(d), 0.0};
    return DensityMatrix(std::move(m), {d});
}

// ---- PureState ----------------------------------------------------------

PureState::PureState(std::vector<cdouble> v, Dims d) : vec(std::move(v)), dims(std::move(d)) {
    if (vec.empty()) throw std::invalid_argument("PureState: empty vector");
    if (dims.empty()) dims = {vec.size()};
    if (dims_product(dims) != vec.size())
        throw std::invalid_argument("PureState: factor dimensions do not multiply to vector length");
    double n2 = 0.0;
    for (const auto& z : vec) n2 += std::norm(z);
    if (std::abs(std::sqrt(n2) - 1.0) > tolerances().state_norm)
        throw std::invalid_argument("PureState: not normalized within tolerance");
}

PureState PureState::basis_state(std::size_t d, std::size_t index) {
    if (index >= d) throw std::invalid_argument("basis_state: index out of range");
    std::vector<cdouble> v(d, cdouble{0.0, 0.0});
    v[index] = 1.0;
    return PureState(std::move(v), {d});
}

// ---- SchmidtSpectrum ------------------------------------------------------

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> l) : lambdas(std::move(l)) {
    if (lambdas.empty()) throw std::invalid_argument("SchmidtSpectrum: empty");
    double s = 0.0;
    for (double x : lambdas) {
        if (x < -1e-12 || x > 1.0 + 1e-12) throw std::invalid_argument("SchmidtSpectrum: entry outside [0,1]");
        s += x;
    }
    if (std::abs(s - 1.0) > tolerances().spectrum_sum)
        throw std::invalid_argument("SchmidtSpectrum: entries do not sum to 1");
}

SchmidtSpectrum SchmidtSpectrum::descending(std::vector<double> l) {
    std::sort(l.begin(), l.end(), std::greater<double>());
    return SchmidtSpectrum(std::move(l));
}

bool SchmidtSpectrum::is_descending() const {
    for (std::size_t i = 1; i < lambdas.size(); ++i)
        if (lambdas[i] > lambdas[i - 1] + 1e-15) return false;
    return true;
}

// ---- constructions ----------------------------------------------------------

DensityMatrix from_pure(const PureState& psi) {
    return DensityMatrix(ComplexMatrix::outer(psi.vec, psi.vec), psi.dims);
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
    Dims d = a.dims;
    d.insert(d.end(), b.dims.begin(), b.dims.end());
    kernels::checked_total_dim(d);
    return DensityMatrix(kernels::kron(a.mat, b.mat), std::move(d));
}

PureState kron(const PureState& a, const PureState& b) {
    Dims d = a.dims;
    d.insert(d.end(), b.dims.begin(), b.dims.end());
    kernels::checked_total_dim(d);
    std::vector<cdouble> v(a.vec.size() * b.vec.size());
    for (std::size_t i = 0; i < a.vec.size(); ++i)
        for (std::size_t j = 0; j < b.vec.size(); ++j) v[i * b.vec.size() + j] = a.vec[i] * b.vec[j];
    return PureState(std::move(v), std::move(d));
}

DensityMatrix n_copies(const DensityMatrix& rho, std::size_t n) {
    if (n == 0) throw std::invalid_argument("n_copies: n must be >= 1");
    DensityMatrix out = rho;
    for (std::size_t i = 1; i < n; ++i) out = kron(out, rho);
    return out;
}

DensityMatrix permute_factors(const DensityMatrix& rho, const std::vector<std::size_t>& perm) {
    Dims nd(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p) nd[p] = rho.dims.at(perm[p]);
    return DensityMatrix(kernels::permute_factors(rho.mat, rho.dims, perm), std::move(nd));
}

PureState permute_factors(const PureState& psi, const std::vector<std::size_t>& perm) {
    Dims nd(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p) nd[p] = psi.dims.at(perm[p]);
    return PureState(kernels::permute_factors_vec(psi.vec, psi.dims, perm), std::move(nd));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
    Dims nd;
    for (auto k : keep) {
        if (k >= rho.dims.size()) throw std::invalid_argument("partial_trace: factor index out of range");
        nd.push_back(rho.dims[k]);
    }
    return DensityMatrix(kernels::partial_trace(rho.mat, rho.dims, keep), std::move(nd));
}

// ---- Schmidt decomposition ----------------------------------------------

SchmidtSpectrum schmidt(const PureState& psi, const std::vector<std::size_t>& a_factors) {
    std::vector<std::size_t> a = a_factors;
    std::sort(a.begin(), a.end());
    if (a.empty() || a.size() >= psi.dims.size())
        throw std::invalid_argument("schmidt: cut must be a proper nonempty factor subset");
    std::vector<std::size_t> perm = a;
    for (std::size_t f = 0; f < psi.dims.size(); ++f)
        if (!std::binary_search(a.begin(), a.end(), f)) perm.push_back(f);
    PureState rearranged = permute_factors(psi, perm);
    std::size_t da = 1;
    for (auto f : a) da *= psi.dims[f];
    std::size_t db = rearranged.dim() / da;
    ComplexMatrix coeff(da, db, rearranged.vec);
    auto sv = linalg::svd(coeff).singular_values;
    std::vector<double> lam(sv.size());
    double s = 0.0;
    for (std::size_t i = 0; i < sv.size(); ++i) {
        lam[i] = sv[i] * sv[i];
        s += lam[i];
    }
    for (auto& x : lam) x /= s; // remove rounding drift
    return SchmidtSpectrum::descending(std::move(lam));
}

// ---- entropies and distances -------------------------------------------------

double shannon_entropy(const std::vector<double>& p, bool bits) {
    const double floor = tolerances().psd_floor;
    double s = 0.0;
    for (double w : p) {
        if (w < floor) throw std::invalid_argument("shannon_entropy: negative weight beyond tolerance");
        if (w > 0.0) s -= w * std::log(w);
    }
    return bits ? s / std::log(2.0) : s;
}

double von_neumann_entropy(const DensityMatrix& rho, bool bits) {
    auto w = linalg::eigvals_hermitian(rho.mat);
    for (auto& x : w)
        if (x < 0.0 && x >= tolerances().psd_floor) x = 0.0;
    return shannon_entropy(w, bits);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dims != b.dims) throw std::invalid_argument("trace_distance: factorizations differ");
    double d = 0.5 * linalg::trace_norm_hermitian(a.mat - b.mat);
    return std::min(d, 1.0);
}

double fidelity_pure(const PureState& psi, const DensityMatrix& rho) {
    if (psi.dim() != rho.dim()) throw std::invalid_argument("fidelity_pure: dimension mismatch");
    auto rv = rho.mat.apply(psi.vec);
    cdouble acc = 0.0;
    for (std::size_t i = 0; i < rv.size(); ++i) acc += std::conj(psi.vec[i]) * rv[i];
    return acc.real();
}

// ---- Haar sampling ------------------------------------------------------------

PureState haar_random_pure(std::size_t d, Rng& rng) {
    if (d == 0) throw std::invalid_argument("haar_random_pure: d must be >= 1");
    std::vector<cdouble> v(d);
    double n2 = 0.0;
    for (auto& z : v) {
        z = rng.complex_normal();
        n2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : v) z *= inv;
    return PureState(std::move(v), {d});
}

PureState haar_random_pure(std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_pure(d, rng);
}

ComplexMatrix haar_random_unitary(std::size_t d, Rng& rng) {
    // QR of a Ginibre matrix; rescaling R's diagonal phases makes the
    // distribution Haar (Mezzadri's recipe). Gram-Schmidt keeps us
    // independent of Eigen's QR pivoting details.
    std::vector<std::vector<cdouble>> cols(d, std::vector<cdouble>(d));
    for (auto& c : cols)
        for (auto& z : c) z = rng.complex_normal();
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cdouble ip = 0.0;
            for (std::size_t i = 0; i < d; ++i) ip += std::conj(cols[k][i]) * cols[j][i];
            for (std::size_t i = 0; i < d; ++i) cols[j][i] -= ip * cols[k][i];
        }
        double n2 = 0.0;
        for (const auto& z : cols[j]) n2 += std::norm(z);
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& z : cols[j]) z *= inv;
    }
    ComplexMatrix u(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) u(i, j) = cols[j][i];
    return u;
}

DensityMatrix random_density_matrix(const Dims& dims, Rng& rng) {
    std::size_t d = dims_product(dims);
    ComplexMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
    ComplexMatrix m = g * g.adjoint();
    cdouble t = m.trace();
    m *= cdouble{1.0, 0.0} / t;
    // symmetrize away rounding
    ComplexMatrix h = (m + m.adjoint()) * cdouble{0.5, 0.0};
    return DensityMatrix(std::move(h), dims);
}

} // namespace qcat
