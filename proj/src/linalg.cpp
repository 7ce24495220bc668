#include "qcat/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcat/errors.hpp"
#include "qcat/tolerances.hpp"

namespace qcat::linalg {

namespace {

using EMat = Eigen::Matrix<cdouble, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EMat to_eigen(const ComplexMatrix& m) {
    return Eigen::Map<const EMat>(m.data(), static_cast<Eigen::Index>(m.rows()),
                                  static_cast<Eigen::Index>(m.cols()));
}

ComplexMatrix from_eigen(const EMat& e) {
    ComplexMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
    Eigen::Map<EMat>(m.data(), e.rows(), e.cols()) = e;
    return m;
}

void require_hermitian(const ComplexMatrix& a, const char* who) {
    if (!a.is_square()) throw std::invalid_argument(std::string(who) + ": matrix not square");
    if (a.hermiticity_defect() > tolerances().hermiticity)
        throw std::invalid_argument(std::string(who) + ": input not Hermitian within tolerance");
}

} // namespace

EigResult eig_hermitian(const ComplexMatrix& a) {
    require_hermitian(a, "eig_hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a));
    if (es.info() != Eigen::Success) throw numeric_error("eig_hermitian: eigensolver did not converge");
    const auto n = a.rows();
    EigResult r;
    r.eigenvalues.resize(n);
    ComplexMatrix vecs(n, n);
    // Eigen returns ascending order; flip to descending.
    for (std::size_t i = 0; i < n; ++i) {
        r.eigenvalues[i] = es.eigenvalues()(static_cast<Eigen::Index>(n - 1 - i));
        for (std::size_t rr = 0; rr < n; ++rr)
            vecs(rr, i) = es.eigenvectors()(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(n - 1 - i));
    }
    r.eigenvectors = std::move(vecs);
    return r;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& a) {
    require_hermitian(a, "eigvals_hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw numeric_error("eigvals_hermitian: eigensolver did not converge");
    const auto n = a.rows();
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = es.eigenvalues()(static_cast<Eigen::Index>(n - 1 - i));
    return w;
}

SvdResult svd(const ComplexMatrix& a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> s(to_eigen(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult r;
    const auto k = std::min(a.rows(), a.cols());
    r.singular_values.resize(k);
    for (std::size_t i = 0; i < k; ++i) r.singular_values[i] = s.singularValues()(static_cast<Eigen::Index>(i));
    r.u = from_eigen(s.matrixU());
    r.v = from_eigen(s.matrixV());
    return r;
}

double trace_norm_hermitian(const ComplexMatrix& a) {
    auto w = eigvals_hermitian(a);
    double s = 0.0;
    for (double x : w) s += std::abs(x);
    return s;
}

ComplexMatrix inv_sqrt_psd(const ComplexMatrix& m) {
    auto e = eig_hermitian(m);
    const std::size_t n = m.rows();
    for (double w : e.eigenvalues)
        if (w <= 0.0) throw numeric_error("inv_sqrt_psd: matrix not positive definite");
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = 1.0 / std::sqrt(e.eigenvalues[i]);
    return e.eigenvectors * d * e.eigenvectors.adjoint();
}

} // namespace qcat::linalg
