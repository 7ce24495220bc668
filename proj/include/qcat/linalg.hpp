// linalg.hpp — Hermitian eigendecomposition, SVD and trace norms on top of
// the ComplexMatrix substrate (Eigen backs the decompositions).

#pragma once

#include <vector>

#include "qcat/complex_matrix.hpp"

namespace qcat::linalg {

struct EigResult {
    std::vector<double> eigenvalues; // descending
    ComplexMatrix eigenvectors;      // columns, matching order
};

// a = V diag(w) V^dag with w descending. Precondition: a Hermitian within
// tolerances().hermiticity (throws std::invalid_argument otherwise);
// non-convergence throws numeric_error.
EigResult eig_hermitian(const ComplexMatrix& a);

// Eigenvalues only (descending); same preconditions.
std::vector<double> eigvals_hermitian(const ComplexMatrix& a);

struct SvdResult {
    ComplexMatrix u;                     // full
    std::vector<double> singular_values; // descending, >= 0
    ComplexMatrix v;                     // full; a = u diag(s) v^dag
};

SvdResult svd(const ComplexMatrix& a);

// ||a||_1 = sum |eigenvalues| for Hermitian a (unnormalized).
double trace_norm_hermitian(const ComplexMatrix& a);

// m^{-1/2} for positive definite Hermitian m.
ComplexMatrix inv_sqrt_psd(const ComplexMatrix& m);

} // namespace qcat::linalg
