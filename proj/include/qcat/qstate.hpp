// qstate.hpp — density matrices and pure states with declared tensor
// factorization, partial trace, Schmidt decomposition, entropies, trace
// distance and Haar sampling.

#pragma once

#include <cstddef>
#include <vector>

#include "qcat/complex_matrix.hpp"
#include "qcat/rng.hpp"

namespace qcat {

using Dims = std::vector<std::size_t>;

// Positive unit-trace operator over a declared factorization. Construction
// checks shape, Hermiticity and trace; positivity (min eigenvalue >=
// -1e-10) is an eigensolve, so it lives in full_validate() and is invoked
// at protocol boundaries and in tests rather than per intermediate.
struct DensityMatrix {
    ComplexMatrix mat;
    Dims dims;

    // Trivial one-dimensional state; placeholder in default-constructed reports.
    DensityMatrix() : mat(ComplexMatrix::identity(1)), dims{1} {}
    DensityMatrix(ComplexMatrix m, Dims d);

    std::size_t dim() const { return mat.rows(); }
    std::size_t num_factors() const { return dims.size(); }

    void full_validate() const; // adds the positivity check

    static DensityMatrix maximally_mixed(std::size_t d);
};

struct PureState {
    std::vector<cdouble> vec;
    Dims dims;

    PureState(std::vector<cdouble> v, Dims d);

    std::size_t dim() const { return vec.size(); }

    static PureState basis_state(std::size_t d, std::size_t index);
};

// Descending probability vector of squared Schmidt coefficients. The
// descending() factory sorts; the plain constructor keeps the caller's
// order (majorization comparisons trust the stored order — deliberately,
// see majorizes()).
struct SchmidtSpectrum {
    std::vector<double> lambdas;

    explicit SchmidtSpectrum(std::vector<double> l);
    static SchmidtSpectrum descending(std::vector<double> l);

    std::size_t size() const { return lambdas.size(); }
    bool is_descending() const;
};

DensityMatrix from_pure(const PureState& psi);

// Tensor product combining factor lists; checks the dimension cap.
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);
PureState kron(const PureState& a, const PureState& b);
DensityMatrix n_copies(const DensityMatrix& rho, std::size_t n);

DensityMatrix permute_factors(const DensityMatrix& rho, const std::vector<std::size_t>& perm);
PureState permute_factors(const PureState& psi, const std::vector<std::size_t>& perm);

// Reduced state over the kept factors (ascending index set).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

// Squared singular values of the coefficient matrix across the cut
// (a_factors vs the rest), descending and renormalized.
SchmidtSpectrum schmidt(const PureState& psi, const std::vector<std::size_t>& a_factors);

// -sum w log w over eigenvalues, 0 log 0 = 0. Eigenvalues in
// [psd_floor, 0) are clamped; anything lower raises std::invalid_argument.
double von_neumann_entropy(const DensityMatrix& rho, bool bits = false);

// Entropy of a probability vector (same clamping rules).
double shannon_entropy(const std::vector<double>& p, bool bits = false);

// (1/2)||a - b||_1, in [0, 1].
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// <psi| rho |psi>
double fidelity_pure(const PureState& psi, const DensityMatrix& rho);

PureState haar_random_pure(std::size_t d, Rng& rng);
PureState haar_random_pure(std::size_t d, std::uint64_t seed);

// Haar-distributed unitary via QR of a Ginibre matrix with phase fixing.
ComplexMatrix haar_random_unitary(std::size_t d, Rng& rng);

// Random full-rank density matrix (Ginibre G G^dag normalized).
DensityMatrix random_density_matrix(const Dims& dims, Rng& rng);

} // namespace qcat
