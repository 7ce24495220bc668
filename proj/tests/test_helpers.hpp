// test_helpers.hpp — shared helpers for the unit suites.

#pragma once

#include <cmath>
#include <vector>

#include "qcat/complex_matrix.hpp"
#include "qcat/qstate.hpp"

namespace qcat::test {

inline ComplexMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.complex_normal();
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
    ComplexMatrix g = random_matrix(n, n, rng);
    return (g + g.adjoint()) * cdouble{0.5, 0.0};
}

inline ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

// Pure state sum_i sqrt(lam_i) |ii> on d (x) d.
inline PureState schmidt_basis_state(const std::vector<double>& lam, std::size_t d) {
    std::vector<cdouble> v(d * d, cdouble{0.0, 0.0});
    for (std::size_t i = 0; i < lam.size(); ++i) v[i * d + i] = std::sqrt(lam[i]);
    return PureState(std::move(v), {d, d});
}

} // namespace qcat::test
