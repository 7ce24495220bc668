// kernels.hpp — dense tensor kernels: matrix product, Kronecker product,
// tensor-factor permutation and partial trace.
//
// Every kernel comes in two flavours: the OpenMP-parallel default and a
// plain *_serial reference. The references are the oracles in the kernel
// tests and the baseline in the qcat_bench benchmark; everything else in
// the library calls the parallel entry points.

#pragma once

#include <cstddef>
#include <vector>

#include "qcat/complex_matrix.hpp"

namespace qcat::kernels {

// c = a * b
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);

// Standard Kronecker product; dimensions multiply. Throws
// dimension_limit_error when rows*rows or cols*cols exceeds the cap.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_serial(const ComplexMatrix& a, const ComplexMatrix& b);

// Reorder the tensor factors of an operator on H_0 (x) ... (x) H_{k-1}.
// perm[p] names the old factor that lands at position p (numpy transpose
// convention); the same permutation is applied to row and column indices.
ComplexMatrix permute_factors(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& perm);
ComplexMatrix permute_factors_serial(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                                     const std::vector<std::size_t>& perm);

// Same reordering for a state vector.
std::vector<cdouble> permute_factors_vec(const std::vector<cdouble>& v,
                                         const std::vector<std::size_t>& dims,
                                         const std::vector<std::size_t>& perm);

// Partial trace keeping the listed factors (ascending, duplicate-free).
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);
ComplexMatrix partial_trace_serial(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                                   const std::vector<std::size_t>& keep);

// (a_op (x) b_op) rho (a_op (x) b_op)^dag on a bipartite operator stored
// cut-major (row index = a-index * db + b-index). Avoids materializing the
// Kronecker factor; the serial reference does exactly that instead.
ComplexMatrix sandwich_cut(const ComplexMatrix& a_op, const ComplexMatrix& b_op,
                           const ComplexMatrix& rho);
ComplexMatrix sandwich_cut_serial(const ComplexMatrix& a_op, const ComplexMatrix& b_op,
                                  const ComplexMatrix& rho);

// (a_op (x) b_op) m without forming the Kronecker product.
ComplexMatrix apply_cut_left(const ComplexMatrix& a_op, const ComplexMatrix& b_op,
                             const ComplexMatrix& m);

// Composite-index offset table: entry r is the row offset of the
// multi-index of r under `dims` after permutation `perm`.
std::vector<std::size_t> permutation_offsets(const std::vector<std::size_t>& dims,
                                             const std::vector<std::size_t>& perm);

std::size_t checked_total_dim(const std::vector<std::size_t>& dims);

} // namespace qcat::kernels
