// complex_matrix.hpp — dense complex matrix, row-major storage.
// The substrate for every state and operator in the library.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcat {

using cdouble = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;

    // Zero-initialized rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    // Takes entries in row-major order; size must equal rows*cols and all
    // entries must be finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diag(const std::vector<double>& d);
    static ComplexMatrix diag(const std::vector<cdouble>& d);
    // Column vector |v><w| outer product.
    static ComplexMatrix outer(const std::vector<cdouble>& v, const std::vector<cdouble>& w);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cdouble& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cdouble& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    cdouble* data() { return data_.data(); }
    const cdouble* data() const { return data_.data(); }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    cdouble trace() const;
    double max_abs() const;
    double frobenius_norm() const;

    // max |A - A^dag| over entries; 0 for empty.
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return is_square() && hermiticity_defect() <= tol; }
    bool is_unitary(double tol) const;

    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cdouble s);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cdouble s) { return a *= s; }
    friend ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }

    // Matrix product (delegates to kernels::matmul).
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    // Matrix-vector product.
    std::vector<cdouble> apply(const std::vector<cdouble>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

} // namespace qcat
