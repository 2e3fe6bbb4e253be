#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "revmap/scalar.hpp"

namespace revmap {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Scalar.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
    static Matrix diagonal(const Vector& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Scalar& s) { return lhs *= s; }
    friend Matrix operator*(const Scalar& s, Matrix rhs) { return rhs *= s; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Vector operator*(const Matrix& lhs, const Vector& rhs);
    Matrix operator-() const;

    friend bool operator==(const Matrix& x, const Matrix& y) = default;

    Matrix transpose() const;
    Scalar trace() const;
    Scalar determinant() const;
    bool is_invertible() const { return !determinant().is_zero(); }
    /// Throws singular_matrix_error when the matrix has no inverse.
    Matrix inverse() const;
    /// Integer power; negative exponents go through the inverse.
    Matrix power(long exponent) const;
    bool is_identity() const;
    bool is_zero() const;

    /// Submatrix of rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);
/// Column-stacking vectorisation: vec(M)[i + j*rows] = M(i, j).
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols);
/// Block diagonal diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(const Scalar& s, const Vector& x);
bool is_zero_vector(const Vector& x);
std::string to_string(const Vector& x);

}  // namespace revmap
