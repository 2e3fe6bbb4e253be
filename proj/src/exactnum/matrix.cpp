#include "revmap/matrix.hpp"

#include <utility>

#include "revmap/errors.hpp"

namespace revmap {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw dimension_error(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw dimension_error("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw dimension_error("Matrix::from_rows: row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw dimension_error("Matrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "Matrix +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "Matrix -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw dimension_error("Matrix *: inner dimensions differ");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Scalar& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs(k, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& lhs, const Vector& rhs) {
    if (lhs.cols_ != rhs.size()) throw dimension_error("Matrix * vector: dimension mismatch");
    Vector out(lhs.rows_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            if (!lhs(i, k).is_zero() && !rhs[k].is_zero()) out[i] += lhs(i, k) * rhs[k];
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

Scalar Matrix::trace() const {
    if (!is_square()) throw dimension_error("trace of a non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Scalar Matrix::determinant() const {
    if (!is_square()) throw dimension_error("determinant of a non-square matrix");
    Matrix work = *this;
    const std::size_t n = rows_;
    Scalar det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Scalar();
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(work(pivot, c), work(col, c));
            det = -det;
        }
        const Scalar p = work(col, col);
        det *= p;
        const Scalar inv = p.inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (work(r, col).is_zero()) continue;
            const Scalar factor = work(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) {
                if (!work(col, c).is_zero()) work(r, c) -= factor * work(col, c);
            }
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw dimension_error("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix augmented(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented(r, c) = (*this)(r, c);
        augmented(r, n + r) = 1;
    }
    const RrefResult red = rref(augmented);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= red.pivot_columns.size() || red.pivot_columns[i] != i) {
            throw singular_matrix_error("matrix is singular");
        }
    }
    return red.reduced.block(0, n, n, n);
}

Matrix Matrix::power(long exponent) const {
    if (!is_square()) throw dimension_error("power of a non-square matrix");
    Matrix base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    Matrix result = identity(rows_);
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& x = (*this)(r, c);
            if (r == c ? !(x == Scalar(1)) : !x.is_zero()) return false;
        }
    }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw dimension_error("Matrix::block out of range");
    Matrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    }
    return out;
}

std::string Matrix::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) out += ", ";
            out += (*this)(r, c).to_string();
        }
        out += "]";
    }
    return out + "]";
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

Vector vec(const Matrix& m) {
    Vector out(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) out[i + j * m.rows()] = m(i, j);
    }
    return out;
}

Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw dimension_error("unvec: length mismatch");
    Matrix out(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) out(i, j) = v[i + j * rows];
    }
    return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
    }
    return out;
}

RrefResult rref(const Matrix& m) {
    RrefResult out{m, 0, {}};
    Matrix& w = out.reduced;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < w.cols() && lead_row < w.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < w.rows() && w(pivot, col).is_zero()) ++pivot;
        if (pivot == w.rows()) continue;
        if (pivot != lead_row) {
            for (std::size_t c = 0; c < w.cols(); ++c) std::swap(w(pivot, c), w(lead_row, c));
        }
        const Scalar inv = w(lead_row, col).inverse();
        for (std::size_t c = col; c < w.cols(); ++c) {
            if (!w(lead_row, c).is_zero()) w(lead_row, c) *= inv;
        }
        for (std::size_t r = 0; r < w.rows(); ++r) {
            if (r == lead_row || w(r, col).is_zero()) continue;
            const Scalar factor = w(r, col);
            for (std::size_t c = col; c < w.cols(); ++c) {
                if (!w(lead_row, c).is_zero()) w(r, c) -= factor * w(lead_row, c);
            }
        }
        out.pivot_columns.push_back(col);
        ++lead_row;
    }
    out.rank = lead_row;
    return out;
}

Vector operator+(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw dimension_error("vector +: length mismatch");
    Vector out(x);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
    return out;
}

Vector operator-(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw dimension_error("vector -: length mismatch");
    Vector out(x);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
    return out;
}

Vector operator*(const Scalar& s, const Vector& x) {
    Vector out(x);
    for (auto& v : out) v *= s;
    return out;
}

bool is_zero_vector(const Vector& x) {
    for (const auto& v : x) {
        if (!v.is_zero()) return false;
    }
    return true;
}

std::string to_string(const Vector& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) out += ", ";
        out += x[i].to_string();
    }
    return out + ")";
}

}  // namespace revmap
