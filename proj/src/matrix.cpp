#include "dskit/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace dskit {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t a, std::size_t b) {
    Matrix m(n, n);
    m(a, b) = Scalar(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

bool Matrix::is_scalar_multiple_of_identity() const {
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && !(*this)(r, c).is_zero()) return false;
            if (r == c && !((*this)(r, c) == (*this)(0, 0))) return false;
        }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& v : data_) v *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch in *");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
        }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& v : m.data_) v = -v;
    return m;
}

Scalar Matrix::trace() const {
    Scalar t;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
    return t;
}

Scalar Matrix::determinant() const {
    if (!square()) throw std::invalid_argument("determinant of non-square matrix");
    Matrix m = *this;
    Scalar det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return Scalar(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m(r, col).is_zero()) continue;
            Scalar f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        Scalar inv = Scalar(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Scalar f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return row_reduce(m).size();
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::power(unsigned k) const {
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::optional<std::vector<Scalar>> solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
    const std::size_t n = a.rows();
    if (!a.square() || b.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
    Matrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
    std::vector<Scalar> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
    return x;
}

std::optional<Matrix> solve_sylvester(const Matrix& c, const Matrix& d, const Matrix& rhs) {
    const std::size_t n = c.rows();
    // Unknown X(i,j) sits at index i*n + j.
    Matrix op(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                op(row, k * n + j) += c(i, k);
                op(row, i * n + k) -= d(k, j);
            }
        }
    std::vector<Scalar> b(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i * n + j] = rhs(i, j);
    auto x = solve_linear(op, b);
    if (!x) return std::nullopt;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = (*x)[i * n + j];
    return out;
}

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar(1);
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] >= n) throw std::domain_error("matrix is singular");
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    return out;
}

}  // namespace dskit
