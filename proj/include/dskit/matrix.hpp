#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dskit/scalar.hpp"

namespace dskit {

/// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix zero(std::size_t n) { return Matrix(n, n); }
    static Matrix identity(std::size_t n);
    /// Unit matrix E_{ab} (0-based indices).
    static Matrix unit(std::size_t n, std::size_t a, std::size_t b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_scalar_multiple_of_identity() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

    Scalar trace() const;
    Scalar determinant() const;
    std::size_t rank() const;
    Matrix transpose() const;
    Matrix power(unsigned k) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

/// Unique solution of A x = b for square nonsingular A, nullopt if singular.
std::optional<std::vector<Scalar>> solve_linear(const Matrix& a, const std::vector<Scalar>& b);

/// Solves C X - X D = R for X. Nullopt when the operator is singular
/// (C and D share an eigenvalue).
std::optional<Matrix> solve_sylvester(const Matrix& c, const Matrix& d, const Matrix& rhs);

Matrix inverse(const Matrix& m);

}  // namespace dskit
