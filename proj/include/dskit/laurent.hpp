#pragma once

#include <map>
#include <optional>
#include <string>

#include "dskit/matrix.hpp"

namespace dskit {

/// Truncated Laurent series sum_k M_k z^k with n x n coefficients. Degrees at or
/// above `trunc` are unknown; an absent `trunc` means the series is an exact
/// Laurent polynomial. Zero coefficients are never stored.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    explicit LaurentMatrix(std::size_t n, std::optional<int> trunc = std::nullopt) : n_(n), trunc_(trunc) {}

    static LaurentMatrix identity(std::size_t n, std::optional<int> trunc = std::nullopt);
    static LaurentMatrix monomial(const Matrix& m, int degree, std::optional<int> trunc = std::nullopt);

    std::size_t n() const { return n_; }
    std::optional<int> trunc() const { return trunc_; }
    bool exact() const { return !trunc_.has_value(); }
    /// True when the coefficient of z^degree is known.
    bool known(int degree) const { return !trunc_ || degree < *trunc_; }

    const std::map<int, Matrix>& terms() const { return terms_; }
    /// Known coefficient of z^degree; throws InputError beyond the truncation order.
    Matrix coeff(int degree) const;
    /// Adds m z^degree; throws if degree is not below trunc.
    void add_term(int degree, const Matrix& m);

    /// True when every known coefficient vanishes.
    bool is_zero() const { return terms_.empty(); }
    /// Lowest degree with a nonzero coefficient; nullopt for zero.
    std::optional<int> min_degree() const;

    LaurentMatrix truncated(int order) const;

    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    LaurentMatrix power(unsigned k) const;
    /// z d/dz applied termwise.
    LaurentMatrix euler_derivative() const;

    friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::optional<int> trunc_;
    std::map<int, Matrix> terms_;
};

/// omega_n = sum e_{i,i+1} + z e_{n,1}; omega_n^n = z.
LaurentMatrix omega(std::size_t n);
/// omega_n^{-1} = sum e_{i+1,i} + z^{-1} e_{1,n}.
LaurentMatrix omega_inverse(std::size_t n);

}  // namespace dskit
