#pragma once

#include <utility>
#include <vector>

#include "dskit/matrix.hpp"
#include "dskit/scalar.hpp"

namespace dskit {

/// Univariate polynomial over Q(i), coefficients from the constant term up.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs);

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Scalar& leading() const { return coeffs_.back(); }

    Scalar operator()(const Scalar& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Quotient and remainder.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

Polynomial gcd(Polynomial a, Polynomial b);

Polynomial characteristic_polynomial(const Matrix& m);

/// Distinct roots with multiplicities. Throws NotInScalarField when some root
/// is not a Gaussian rational.
std::vector<std::pair<Scalar, int>> gaussian_rational_roots(const Polynomial& p);

/// Eigenvalues of a square matrix with algebraic multiplicities.
std::vector<std::pair<Scalar, int>> eigenvalues(const Matrix& m);

}  // namespace dskit
