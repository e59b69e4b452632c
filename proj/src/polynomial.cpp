#include "dskit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "dskit/errors.hpp"

namespace dskit {

namespace {

using Complex = std::complex<long double>;

// Best continued-fraction approximation of x with denominator at most max_den.
mpq_class rationalize(long double x, long max_den = 1'000'000) {
    const bool negative = x < 0;
    long double rest = negative ? -x : x;
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpq_class best = 0;
    for (int step = 0; step < 64; ++step) {
        long double whole = std::floor(rest);
        if (whole > 1e15L) break;
        mpz_class a = static_cast<long>(whole);
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > max_den) break;
        best = mpq_class(p2, q2);
        long double approx = static_cast<long double>(p2.get_d()) / static_cast<long double>(q2.get_d());
        if (std::fabs(approx - (negative ? -x : x)) <= 1e-12L * std::max(1.0L, std::fabs(x))) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        long double frac = rest - whole;
        if (frac < 1e-18L) break;
        rest = 1.0L / frac;
    }
    best.canonicalize();
    return negative ? mpq_class(-best) : best;
}

Complex to_complex(const Scalar& s) {
    return {static_cast<long double>(s.re().get_d()), static_cast<long double>(s.im().get_d())};
}

// Simultaneous root approximation (Aberth-Ehrlich) for a squarefree polynomial.
std::vector<Complex> approximate_roots(const Polynomial& p) {
    const int n = p.degree();
    std::vector<Complex> c;
    for (const auto& s : p.coeffs()) c.push_back(to_complex(s));
    const Complex lead = c.back();
    long double radius = 0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(k)] / lead));
    radius += 1;
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(radius * 0.5L, 2.0L * 3.14159265358979323846L * k / n + 0.4L);

    auto eval = [&](Complex x, Complex& deriv) {
        Complex v = 0;
        deriv = 0;
        for (int k = n; k >= 0; --k) {
            deriv = deriv * x + v;
            v = v * x + c[static_cast<std::size_t>(k)];
        }
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        long double largest_step = 0;
        for (int k = 0; k < n; ++k) {
            Complex d;
            Complex v = eval(z[static_cast<std::size_t>(k)], d);
            if (v == Complex(0)) continue;
            Complex ratio = v / d;
            Complex sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0L / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            Complex step = ratio / (1.0L - ratio * sum);
            z[static_cast<std::size_t>(k)] -= step;
            largest_step = std::max(largest_step, std::abs(step));
        }
        if (largest_step < 1e-17L) break;
    }
    return z;
}

}  // namespace

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::operator()(const Scalar& x) const {
    Scalar v;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

Polynomial Polynomial::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Scalar(static_cast<long>(k)));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    std::vector<Scalar> c = coeffs_;
    Scalar inv = Scalar(1) / leading();
    for (auto& v : c) v *= inv;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> rem = a.coeffs_;
    const int db = b.degree();
    std::vector<Scalar> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
    for (int k = a.degree(); k >= db; --k) {
        const Scalar& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        Scalar f = top / b.leading();
        quot[static_cast<std::size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: c_n = 1, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    std::vector<Scalar> c(n + 1);
    c[n] = Scalar(1);
    Matrix mk = Matrix::zero(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + Matrix::identity(n) * c[n - k + 1];
        c[n - k] = -(m * mk).trace() / Scalar(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

std::vector<std::pair<Scalar, int>> gaussian_rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    std::vector<std::pair<Scalar, int>> roots;
    if (p.degree() == 0) return roots;
    Polynomial squarefree = divmod(p, gcd(p, p.derivative())).first.monic();
    Polynomial remaining = squarefree;
    for (const Complex& z : approximate_roots(squarefree)) {
        Scalar candidate(rationalize(z.real()), rationalize(z.imag()));
        if (!remaining(candidate).is_zero()) continue;
        remaining = divmod(remaining, Polynomial({-candidate, Scalar(1)})).first;
        int multiplicity = 0;
        Polynomial rest = p;
        for (;;) {
            auto [q, r] = divmod(rest, Polynomial({-candidate, Scalar(1)}));
            if (!r.is_zero()) break;
            ++multiplicity;
            rest = std::move(q);
        }
        roots.emplace_back(std::move(candidate), multiplicity);
    }
    if (remaining.degree() > 0)
        throw NotInScalarField("characteristic polynomial has roots outside Q(i); exact eigenvalues unavailable");
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::vector<std::pair<Scalar, int>> eigenvalues(const Matrix& m) {
    return gaussian_rational_roots(characteristic_polynomial(m));
}

}  // namespace dskit
