#include "dskit/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dskit/errors.hpp"

namespace dskit {

namespace {

std::optional<int> min_trunc(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

LaurentMatrix LaurentMatrix::identity(std::size_t n, std::optional<int> trunc) {
    return monomial(Matrix::identity(n), 0, trunc);
}

LaurentMatrix LaurentMatrix::monomial(const Matrix& m, int degree, std::optional<int> trunc) {
    LaurentMatrix out(m.rows(), trunc);
    if (out.known(degree)) out.add_term(degree, m);
    return out;
}

Matrix LaurentMatrix::coeff(int degree) const {
    if (!known(degree))
        throw InputError("coefficient of z^" + std::to_string(degree) + " is beyond the truncation order " +
                         std::to_string(*trunc_));
    auto it = terms_.find(degree);
    return it == terms_.end() ? Matrix::zero(n_) : it->second;
}

void LaurentMatrix::add_term(int degree, const Matrix& m) {
    if (m.rows() != n_ || m.cols() != n_) throw std::invalid_argument("Laurent coefficient has wrong size");
    if (!known(degree)) throw std::invalid_argument("term at or beyond truncation order");
    auto [it, inserted] = terms_.try_emplace(degree, m);
    if (!inserted) it->second += m;
    if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> LaurentMatrix::min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

LaurentMatrix LaurentMatrix::truncated(int order) const {
    LaurentMatrix out(n_, min_trunc(trunc_, order));
    for (const auto& [deg, m] : terms_)
        if (out.known(deg)) out.add_term(deg, m);
    return out;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Laurent size mismatch");
    LaurentMatrix out(a.n_, min_trunc(a.trunc_, b.trunc_));
    for (const auto* src : {&a, &b})
        for (const auto& [deg, m] : src->terms_)
            if (out.known(deg)) out.add_term(deg, m);
    return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
    LaurentMatrix neg(b.n_, b.trunc_);
    for (const auto& [deg, m] : b.terms_) neg.add_term(deg, -m);
    return a + neg;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Laurent size mismatch");
    // Unknown parts start at trunc; a series' lowest degree counts its unknown tail.
    auto lowest = [](const LaurentMatrix& m) -> std::optional<int> {
        if (!m.is_zero()) return m.min_degree();
        return m.trunc_;
    };
    std::optional<int> trunc;
    if (a.trunc_) {
        if (auto vb = lowest(b)) trunc = *a.trunc_ + *vb;
    }
    if (b.trunc_) {
        if (auto va = lowest(a)) trunc = min_trunc(trunc, *b.trunc_ + *va);
    }
    LaurentMatrix out(a.n_, trunc);
    for (const auto& [da, ma] : a.terms_)
        for (const auto& [db, mb] : b.terms_)
            if (out.known(da + db)) out.add_term(da + db, ma * mb);
    return out;
}

LaurentMatrix LaurentMatrix::power(unsigned k) const {
    LaurentMatrix result = identity(n_);
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
}

LaurentMatrix LaurentMatrix::euler_derivative() const {
    LaurentMatrix out(n_, trunc_);
    for (const auto& [deg, m] : terms_)
        if (deg != 0) out.add_term(deg, m * Scalar(deg));
    return out;
}

std::string LaurentMatrix::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, m] : terms_) {
        os << (first ? "" : " + ") << m.to_string() << " z^" << deg;
        first = false;
    }
    if (first) os << "0";
    if (trunc_) os << " + O(z^" << *trunc_ << ")";
    return os.str();
}

LaurentMatrix omega(std::size_t n) {
    LaurentMatrix w(n);
    Matrix shift = Matrix::zero(n);
    for (std::size_t i = 0; i + 1 < n; ++i) shift(i, i + 1) = Scalar(1);
    w.add_term(0, shift);
    w.add_term(1, Matrix::unit(n, n - 1, 0));
    return w;
}

LaurentMatrix omega_inverse(std::size_t n) {
    LaurentMatrix w(n);
    Matrix shift = Matrix::zero(n);
    for (std::size_t i = 0; i + 1 < n; ++i) shift(i + 1, i) = Scalar(1);
    w.add_term(0, shift);
    w.add_term(-1, Matrix::unit(n, 0, n - 1));
    return w;
}

}  // namespace dskit
