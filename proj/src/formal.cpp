#include "dskit/formal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dskit/errors.hpp"
#include "dskit/polynomial.hpp"

namespace dskit {

StandardParahoric::StandardParahoric(int n, std::vector<int> j) : n_(n), j_(std::move(j)) {
    if (n < 1) throw InputError("n must be positive");
    std::sort(j_.begin(), j_.end());
    j_.erase(std::unique(j_.begin(), j_.end()), j_.end());
    if (j_.empty() || j_.front() != 0) throw InputError("J must contain 0");
    if (j_.back() >= n) throw InputError("J must lie in [0, n)");
}

StandardParahoric StandardParahoric::iwahori(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return StandardParahoric(n, all);
}

std::vector<int> StandardParahoric::block_sizes() const {
    std::vector<int> out;
    for (std::size_t t = 0; t < j_.size(); ++t) out.push_back((t + 1 < j_.size() ? j_[t + 1] : n_) - j_[t]);
    return out;
}

int StandardParahoric::lattice_exponent(int m, int c) const {
    const int e = period();
    int q = m / e, rm = m % e;
    if (rm < 0) {
        rm += e;
        --q;
    }
    return q + (c > n_ - j_[static_cast<std::size_t>(rm)] ? 1 : 0);
}

int StandardParahoric::level(int c) const {
    int best = 0;
    for (int t = 0; t < period(); ++t)
        if (c <= n_ - j_[static_cast<std::size_t>(t)]) best = t;
    return best;
}

std::string StandardParahoric::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t t = 0; t < j_.size(); ++t) os << (t ? "," : "") << j_[t];
    os << "}";
    return os.str();
}

int filtration_degree(const StandardParahoric& p, int a, int b, int k) {
    const int e = p.period();
    if (a < 1 || b < 1 || a > p.n() || b > p.n()) throw InputError("matrix index out of range");
    auto contains = [&](int s) {
        // E_ab z^k sends z^x e_b to z^{x+k} e_a.
        for (int i = 0; i < e; ++i)
            if (k + p.lattice_exponent(i, b) < p.lattice_exponent(i + s, a)) return false;
        return true;
    };
    for (int s = e * (k + 2) - 1; s >= e * (k - 1); --s)
        if (contains(s)) return s;
    throw std::logic_error("filtration degree search left its bracket");
}

Stratum leading_stratum(const StandardParahoric& p, const FormalConnection& c) {
    const LaurentMatrix& m = c.matrix;
    if (static_cast<int>(m.n()) != p.n()) throw InputError("parahoric and connection sizes differ");
    if (m.is_zero()) throw InputError("connection matrix is zero");
    const int n = p.n();
    int lowest = 0;
    bool first = true;
    for (const auto& [deg, coeff] : m.terms())
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                if (!coeff(a - 1, b - 1).is_zero()) {
                    const int s = filtration_degree(p, a, b, deg);
                    if (first || s < lowest) lowest = s;
                    first = false;
                }
    Stratum st{p, -lowest, LaurentMatrix(m.n())};
    if (m.trunc()) {
        const int e = p.period();
        if (e * *m.trunc() - (e - 1) <= lowest)
            throw InputError("truncation order too low to determine the leading term", "/trunc");
    }
    for (const auto& [deg, coeff] : m.terms()) {
        Matrix lead(m.n(), m.n());
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                if (!coeff(a - 1, b - 1).is_zero() && filtration_degree(p, a, b, deg) == lowest)
                    lead(a - 1, b - 1) = coeff(a - 1, b - 1);
        if (!lead.is_zero()) st.leading.add_term(deg, lead);
    }
    return st;
}

bool is_fundamental(const Stratum& s) { return !s.leading.power(static_cast<unsigned>(s.parahoric.n())).is_zero(); }

std::string to_string(SlopeKind k) {
    switch (k) {
        case SlopeKind::CertifiedSlope: return "CertifiedSlope";
        case SlopeKind::UpperBoundOnly: return "UpperBoundOnly";
        case SlopeKind::RegularSingularCandidate: return "RegularSingularCandidate";
    }
    return "?";
}

SlopeResult certify_slope(const FormalConnection& c) {
    const LaurentMatrix& m = c.matrix;
    SlopeResult out;
    if (m.is_zero()) {
        if (m.trunc() && *m.trunc() < 0)
            throw InputError("truncation order too low to determine the leading term", "/trunc");
        return out;
    }
    if (*m.min_degree() >= 0) {
        if (m.trunc() && *m.trunc() < 0)
            throw InputError("truncation order too low to determine the leading term", "/trunc");
        return out;
    }
    const int n = static_cast<int>(m.n());
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> j{0};
        for (int t = 1; t < n; ++t)
            if (mask & (1u << (t - 1))) j.push_back(t);
        subsets.push_back(std::move(j));
    }
    std::sort(subsets.begin(), subsets.end());

    // depths first; the power test only runs until the shallowest fundamental stratum is found
    std::vector<Stratum> strata;
    strata.reserve(subsets.size());
    for (const auto& j : subsets) strata.push_back(leading_stratum(StandardParahoric(n, j), c));
    out.parahorics_scanned = strata.size();
    std::vector<std::size_t> order(strata.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return strata[a].depth() < strata[b].depth(); });
    out.kind = SlopeKind::UpperBoundOnly;
    out.value = strata[order.front()].depth();
    out.witness = strata[order.front()].parahoric;
    for (std::size_t i : order)
        if (is_fundamental(strata[i])) {
            out.kind = SlopeKind::CertifiedSlope;
            out.value = strata[i].depth();
            out.witness = strata[i].parahoric;
            break;
        }
    return out;
}

bool is_nonresonant(const Matrix& b0) {
    const auto eig = eigenvalues(b0);
    for (std::size_t a = 0; a < eig.size(); ++a)
        for (std::size_t b = a + 1; b < eig.size(); ++b)
            if ((eig[a].first - eig[b].first).is_nonzero_integer()) return false;
    return true;
}

LaurentMatrix regsing_normalize(const FormalConnection& c, int order) {
    const LaurentMatrix& m = c.matrix;
    const std::size_t n = m.n();
    if (order < 1) throw InputError("order must be positive", "/order");
    if (auto lo = m.min_degree(); lo && *lo < 0) throw InputError("connection has a pole of order above one");
    if (m.trunc() && *m.trunc() < order) throw InputError("input known only below z^" + std::to_string(*m.trunc()), "/trunc");
    const Matrix b0 = m.coeff(0);
    if (!is_nonresonant(b0)) throw InputError("B_0 is resonant");

    std::vector<Matrix> g{Matrix::identity(n)};
    for (int k = 1; k < order; ++k) {
        Matrix rhs(n, n);
        for (int i = 0; i < k; ++i) rhs += g[static_cast<std::size_t>(i)] * m.coeff(k - i);
        auto gk = solve_sylvester(b0 + Matrix::identity(n) * Scalar(k), b0, rhs);
        if (!gk) throw std::logic_error("Sylvester operator singular for nonresonant B_0");
        g.push_back(std::move(*gk));
    }
    LaurentMatrix out(n, order);
    for (int k = 0; k < order; ++k) {
        const Matrix& gk = g[static_cast<std::size_t>(k)];
        if (!gk.is_zero()) out.add_term(k, gk);
    }
    return out;
}

LaurentMatrix CoxeterFormalType::matrix() const {
    const LaurentMatrix w = omega_inverse(static_cast<std::size_t>(n));
    LaurentMatrix out(static_cast<std::size_t>(n));
    LaurentMatrix pw = LaurentMatrix::identity(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero())
            out = out + LaurentMatrix::monomial(Matrix::identity(static_cast<std::size_t>(n)) * p[k], 0) * pw;
        pw = pw * w;
    }
    return out;
}

CoxeterFormalType coxeter_canonical_type(int n, int r, std::vector<Scalar> p) {
    if (n < 1) throw InputError("n must be positive", "/n");
    if (r < 1) throw InputError("r must be positive", "/r");
    if (std::gcd(n, r) != 1) throw InputError("gcd(r, n) must be 1", "/r");
    if (static_cast<int>(p.size()) != r + 1 || p.back().is_zero())
        throw InputError("p must have degree exactly r", "/p");
    return CoxeterFormalType{n, r, std::move(p)};
}

}  // namespace dskit
