#include "dskit/coxeter.hpp"

#include <numeric>

#include "dskit/errors.hpp"

namespace dskit {

CharPolySpec::CharPolySpec(std::vector<std::pair<Scalar, int>> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw InputError("characteristic polynomial needs a factor");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second < 1) throw InputError("multiplicity must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if ((factors_[i].first - factors_[j].first).is_integer())
                throw InputError("roots must be distinct modulo Z");
    }
}

CharPolySpec CharPolySpec::of(const OrbitSpec& o) {
    std::vector<std::pair<Scalar, int>> f;
    for (const auto& b : o.blocks()) f.emplace_back(b.eigenvalue, b.jordan.weight());
    return CharPolySpec(std::move(f));
}

int CharPolySpec::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

OrbitSpec ds_generator(int r, const CharPolySpec& q) {
    if (r < 1) throw InputError("r must be positive", "/r");
    std::vector<EigenBlock> blocks;
    for (const auto& [c, m] : q.factors()) blocks.push_back({c, min_partition_with_r_parts(r, m)});
    return OrbitSpec(q.degree(), std::move(blocks));
}

CoxeterDecision coxeter_ds_decide(const CoxeterFormalType& f, const OrbitSpec& o) {
    if (o.n() != f.n) throw InputError("orbit size differs from n", "/orbit/n");
    if (!o.is_nonresonant()) throw InputError("orbit is resonant", "/orbit");
    CoxeterDecision d;
    d.generator = ds_generator(f.r, CharPolySpec::of(o));
    d.trace_condition = f.p0() * Scalar(f.n) == -o.trace();
    d.in_filter = true;
    for (std::size_t i = 0; i < o.blocks().size(); ++i) {
        const Partition& mu = o.blocks()[i].jordan;
        const bool dom = dominance_leq(d.generator.blocks()[i].jordan, mu);
        if (dom != (mu.length() <= f.r)) throw std::logic_error("filter test disagrees with the block count");
        d.in_filter = d.in_filter && dom;
    }
    d.exists = d.trace_condition && d.in_filter;
    return d;
}

namespace {

void require_nilpotent_in_filter(int n, int r, const OrbitSpec& o) {
    if (n < 1 || r < 1) throw InputError("n and r must be positive");
    if (o.n() != n) throw InputError("orbit size differs from n", "/orbit/n");
    if (!o.is_nilpotent()) throw InputError("orbit must be nilpotent", "/orbit");
    if (o.blocks()[0].jordan.length() > r) throw InputError("orbit has more than r Jordan blocks", "/orbit");
}

}  // namespace

int h1_dimension(int n, int r, const OrbitSpec& o) {
    require_nilpotent_in_filter(n, r, o);
    if (std::gcd(n, r) != 1) throw InputError("gcd(r, n) must be 1", "/r");
    const int h = orbit_dim(o) + (r - n - 1) * (n - 1);
    if (h < 0) throw std::logic_error("negative cohomology dimension");
    return h;
}

bool is_rigid_coxeter_gl(int n, int r, const OrbitSpec& o) {
    require_nilpotent_in_filter(n, r, o);
    if (o != ds_generator(r, CharPolySpec({{Scalar(0), n}}))) return false;
    return (n - 1) % r == 0 || (n + 1) % r == 0;
}

SimpleFamily parse_family(const std::string& s) {
    if (s == "A") return SimpleFamily::A;
    if (s == "B") return SimpleFamily::B;
    if (s == "C") return SimpleFamily::C;
    if (s == "D") return SimpleFamily::D;
    if (s == "E7") return SimpleFamily::E7;
    throw InputError("unknown root system type " + s, "/type");
}

std::string to_string(SimpleFamily f) {
    switch (f) {
        case SimpleFamily::A: return "A";
        case SimpleFamily::B: return "B";
        case SimpleFamily::C: return "C";
        case SimpleFamily::D: return "D";
        case SimpleFamily::E7: return "E7";
    }
    return "?";
}

int coxeter_number(SimpleFamily f, int rank) {
    const int min_rank[] = {1, 2, 3, 4, 7};
    if (f != SimpleFamily::E7 && rank < min_rank[static_cast<int>(f)])
        throw InputError("rank too small for type " + to_string(f), "/rank");
    switch (f) {
        case SimpleFamily::A: return rank + 1;
        case SimpleFamily::B:
        case SimpleFamily::C: return 2 * rank;
        case SimpleFamily::D: return 2 * rank - 2;
        case SimpleFamily::E7: return 18;
    }
    return 0;
}

bool rigid_table_simple_type(const SimpleTypeQuery& q, bool conjunction) {
    const int h = coxeter_number(q.family, q.rank);
    if (q.r < 1) throw InputError("r must be positive", "/r");
    if (std::gcd(q.r, h) != 1) throw InputError("r must be coprime to the Coxeter number", "/r");
    const int r = q.r;
    if (r == 1 || r == h + 1) return true;
    if (r > h) return false;
    auto div = [r](int x) { return x % r == 0; };
    auto row = [&](bool a, bool b) { return conjunction ? (a && b) : (a || b); };
    const int n = q.rank;
    switch (q.family) {
        case SimpleFamily::A: return div(n) || div(n + 2);  // A_{m-1} with m = rank + 1: r | m - 1 or r | m + 1
        case SimpleFamily::B: return row(div(n + 1), div(2 * n + 1));
        case SimpleFamily::C: return div(2 * n - 1) || div(2 * n + 1);
        case SimpleFamily::D: return row(div(2 * n), div(2 * n - 1));
        case SimpleFamily::E7: return r == 7;
    }
    return false;
}

Matrix residue_representative(int n, int r) {
    if (n < 1 || r < 1) throw InputError("n and r must be positive");
    Matrix m = Matrix::zero(static_cast<std::size_t>(n));
    for (int i = 0; i + r < n; ++i) m(static_cast<std::size_t>(i + r), static_cast<std::size_t>(i)) = 1;
    return m;
}

}  // namespace dskit
