#include "dskit/unramified.hpp"

#include <algorithm>
#include <numeric>

#include "dskit/errors.hpp"

namespace dskit {

int pole_order(const std::vector<Scalar>& q) {
    for (int k = static_cast<int>(q.size()); k > 0; --k)
        if (!q[k - 1].is_zero()) return k;
    return 0;
}

std::vector<Scalar> q_difference(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k < a.size()) out[k] += a[k];
        if (k < b.size()) out[k] -= b[k];
    }
    return out;
}

UnramFormalType::UnramFormalType(std::vector<UnramBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw InputError("formal type needs at least one block", "/blocks");
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        const std::string where = "/blocks/" + std::to_string(j);
        if (blocks_[j].dim < 1) throw InputError("block dimension must be positive", where + "/dim");
        if (blocks_[j].residue.n() != blocks_[j].dim)
            throw InputError("residue size differs from block dimension", where + "/residue");
        for (std::size_t i = 0; i < j; ++i)
            if (pole_order(q_difference(blocks_[i].q, blocks_[j].q)) == 0)
                throw InputError("blocks " + std::to_string(i) + " and " + std::to_string(j) + " share q", where + "/q");
    }
}

int UnramFormalType::n() const {
    int n = 0;
    for (const auto& b : blocks_) n += b.dim;
    return n;
}

int UnramFormalType::slope() const {
    int s = 0;
    for (const auto& b : blocks_) s = std::max(s, pole_order(b.q));
    return s;
}

Quiver build_base_quiver(const UnramFormalType& d) {
    Quiver q;
    const auto& bl = d.blocks();
    for (std::size_t j = 0; j < bl.size(); ++j) q.add_vertex(std::to_string(j + 1));
    for (std::size_t j = 0; j < bl.size(); ++j)
        for (std::size_t k = j + 1; k < bl.size(); ++k)
            q.add_arrows(j, k, pole_order(q_difference(bl[j].q, bl[k].q)) - 1);
    return q;
}

bool HiroeData::in_lattice(const IntVector& beta) const {
    auto sum = [&](const std::vector<std::size_t>& idx) {
        long s = 0;
        for (std::size_t v : idx) s += beta[v];
        return s;
    };
    return std::all_of(lattice.begin(), lattice.end(),
                       [&](const LatticeConstraint& c) { return sum(c.base0) == sum(c.base_i); });
}

HiroeData build_hiroe_data(const std::vector<UnramFormalType>& types, bool allow_regular_base) {
    if (types.empty()) throw InputError("at least one formal type is required", "/types");
    const int n = types.front().n();
    for (std::size_t i = 0; i < types.size(); ++i)
        if (types[i].n() != n) throw InputError("formal types have different ranks", "/types/" + std::to_string(i));

    HiroeData h;
    std::size_t first = types.size();
    for (std::size_t i = 0; i < types.size() && first == types.size(); ++i)
        if (!types[i].is_regular()) first = i;
    if (first == types.size()) {
        if (!allow_regular_base) throw InputError("no irregular formal type present", "/types");
        first = 0;
    }
    h.order.push_back(first);
    for (std::size_t i = 0; i < types.size(); ++i)
        if (i != first) h.order.push_back(i);

    std::vector<std::vector<std::vector<Scalar>>> seqs(types.size());
    for (std::size_t k = 0; k < types.size(); ++k) {
        const auto& t = types[h.order[k]];
        for (std::size_t j = 0; j < t.blocks().size(); ++j) {
            const OrbitSpec& r = t.blocks()[j].residue;
            if (!r.is_nonresonant())
                throw InputError("residue is resonant",
                                 "/types/" + std::to_string(h.order[k]) + "/blocks/" + std::to_string(j) + "/residue");
            seqs[k].push_back(default_factor_sequence(r));
        }
    }
    auto ell = [&](std::size_t k) { return types[h.order[k]].blocks().size(); };
    auto has_base = [&](std::size_t k) { return k == 0 || ell(k) >= 2; };
    auto id2 = [](std::size_t i, std::size_t j) { return "[" + std::to_string(i) + "," + std::to_string(j + 1) + "]"; };

    std::vector<std::vector<std::size_t>> base(types.size());
    for (std::size_t k = 0; k < types.size(); ++k) {
        if (!has_base(k)) continue;
        const auto& bl = types[h.order[k]].blocks();
        for (std::size_t j = 0; j < bl.size(); ++j) {
            std::size_t v = h.quiver.add_vertex(id2(k, j));
            base[k].push_back(v);
            h.base_vertices.push_back(v);
            h.alpha.push_back(bl[j].dim);
            Scalar lam = -seqs[k][j].front();
            if (k == 0)
                for (std::size_t i = 1; i < types.size(); ++i)
                    if (!has_base(i)) lam -= seqs[i][0].front();
            h.lambda.push_back(lam);
        }
        for (std::size_t j = 0; j < bl.size(); ++j)
            for (std::size_t jj = j + 1; jj < bl.size(); ++jj)
                h.quiver.add_arrows(base[k][j], base[k][jj], pole_order(q_difference(bl[j].q, bl[jj].q)) - 1);
    }
    for (std::size_t k = 1; k < types.size(); ++k)
        if (has_base(k)) {
            for (std::size_t v0 : base[0])
                for (std::size_t vi : base[k]) h.quiver.add_arrows(v0, vi);
            h.lattice.push_back({base[0], base[k]});
        }

    for (std::size_t k = 0; k < types.size(); ++k) {
        const auto& bl = types[h.order[k]].blocks();
        for (std::size_t j = 0; j < bl.size(); ++j) {
            const auto& seq = seqs[k][j];
            std::vector<std::size_t> prev;
            if (has_base(k))
                prev = {base[k][j]};
            else
                prev = base[0];
            for (std::size_t s = 1; s < seq.size(); ++s) {
                std::size_t v = h.quiver.add_vertex("[" + std::to_string(k) + "," + std::to_string(j + 1) + "," +
                                                    std::to_string(s) + "]");
                h.path_vertices.push_back(v);
                for (std::size_t p : prev) h.quiver.add_arrows(v, p);
                prev = {v};
                const OrbitSpec& r = bl[j].residue;
                h.alpha.push_back(rank_after_factors(r, seq, static_cast<int>(s)));
                h.lambda.push_back(seq[s - 1] - seq[s]);
            }
        }
    }
    if (!h.in_lattice(h.alpha)) throw std::logic_error("constructed alpha is outside the lattice L");
    return h;
}

UnramVerdict unramified_decide(const std::vector<UnramFormalType>& types, bool strict_more_than_two,
                               const SearchOptions& opts) {
    UnramVerdict v;
    v.data = build_hiroe_data(types);
    const CartanMatrix c = cartan_of_quiver(v.data.quiver);
    v.alpha_class = classify_root(c, v.data.alpha);
    v.lambda_orthogonal = dot(v.data.alpha, v.data.lambda).is_zero();
    v.p_alpha = p_value(c, v.data.alpha).get_num().get_si();
    if (v.alpha_class == RootClass::NotRoot || !v.lambda_orthogonal) {
        v.exists_ge2 = v.exists_gt2 = false;
        return v;
    }
    std::vector<IntVector> parts;
    for (const auto& r : positive_roots_leq(c, v.data.alpha))
        if (v.data.in_lattice(r) && dot(r, v.data.lambda).is_zero()) parts.push_back(r);

    auto run = [&](int min_parts, std::optional<bool>& verdict, std::vector<IntVector>& witness, bool selected) {
        SearchOptions o = opts;
        o.min_parts = min_parts;
        std::size_t nodes = 0;
        try {
            auto w = find_non_dropping_decomposition(c, v.data.alpha, parts, o, nodes);
            verdict = !w.has_value();
            if (w) witness = std::move(*w);
        } catch (const BudgetExceeded&) {
            if (selected) throw;
        }
        v.nodes += nodes;
    };
    run(2, v.exists_ge2, v.witness_ge2, !strict_more_than_two);
    run(3, v.exists_gt2, v.witness_gt2, strict_more_than_two);
    return v;
}

bool unramified_ds_exists(const std::vector<UnramFormalType>& types, bool strict_more_than_two,
                          const SearchOptions& opts) {
    const UnramVerdict v = unramified_decide(types, strict_more_than_two, opts);
    return *(strict_more_than_two ? v.exists_gt2 : v.exists_ge2);
}

int count_rank2_moduli(const UnramFormalType& d, const OrbitSpec& o) {
    if (d.n() != 2 || d.slope() != 1) throw InputError("count-rank2 needs a rank-2 formal type of slope 1");
    if (o.n() != 2) throw InputError("orbit must be 2x2", "/orbit/n");
    if (!o.is_nonresonant()) throw InputError("orbit is resonant", "/orbit");
    const auto& bl = d.blocks();
    if (bl.size() == 1) {
        // Single block: the truncated orbit is one GL_2(C)-orbit.
        return o.same_orbit(bl[0].residue.negated()) ? 1 : 0;
    }
    const Scalar c = bl[0].residue.blocks()[0].eigenvalue;
    const Scalar dd = bl[1].residue.blocks()[0].eigenvalue;
    if (o.trace() != -(c + dd)) return 0;
    if (o.is_scalar()) return (c == dd && o.blocks()[0].eigenvalue == -c) ? 1 : 0;
    if (o.determinant() != c * dd) return 1;
    return c == dd ? 2 : 3;
}

}  // namespace dskit
