#include "dskit/fuchsian.hpp"

#include "dskit/errors.hpp"

namespace dskit {

std::string to_string(Rigidity r) {
    switch (r) {
        case Rigidity::Empty: return "Empty";
        case Rigidity::RigidSingleton: return "RigidSingleton";
        case Rigidity::Infinite: return "Infinite";
    }
    return "?";
}

CBData build_cb_data(const std::vector<OrbitSpec>& orbits,
                     const std::optional<std::vector<std::vector<Scalar>>>& seqs) {
    if (orbits.empty()) throw InputError("at least one orbit is required", "/orbits");
    const int n = orbits.front().n();
    if (seqs && seqs->size() != orbits.size())
        throw InputError("factor_seqs must have one entry per orbit", "/factor_seqs");

    CBData d;
    d.quiver.add_vertex("0");
    d.alpha.push_back(n);
    d.lambda.push_back(Scalar(0));

    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const OrbitSpec& o = orbits[i];
        const std::string where = "/orbits/" + std::to_string(i);
        if (o.n() != n) throw InputError("orbits have different sizes", where + "/n");
        if (!o.is_nonresonant()) throw InputError("orbit is resonant", where);

        std::vector<Scalar> seq = seqs ? (*seqs)[i] : default_factor_sequence(o);
        if (seqs) {
            try {
                validate_factor_sequence(o, seq);
            } catch (const InputError& e) {
                throw InputError(e.what(), "/factor_seqs/" + std::to_string(i));
            }
        }
        d.lambda[0] -= seq.front();

        const int di = static_cast<int>(seq.size());
        std::size_t prev = 0;
        for (int j = 1; j < di; ++j) {
            const std::size_t v = d.quiver.add_vertex("[" + std::to_string(i + 1) + "," + std::to_string(j) + "]");
            d.quiver.add_arrows(v, prev);
            prev = v;
            d.alpha.push_back(rank_after_factors(o, seq, j));
            d.lambda.push_back(seq[j - 1] - seq[j]);
        }
        d.factor_seqs.push_back(std::move(seq));
    }
    return d;
}

FuchsianVerdict fuchsian_decide(const std::vector<OrbitSpec>& orbits,
                                const std::optional<std::vector<std::vector<Scalar>>>& seqs,
                                const SearchOptions& opts) {
    FuchsianVerdict v;
    v.data = build_cb_data(orbits, seqs);
    const CartanMatrix c = cartan_of_quiver(v.data.quiver);
    v.sigma = in_sigma_lambda(c, v.data.alpha, v.data.lambda, opts);
    v.exists = v.sigma.member;
    if (v.exists)
        v.rigidity = v.sigma.alpha_class == RootClass::RealRoot ? Rigidity::RigidSingleton : Rigidity::Infinite;
    return v;
}

bool fuchsian_ds_exists(const std::vector<OrbitSpec>& orbits, const SearchOptions& opts) {
    return fuchsian_decide(orbits, std::nullopt, opts).exists;
}

Rigidity fuchsian_rigidity(const std::vector<OrbitSpec>& orbits, const SearchOptions& opts) {
    return fuchsian_decide(orbits, std::nullopt, opts).rigidity;
}

std::vector<std::string> quiver_labels(const Quiver& q, const DimVector& alpha, const DefVector& lambda) {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < q.size(); ++v)
        out.push_back(q.vertices()[v] + " alpha=" + std::to_string(alpha[v]) + " lambda=" + lambda[v].to_string());
    return out;
}

}  // namespace dskit
