#include "dskit/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "dskit/errors.hpp"

namespace dskit {

std::size_t Quiver::add_vertex(std::string id) {
    if (index_of(id)) throw InputError("duplicate quiver vertex " + id);
    vertices_.push_back(std::move(id));
    return vertices_.size() - 1;
}

void Quiver::add_arrows(std::size_t tail, std::size_t head, int count) {
    if (tail >= size() || head >= size()) throw std::out_of_range("arrow endpoint out of range");
    if (tail == head && count > 0) throw InputError("loop at quiver vertex " + vertices_[tail]);
    for (int k = 0; k < count; ++k) arrows_.emplace_back(tail, head);
}

std::optional<std::size_t> Quiver::index_of(const std::string& id) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_count(std::size_t tail, std::size_t head) const {
    return static_cast<std::size_t>(std::count(arrows_.begin(), arrows_.end(), std::make_pair(tail, head)));
}

bool CartanMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::string to_string(RootClass c) {
    switch (c) {
        case RootClass::RealRoot: return "RealRoot";
        case RootClass::ImaginaryRoot: return "ImaginaryRoot";
        case RootClass::NotRoot: return "NotRoot";
    }
    return "?";
}

CartanMatrix cartan_of_quiver(const Quiver& q, EdgeCounting counting) {
    CartanMatrix c(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) c(i, i) = 2;
    for (const auto& [tail, head] : q.arrows()) {
        if (tail == head) throw InputError("loop at quiver vertex " + q.vertices()[tail]);
        c(tail, head) -= 1;
        if (counting == EdgeCounting::Undirected) c(head, tail) -= 1;
    }
    return c;
}

long pairing(const CartanMatrix& c, const IntVector& beta, std::size_t i) {
    long s = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) s += c(i, j) * beta[j];
    return s;
}

mpq_class p_value(const CartanMatrix& c, const IntVector& beta) {
    if (beta.size() != c.size()) throw InputError("dimension vector does not match the Cartan matrix");
    mpz_class form = 0;
    for (std::size_t i = 0; i < beta.size(); ++i)
        for (std::size_t j = 0; j < beta.size(); ++j) form += mpz_class(beta[i]) * c(i, j) * beta[j];
    mpq_class p = mpq_class(1) - mpq_class(form, 2);
    p.canonicalize();
    return p;
}

IntVector reflect(const CartanMatrix& c, std::size_t i, IntVector beta) {
    beta[i] -= pairing(c, beta, i);
    return beta;
}

long height(const IntVector& beta) { return std::accumulate(beta.begin(), beta.end(), 0L); }

bool leq(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Scalar dot(const IntVector& beta, const DefVector& lambda) {
    if (beta.size() != lambda.size()) throw InputError("deformation vector does not match the vertex set");
    Scalar s;
    for (std::size_t i = 0; i < beta.size(); ++i)
        if (beta[i]) s += lambda[i] * Scalar(beta[i]);
    return s;
}

namespace {

bool connected_support(const CartanMatrix& c, const IntVector& beta) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < beta.size(); ++i)
        if (beta[i] != 0) support.push_back(i);
    if (support.empty()) return false;
    std::vector<bool> seen(beta.size(), false);
    std::vector<std::size_t> stack{support.front()};
    seen[support.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t w : support)
            if (!seen[w] && c(v, w) != 0) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return reached == support.size();
}

void require_symmetric(const CartanMatrix& c) {
    if (!c.is_symmetric()) throw InputError("root-system operations need a symmetric generalized Cartan matrix");
}

}  // namespace

RootClass classify_root(const CartanMatrix& c, const IntVector& beta_in) {
    require_symmetric(c);
    if (beta_in.size() != c.size()) throw InputError("vector does not match the Cartan matrix");
    const bool any_pos = std::any_of(beta_in.begin(), beta_in.end(), [](long v) { return v > 0; });
    const bool any_neg = std::any_of(beta_in.begin(), beta_in.end(), [](long v) { return v < 0; });
    if (!any_pos && !any_neg) throw InputError("classify_root needs a nonzero vector");
    if (any_pos && any_neg) return RootClass::NotRoot;
    IntVector beta = beta_in;
    if (any_neg)
        for (auto& v : beta) v = -v;

    const long limit = 4 * height(beta);
    for (long steps = 0;; ++steps) {
        if (steps > limit) throw BudgetExceeded("root descent exceeded its height bound", static_cast<std::size_t>(limit));
        if (!connected_support(c, beta)) return RootClass::NotRoot;
        if (height(beta) == 1) return RootClass::RealRoot;
        std::optional<std::size_t> descent;
        long amount = 0;
        for (std::size_t i = 0; i < beta.size() && !descent; ++i) {
            if (beta[i] <= 0) continue;
            long pr = pairing(c, beta, i);
            if (pr > 0) {
                descent = i;
                amount = pr;
            }
        }
        // Connected support with no positive pairing: fundamental set, imaginary.
        if (!descent) return RootClass::ImaginaryRoot;
        beta[*descent] -= amount;
        if (beta[*descent] < 0) return RootClass::NotRoot;
    }
}

std::vector<IntVector> positive_roots_leq(const CartanMatrix& c, const IntVector& alpha) {
    if (alpha.size() != c.size()) throw InputError("dimension vector does not match the Cartan matrix");
    for (long a : alpha)
        if (a < 0) throw InputError("dimension vector entries must be nonnegative");
    std::vector<IntVector> roots;
    IntVector beta(alpha.size(), 0);
    for (;;) {
        std::size_t k = 0;
        while (k < beta.size() && beta[k] == alpha[k]) beta[k++] = 0;
        if (k == beta.size()) break;
        ++beta[k];
        if (classify_root(c, beta) != RootClass::NotRoot) roots.push_back(beta);
    }
    std::sort(roots.begin(), roots.end(), [](const IntVector& a, const IntVector& b) {
        return std::make_pair(height(a), a) < std::make_pair(height(b), b);
    });
    return roots;
}

std::optional<std::vector<IntVector>> find_non_dropping_decomposition(const CartanMatrix& c, const IntVector& alpha,
                                                                      const std::vector<IntVector>& candidates,
                                                                      const SearchOptions& opts, std::size_t& nodes) {
    const std::size_t dim = alpha.size();
    std::vector<long> p_cand;
    for (const auto& g : candidates) {
        mpq_class p = p_value(c, g);
        if (p.get_den() != 1 || !p.get_num().fits_slong_p()) throw InputError("p is not an integer; is C symmetric?");
        p_cand.push_back(p.get_num().get_si());
    }
    const mpq_class p_alpha_q = p_value(c, alpha);
    const long p_alpha = p_alpha_q.get_num().get_si();
    const int need = std::max(opts.min_parts, 1);

    // Mixed-radix code of the remaining vector.
    std::vector<std::size_t> radix(dim, 1);
    for (std::size_t i = 1; i < dim; ++i) radix[i] = radix[i - 1] * static_cast<std::size_t>(alpha[i - 1] + 1);
    auto encode = [&](const IntVector& v) {
        std::size_t code = 0;
        for (std::size_t i = 0; i < dim; ++i) code += radix[i] * static_cast<std::size_t>(v[i]);
        return code;
    };

    constexpr long kNone = std::numeric_limits<long>::min();
    // Key: (remaining, first usable candidate, parts used capped at `need`).
    std::unordered_map<std::size_t, long> memo;
    const std::size_t n_cand = candidates.size();
    auto key = [&](const IntVector& rem, std::size_t k, int used) {
        return (encode(rem) * (n_cand + 1) + k) * static_cast<std::size_t>(need + 1) + static_cast<std::size_t>(used);
    };
    nodes = 0;

    // Largest sum of p over multisets of candidates[k..] summing to rem with enough parts.
    std::function<long(IntVector&, std::size_t, int)> best = [&](IntVector& rem, std::size_t k, int used) -> long {
        const bool done = std::all_of(rem.begin(), rem.end(), [](long v) { return v == 0; });
        if (done) return used >= need ? 0 : kNone;
        if (k == n_cand) return kNone;
        const std::size_t id = key(rem, k, used);
        if (auto it = memo.find(id); it != memo.end()) return it->second;
        if (++nodes > opts.budget) throw BudgetExceeded("decomposition search exceeded its budget", opts.budget);

        long result = best(rem, k + 1, used);
        if (leq(candidates[k], rem)) {
            for (std::size_t i = 0; i < dim; ++i) rem[i] -= candidates[k][i];
            long rest = best(rem, k, std::min(used + 1, need));
            for (std::size_t i = 0; i < dim; ++i) rem[i] += candidates[k][i];
            if (rest != kNone) result = std::max(result, rest + p_cand[k]);
        }
        memo[id] = result;
        return result;
    };

    IntVector rem = alpha;
    const long top = best(rem, 0, 0);
    if (top == kNone || top < p_alpha) return std::nullopt;

    // Walk the memo to recover one witness reaching at least p(alpha).
    std::vector<IntVector> witness;
    std::size_t k = 0;
    int used = 0;
    long target = p_alpha;
    while (std::any_of(rem.begin(), rem.end(), [](long v) { return v != 0; })) {
        if (leq(candidates[k], rem)) {
            for (std::size_t i = 0; i < dim; ++i) rem[i] -= candidates[k][i];
            long rest = best(rem, k, std::min(used + 1, need));
            if (rest != kNone && rest + p_cand[k] >= target) {
                witness.push_back(candidates[k]);
                target -= p_cand[k];
                used = std::min(used + 1, need);
                continue;
            }
            for (std::size_t i = 0; i < dim; ++i) rem[i] += candidates[k][i];
        }
        ++k;
    }
    return witness;
}

namespace {

// Independent route for real alpha: any decomposition into >= 2 positive roots
// (orthogonality checked only on complete decompositions).
std::optional<bool> real_root_criterion(const std::vector<IntVector>& roots, const IntVector& alpha,
                                        const DefVector& lambda, std::size_t budget) {
    std::vector<IntVector> proper;
    for (const auto& r : roots)
        if (r != alpha) proper.push_back(r);
    std::size_t nodes = 0;
    std::vector<std::size_t> chosen;
    std::function<bool(IntVector&, std::size_t)> rec = [&](IntVector& rem, std::size_t k) -> bool {
        if (++nodes > budget) throw BudgetExceeded("real-root criterion search exceeded its budget", budget);
        if (std::all_of(rem.begin(), rem.end(), [](long v) { return v == 0; })) {
            return std::all_of(chosen.begin(), chosen.end(),
                               [&](std::size_t idx) { return dot(proper[idx], lambda).is_zero(); });
        }
        for (std::size_t j = k; j < proper.size(); ++j) {
            if (!leq(proper[j], rem)) continue;
            for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= proper[j][i];
            chosen.push_back(j);
            bool hit = rec(rem, j);
            chosen.pop_back();
            for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += proper[j][i];
            if (hit) return true;
        }
        return false;
    };
    try {
        IntVector rem = alpha;
        const bool all_orthogonal_decomposition = rec(rem, 0);
        return dot(alpha, lambda).is_zero() && !all_orthogonal_decomposition;
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
}

}  // namespace

SigmaResult in_sigma_lambda(const CartanMatrix& c, const IntVector& alpha, const DefVector& lambda,
                            const SearchOptions& opts) {
    if (alpha.size() != c.size() || lambda.size() != c.size())
        throw InputError("alpha, lambda and the Cartan matrix must share an index set");
    if (std::all_of(alpha.begin(), alpha.end(), [](long v) { return v == 0; }))
        throw InputError("alpha must be nonzero");
    SigmaResult out;
    out.alpha_class = classify_root(c, alpha);
    out.lambda_orthogonal = dot(alpha, lambda).is_zero();
    out.p_alpha = p_value(c, alpha).get_num().get_si();
    if (out.alpha_class == RootClass::NotRoot || !out.lambda_orthogonal) return out;

    const auto roots = positive_roots_leq(c, alpha);
    std::vector<IntVector> orthogonal;
    for (const auto& r : roots)
        if (dot(r, lambda).is_zero()) orthogonal.push_back(r);

    auto witness = find_non_dropping_decomposition(c, alpha, orthogonal, opts, out.nodes);
    out.member = !witness.has_value();
    if (witness) out.witness = std::move(*witness);

    if (out.alpha_class == RootClass::RealRoot) {
        out.real_shortcut = real_root_criterion(roots, alpha, lambda, opts.budget);
        if (out.real_shortcut && *out.real_shortcut != out.member)
            throw std::logic_error("real-root criterion disagrees with the Sigma^lambda search");
    }
    return out;
}

std::string to_dot(const Quiver& q, const std::vector<std::string>& labels, const std::string& name) {
    std::vector<std::size_t> order(q.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return q.vertices()[a] < q.vertices()[b]; });
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [t, h] : q.arrows()) edges.emplace_back(q.vertices()[t], q.vertices()[h]);
    std::sort(edges.begin(), edges.end());

    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t v : order) {
        os << "  " << quote(q.vertices()[v]);
        if (v < labels.size()) os << " [label=" << quote(labels[v]) << "]";
        os << ";\n";
    }
    for (const auto& [t, h] : edges) os << "  " << quote(t) << " -> " << quote(h) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace dskit
