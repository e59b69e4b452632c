#include "dskit/orbit.hpp"

#include <algorithm>
#include <numeric>

#include "dskit/errors.hpp"

namespace dskit {

OrbitSpec::OrbitSpec(int n, std::vector<EigenBlock> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) throw InputError("orbit size n must be positive");
    if (blocks_.empty()) throw InputError("orbit needs at least one eigenvalue");
    int total = 0;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (blocks_[k].jordan.empty()) throw InputError("empty partition for eigenvalue " + blocks_[k].eigenvalue.to_string());
        total += blocks_[k].jordan.weight();
        for (std::size_t j = 0; j < k; ++j)
            if (blocks_[j].eigenvalue == blocks_[k].eigenvalue)
                throw InputError("eigenvalue " + blocks_[k].eigenvalue.to_string() + " listed twice");
    }
    if (total != n_)
        throw InputError("partition weights sum to " + std::to_string(total) + " but n = " + std::to_string(n_));
}

OrbitSpec OrbitSpec::scalar(int n, const Scalar& c) {
    return OrbitSpec(n, {{c, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))}});
}

OrbitSpec OrbitSpec::nilpotent(const Partition& p) { return OrbitSpec(p.weight(), {{Scalar(0), p}}); }

const Partition* OrbitSpec::partition_of(const Scalar& eigenvalue) const {
    for (const auto& b : blocks_)
        if (b.eigenvalue == eigenvalue) return &b.jordan;
    return nullptr;
}

int OrbitSpec::minimal_polynomial_degree() const {
    int d = 0;
    for (const auto& b : blocks_) d += b.jordan.largest();
    return d;
}

Scalar OrbitSpec::trace() const {
    Scalar t;
    for (const auto& b : blocks_) t += b.eigenvalue * Scalar(b.jordan.weight());
    return t;
}

Scalar OrbitSpec::determinant() const {
    Scalar d(1);
    for (const auto& b : blocks_) d *= pow(b.eigenvalue, static_cast<unsigned>(b.jordan.weight()));
    return d;
}

bool OrbitSpec::is_nonresonant() const {
    for (std::size_t a = 0; a < blocks_.size(); ++a)
        for (std::size_t b = a + 1; b < blocks_.size(); ++b)
            if ((blocks_[a].eigenvalue - blocks_[b].eigenvalue).is_nonzero_integer()) return false;
    return true;
}

OrbitSpec OrbitSpec::negated() const {
    std::vector<EigenBlock> neg;
    for (const auto& b : blocks_) neg.push_back({-b.eigenvalue, b.jordan});
    return OrbitSpec(n_, std::move(neg));
}

bool OrbitSpec::same_orbit(const OrbitSpec& other) const {
    if (n_ != other.n_ || blocks_.size() != other.blocks_.size()) return false;
    for (const auto& b : blocks_) {
        const Partition* p = other.partition_of(b.eigenvalue);
        if (!p || !(*p == b.jordan)) return false;
    }
    return true;
}

Matrix OrbitSpec::jordan_representative() const {
    Matrix m = Matrix::zero(static_cast<std::size_t>(n_));
    std::size_t pos = 0;
    for (const auto& b : blocks_)
        for (int size : b.jordan.parts()) {
            for (int k = 0; k < size; ++k) {
                m(pos + static_cast<std::size_t>(k), pos + static_cast<std::size_t>(k)) = b.eigenvalue;
                if (k + 1 < size) m(pos + static_cast<std::size_t>(k), pos + static_cast<std::size_t>(k) + 1) = Scalar(1);
            }
            pos += static_cast<std::size_t>(size);
        }
    return m;
}

std::string OrbitSpec::to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k) s += ", ";
        s += blocks_[k].eigenvalue.to_string() + ":" + blocks_[k].jordan.to_string();
    }
    return s + "}";
}

int orbit_dim(const OrbitSpec& o) {
    int centralizer = 0;
    for (const auto& b : o.blocks()) {
        const Partition dual = dual_partition(b.jordan);
        for (int col : dual.parts()) centralizer += col * col;
    }
    return o.n() * o.n() - centralizer;
}

std::vector<Scalar> default_factor_sequence(const OrbitSpec& o) {
    std::vector<const EigenBlock*> order;
    for (const auto& b : o.blocks()) order.push_back(&b);
    std::stable_sort(order.begin(), order.end(),
                     [](const EigenBlock* a, const EigenBlock* b) { return a->jordan.largest() > b->jordan.largest(); });
    std::vector<Scalar> seq;
    const int rounds = order.empty() ? 0 : order.front()->jordan.largest();
    for (int round = 0; round < rounds; ++round)
        for (const EigenBlock* b : order)
            if (b->jordan.largest() > round) seq.push_back(b->eigenvalue);
    return seq;
}

void validate_factor_sequence(const OrbitSpec& o, const std::vector<Scalar>& seq) {
    for (const auto& s : seq)
        if (!o.partition_of(s)) throw InputError("factor sequence uses " + s.to_string() + ", not an eigenvalue of the orbit");
    for (const auto& b : o.blocks()) {
        const auto count = std::count(seq.begin(), seq.end(), b.eigenvalue);
        if (count != b.jordan.largest())
            throw InputError("factor sequence lists eigenvalue " + b.eigenvalue.to_string() + " " + std::to_string(count) +
                             " times; the minimal polynomial needs " + std::to_string(b.jordan.largest()));
    }
}

int rank_after_factors(const OrbitSpec& o, const std::vector<Scalar>& seq, int j) {
    validate_factor_sequence(o, seq);
    if (j < 0 || j > static_cast<int>(seq.size())) throw InputError("factor index out of range");
    int rank = 0;
    for (const auto& b : o.blocks()) {
        const auto used = static_cast<int>(std::count(seq.begin(), seq.begin() + j, b.eigenvalue));
        for (int part : b.jordan.parts()) rank += std::max(part - used, 0);
    }
    return rank;
}

}  // namespace dskit
