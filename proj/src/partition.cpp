#include "dskit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dskit/errors.hpp"

namespace dskit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw InputError("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1]) throw InputError("partition parts must be nonincreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase_if(parts, [](int v) { return v == 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(parts_[k]);
    }
    return s + ")";
}

Partition dual_partition(const Partition& p) {
    std::vector<int> dual(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int row = 0; row < part; ++row) ++dual[static_cast<std::size_t>(row)];
    return Partition(std::move(dual));
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.weight() != q.weight())
        throw InputError("dominance order compares partitions of equal weight (" + std::to_string(p.weight()) +
                         " vs " + std::to_string(q.weight()) + ")");
    int sp = 0;
    int sq = 0;
    const std::size_t len = std::max(p.parts().size(), q.parts().size());
    for (std::size_t k = 0; k < len; ++k) {
        sp += k < p.parts().size() ? p.parts()[k] : 0;
        sq += k < q.parts().size() ? q.parts()[k] : 0;
        if (sp > sq) return false;
    }
    return true;
}

Partition min_partition_with_r_parts(int r, int m) {
    if (r < 1 || m < 0) throw InputError("min_partition_with_r_parts needs r >= 1 and m >= 0");
    const int k = m / r;
    const int extra = m % r;
    std::vector<int> parts(static_cast<std::size_t>(extra), k + 1);
    if (k > 0) parts.insert(parts.end(), static_cast<std::size_t>(r - extra), k);
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(m, m);
    return out;
}

}  // namespace dskit
