#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace dskit {

/// Integer partition: strictly positive, weakly decreasing parts.
class Partition {
public:
    Partition() = default;
    /// Validates; throws InputError on nonpositive or increasing parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zeros instead of rejecting them.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Transpose of the Young diagram.
Partition dual_partition(const Partition& p);

/// Dominance order: every prefix sum of p is at most the matching prefix sum of q.
/// Throws InputError on a weight mismatch.
bool dominance_leq(const Partition& p, const Partition& q);

/// Dominance-smallest partition of m with at most r parts:
/// m = k r + r' gives (k+1)^{r'} k^{r-r'} with zero parts dropped.
Partition min_partition_with_r_parts(int r, int m);

/// All partitions of m in reverse lexicographic order.
std::vector<Partition> partitions_of(int m);

}  // namespace dskit
