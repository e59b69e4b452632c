#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dskit/matrix.hpp"
#include "dskit/partition.hpp"
#include "dskit/scalar.hpp"

namespace dskit {

struct EigenBlock {
    Scalar eigenvalue;
    Partition jordan;  // sizes of the Jordan blocks for this eigenvalue

    friend bool operator==(const EigenBlock&, const EigenBlock&) = default;
};

/// Adjoint orbit in gl_n given by its Jordan type. Eigenvalues keep input order.
class OrbitSpec {
public:
    OrbitSpec() = default;
    /// Throws InputError on repeated eigenvalues, empty partitions or weight != n.
    OrbitSpec(int n, std::vector<EigenBlock> blocks);

    static OrbitSpec scalar(int n, const Scalar& c);
    static OrbitSpec nilpotent(const Partition& p);

    int n() const { return n_; }
    const std::vector<EigenBlock>& blocks() const { return blocks_; }
    const Partition* partition_of(const Scalar& eigenvalue) const;

    bool is_scalar() const { return blocks_.size() == 1 && blocks_[0].jordan.largest() == 1; }
    bool is_nilpotent() const { return blocks_.size() == 1 && blocks_[0].eigenvalue.is_zero(); }
    /// Degree of the minimal polynomial: sum of the largest block sizes.
    int minimal_polynomial_degree() const;
    Scalar trace() const;
    Scalar determinant() const;
    /// No two eigenvalues differ by a nonzero integer.
    bool is_nonresonant() const;
    /// Orbit of -X for X in this orbit.
    OrbitSpec negated() const;
    /// Same orbit regardless of eigenvalue order.
    bool same_orbit(const OrbitSpec& other) const;

    /// Jordan normal form representative (blocks in input order, superdiagonal ones).
    Matrix jordan_representative() const;

    std::string to_string() const;

    friend bool operator==(const OrbitSpec&, const OrbitSpec&) = default;

private:
    int n_ = 0;
    std::vector<EigenBlock> blocks_;
};

/// dim O = n^2 - sum over eigenvalues of sum_i (dual(mu)_i)^2.
int orbit_dim(const OrbitSpec& o);

/// Round-robin over the distinct eigenvalues ordered by decreasing largest
/// block (ties keep input order); each eigenvalue appears largest-block times.
std::vector<Scalar> default_factor_sequence(const OrbitSpec& o);

/// Throws InputError unless seq lists every eigenvalue exactly largest-block times.
void validate_factor_sequence(const OrbitSpec& o, const std::vector<Scalar>& seq);

/// Rank of prod_{l <= j} (C - seq_l) for C in the orbit.
int rank_after_factors(const OrbitSpec& o, const std::vector<Scalar>& seq, int j);

}  // namespace dskit
