#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dskit/orbit.hpp"
#include "dskit/rootsys.hpp"

namespace dskit {

/// One block q_j(z) I + R_j of an unramified formal type.
struct UnramBlock {
    /// Coefficients of z^-1, z^-2, ... (no constant term).
    std::vector<Scalar> q;
    int dim = 0;
    OrbitSpec residue;
};

/// Block decomposition sum_j (q_j I_{V_j} + R_j) dz/z.
class UnramFormalType {
public:
    UnramFormalType() = default;
    /// Throws InputError on empty blocks, repeated q, or residue size != dim.
    explicit UnramFormalType(std::vector<UnramBlock> blocks);

    const std::vector<UnramBlock>& blocks() const { return blocks_; }
    int n() const;
    /// Largest pole order of the q_j.
    int slope() const;
    bool is_regular() const { return slope() == 0; }

private:
    std::vector<UnramBlock> blocks_;
};

/// Degree in z^-1 of q (0 for q = 0).
int pole_order(const std::vector<Scalar>& q);
std::vector<Scalar> q_difference(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

/// Vertices "1".."l"; deg(q_j - q_j') - 1 arrows j -> j' for j < j'.
Quiver build_base_quiver(const UnramFormalType& d);

struct LatticeConstraint {
    std::vector<std::size_t> base0;   // vertices [0,j]
    std::vector<std::size_t> base_i;  // vertices [i,j]
};

struct HiroeData {
    Quiver quiver;
    std::vector<std::size_t> base_vertices;
    std::vector<std::size_t> path_vertices;
    DimVector alpha;
    DefVector lambda;
    std::vector<LatticeConstraint> lattice;
    /// order[k] = input index of the type used as type k (type 0 is the base type).
    std::vector<std::size_t> order;

    bool in_lattice(const IntVector& beta) const;
};

/// The first irregular input type becomes type 0 (others keep their order).
/// With allow_regular_base, type 0 may be regular (used to compare with the star quiver).
HiroeData build_hiroe_data(const std::vector<UnramFormalType>& types, bool allow_regular_base = false);

struct UnramVerdict {
    HiroeData data;
    RootClass alpha_class = RootClass::NotRoot;
    bool lambda_orthogonal = false;
    long p_alpha = 0;
    /// Condition (2) with at least two parts (default) and with at least three parts.
    std::optional<bool> exists_ge2;
    std::optional<bool> exists_gt2;
    std::vector<IntVector> witness_ge2;
    std::vector<IntVector> witness_gt2;
    std::size_t nodes = 0;
};

/// Evaluates both readings of condition (2). Throws BudgetExceeded if the
/// selected reading runs out of budget; the other reading is left unset then.
UnramVerdict unramified_decide(const std::vector<UnramFormalType>& types, bool strict_more_than_two = false,
                               const SearchOptions& opts = {});

bool unramified_ds_exists(const std::vector<UnramFormalType>& types, bool strict_more_than_two = false,
                          const SearchOptions& opts = {});

/// Size of the moduli space for a slope-1 rank-2 type D at one point and a
/// regular-singular orbit O at another. Throws InputError outside that case.
int count_rank2_moduli(const UnramFormalType& d, const OrbitSpec& o);

}  // namespace dskit
