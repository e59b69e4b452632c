#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dskit/orbit.hpp"
#include "dskit/rootsys.hpp"

namespace dskit {

/// Star quiver data (Q, alpha, lambda) attached to a tuple of residue orbits.
struct CBData {
    Quiver quiver;
    DimVector alpha;
    DefVector lambda;
    std::vector<std::vector<Scalar>> factor_seqs;
};

/// Builds the star quiver: sink "0" and arm vertices "[i,j]" for 1 <= j < d_i
/// (i 1-based), arrows [i,1] -> 0 and [i,j] -> [i,j-1]. alpha_0 = n and
/// alpha_[i,j] = rank of prod_{l <= j} (C_i - eta_il), so alpha . lambda = -sum Tr O_i.
/// Throws InputError on an empty list, mismatched n or a resonant orbit.
CBData build_cb_data(const std::vector<OrbitSpec>& orbits,
                     const std::optional<std::vector<std::vector<Scalar>>>& seqs = std::nullopt);

enum class Rigidity { Empty, RigidSingleton, Infinite };

std::string to_string(Rigidity r);

struct FuchsianVerdict {
    CBData data;
    SigmaResult sigma;
    bool exists = false;
    Rigidity rigidity = Rigidity::Empty;
};

FuchsianVerdict fuchsian_decide(const std::vector<OrbitSpec>& orbits,
                                const std::optional<std::vector<std::vector<Scalar>>>& seqs = std::nullopt,
                                const SearchOptions& opts = {});

bool fuchsian_ds_exists(const std::vector<OrbitSpec>& orbits, const SearchOptions& opts = {});
Rigidity fuchsian_rigidity(const std::vector<OrbitSpec>& orbits, const SearchOptions& opts = {});

/// Vertex labels "id alpha=.. lambda=.." for DOT export.
std::vector<std::string> quiver_labels(const Quiver& q, const DimVector& alpha, const DefVector& lambda);

}  // namespace dskit
