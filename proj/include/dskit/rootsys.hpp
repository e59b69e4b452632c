#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dskit/scalar.hpp"

namespace dskit {

using IntVector = std::vector<long>;
/// Dimension vector indexed like Quiver::vertices.
using DimVector = IntVector;
/// Deformation vector indexed like Quiver::vertices.
using DefVector = std::vector<Scalar>;

/// Loop-free quiver with string vertex ids; parallel arrows allowed.
class Quiver {
public:
    std::size_t add_vertex(std::string id);
    /// Adds `count` parallel arrows tail -> head. Throws InputError on a loop.
    void add_arrows(std::size_t tail, std::size_t head, int count = 1);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& arrows() const { return arrows_; }
    std::size_t size() const { return vertices_.size(); }
    std::optional<std::size_t> index_of(const std::string& id) const;
    std::size_t arrow_count(std::size_t tail, std::size_t head) const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> arrows_;
};

enum class EdgeCounting { Undirected, Directed };

/// Integer matrix over the vertex set; a symmetric generalized Cartan matrix
/// when built with undirected counting.
class CartanMatrix {
public:
    CartanMatrix() = default;
    explicit CartanMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

    std::size_t size() const { return n_; }
    long& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    long operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    bool is_symmetric() const;

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<long> entries_;
};

enum class RootClass { RealRoot, ImaginaryRoot, NotRoot };

std::string to_string(RootClass c);

/// (C_Q)_{ij} = 2 delta_ij - #edges between i and j.
CartanMatrix cartan_of_quiver(const Quiver& q, EdgeCounting counting = EdgeCounting::Undirected);

/// (C beta)_i.
long pairing(const CartanMatrix& c, const IntVector& beta, std::size_t i);

/// p(beta) = 1 - (1/2) beta^t C beta.
mpq_class p_value(const CartanMatrix& c, const IntVector& beta);

/// s_i(beta) = beta - (beta^t C e_i) e_i.
IntVector reflect(const CartanMatrix& c, std::size_t i, IntVector beta);

/// Kac descent. Throws InputError for beta = 0 or a non-symmetric C and
/// BudgetExceeded if the descent runs past 4*|beta| reflections.
RootClass classify_root(const CartanMatrix& c, const IntVector& beta);

/// Every positive root beta <= alpha componentwise, sorted by height then lexicographically.
std::vector<IntVector> positive_roots_leq(const CartanMatrix& c, const IntVector& alpha);

Scalar dot(const IntVector& beta, const DefVector& lambda);
long height(const IntVector& beta);
bool leq(const IntVector& a, const IntVector& b);

struct SearchOptions {
    std::size_t budget = 1'000'000;  // decomposition-search nodes
    int min_parts = 2;
};

/// Decomposition alpha = sum of >= min_parts candidates with sum p >= p(alpha).
/// Multisets are enumerated in nondecreasing candidate order with componentwise
/// pruning; `nodes` receives the number of search states expanded.
std::optional<std::vector<IntVector>> find_non_dropping_decomposition(const CartanMatrix& c, const IntVector& alpha,
                                                                      const std::vector<IntVector>& candidates,
                                                                      const SearchOptions& opts, std::size_t& nodes);

struct SigmaResult {
    bool member = false;
    RootClass alpha_class = RootClass::NotRoot;
    bool lambda_orthogonal = false;
    long p_alpha = 0;
    /// Decomposition into elements of R_+^lambda that does not drop p, if one exists.
    std::vector<IntVector> witness;
    std::size_t nodes = 0;
    /// Verdict of the real-root criterion (no decomposition into positive roots all
    /// orthogonal to lambda); set when alpha is real and that search fit the budget.
    std::optional<bool> real_shortcut;
};

/// alpha in Sigma^lambda. Throws InputError on size mismatch, BudgetExceeded
/// when the decomposition search does not finish.
SigmaResult in_sigma_lambda(const CartanMatrix& c, const IntVector& alpha, const DefVector& lambda,
                            const SearchOptions& opts = {});

/// Graphviz digraph, one edge per arrow; vertices and edges sorted by id.
/// `labels`, if given, is indexed like the vertices.
std::string to_dot(const Quiver& q, const std::vector<std::string>& labels = {}, const std::string& name = "quiver");

}  // namespace dskit
