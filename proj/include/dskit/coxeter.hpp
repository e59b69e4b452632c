#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dskit/formal.hpp"
#include "dskit/orbit.hpp"
#include "dskit/partition.hpp"

namespace dskit {

/// prod (x - c_i)^{m_i} with the c_i distinct modulo Z.
class CharPolySpec {
public:
    /// Throws InputError on m_i < 1 or c_i - c_j in Z.
    explicit CharPolySpec(std::vector<std::pair<Scalar, int>> factors);
    static CharPolySpec of(const OrbitSpec& o);

    const std::vector<std::pair<Scalar, int>>& factors() const { return factors_; }
    int degree() const;

private:
    std::vector<std::pair<Scalar, int>> factors_;
};

/// rho_r(q): partition min_partition_with_r_parts(r, m_i) at each c_i.
OrbitSpec ds_generator(int r, const CharPolySpec& q);

struct CoxeterDecision {
    bool exists = false;
    bool trace_condition = false;
    bool in_filter = false;
    OrbitSpec generator;
};

/// Throws InputError if O has the wrong size or is resonant.
CoxeterDecision coxeter_ds_decide(const CoxeterFormalType& f, const OrbitSpec& o);

/// dim O + (r - n - 1)(n - 1). Needs gcd(r, n) = 1 and O nilpotent with at most r blocks.
int h1_dimension(int n, int r, const OrbitSpec& o);

/// O = rho_r(x^n) and r divides n - 1 or n + 1. Needs O nilpotent with at most r blocks.
bool is_rigid_coxeter_gl(int n, int r, const OrbitSpec& o);

enum class SimpleFamily { A, B, C, D, E7 };

struct SimpleTypeQuery {
    SimpleFamily family = SimpleFamily::A;
    int rank = 1;  // Lie rank; ignored for E7
    int r = 1;
};

SimpleFamily parse_family(const std::string& s);
std::string to_string(SimpleFamily f);
int coxeter_number(SimpleFamily f, int rank);

/// Rigidity of the homogeneous Coxeter connection of slope r/h. With
/// `conjunction`, the two-condition rows need both conditions.
bool rigid_table_simple_type(const SimpleTypeQuery& q, bool conjunction = false);

/// Ones on the r-th subdiagonal (zero matrix when r >= n).
Matrix residue_representative(int n, int r);

}  // namespace dskit
