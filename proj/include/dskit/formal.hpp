#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dskit/laurent.hpp"
#include "dskit/matrix.hpp"

namespace dskit {

/// d + M(z) dz/z.
struct FormalConnection {
    LaurentMatrix matrix;
};

/// Stabilizer of the standard lattice chain attached to J, a subset of {0..n-1} containing 0.
class StandardParahoric {
public:
    /// Throws InputError unless 0 is in J and every element lies in [0, n).
    StandardParahoric(int n, std::vector<int> j);
    static StandardParahoric iwahori(int n);
    static StandardParahoric maximal(int n) { return StandardParahoric(n, {0}); }

    int n() const { return n_; }
    const std::vector<int>& j() const { return j_; }
    int period() const { return static_cast<int>(j_.size()); }
    std::vector<int> block_sizes() const;
    /// Exponent of z on the basis vector e_c (1-based) in L^m, for any integer m.
    int lattice_exponent(int m, int c) const;
    /// max{ j in [0,e) : c <= n - k_j }.
    int level(int c) const;
    std::string to_string() const;

private:
    int n_;
    std::vector<int> j_;
};

/// Largest s with E_ab z^k L^i inside L^{i+s} for every i (a, b 1-based).
int filtration_degree(const StandardParahoric& p, int a, int b, int k);

struct Stratum {
    StandardParahoric parahoric;
    int r = 0;
    LaurentMatrix leading;  // homogeneous representative of degree -r
    mpq_class depth() const { return mpq_class(r, parahoric.period()); }
};

/// Throws InputError for M = 0 or when unknown coefficients could reach degree -r.
Stratum leading_stratum(const StandardParahoric& p, const FormalConnection& c);

/// (leading)^n != 0.
bool is_fundamental(const Stratum& s);

enum class SlopeKind { CertifiedSlope, UpperBoundOnly, RegularSingularCandidate };
std::string to_string(SlopeKind k);

struct SlopeResult {
    SlopeKind kind = SlopeKind::RegularSingularCandidate;
    std::optional<mpq_class> value;
    /// Parahoric realizing the value.
    std::optional<StandardParahoric> witness;
    std::size_t parahorics_scanned = 0;
};

/// Scans every standard parahoric in a fixed trivialization.
SlopeResult certify_slope(const FormalConnection& c);

/// No two eigenvalues differ by a nonzero integer. Throws NotInScalarField.
bool is_nonresonant(const Matrix& b0);

/// Gauge g = I + g_1 z + ... (mod z^order) taking d + B(z) dz/z to d + B_0 dz/z.
/// Throws InputError on negative powers, a resonant B_0 or too short input.
LaurentMatrix regsing_normalize(const FormalConnection& c, int order);

/// d + p(omega^-1) dz/z with deg p = r and gcd(r, n) = 1.
struct CoxeterFormalType {
    int n = 0;
    int r = 0;
    /// Coefficients of p from the constant term up; size r + 1.
    std::vector<Scalar> p;
    Scalar p0() const { return p.front(); }
    mpq_class slope() const { return mpq_class(r, n); }
    LaurentMatrix matrix() const;
};

/// Throws InputError unless gcd(r, n) = 1 and p has degree exactly r.
CoxeterFormalType coxeter_canonical_type(int n, int r, std::vector<Scalar> p);

}  // namespace dskit
