#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbtop/rational.hpp"
#include "orbtop/surd.hpp"

namespace orbtop {

/// Record of one curve in an orthogonal basis of curves: genus, rational
/// self-intersection, and the orders d_p of the singular points it passes
/// through (empty for a good curve).
struct CurveRecord {
    Int genus;
    Rat self_intersection;
    std::vector<Int> point_orders;

    bool good() const { return point_orders.empty(); }
    /// chi = 2g - 2 + sum_p (1 - 1/d_p); equals 2g - 2 for a good curve.
    Rat chi() const;
};

/// Orthogonal basis of three disjoint curves with signature (1, 2): exactly
/// one has positive square.
struct BasisCandidate {
    CurveRecord positive;   ///< square m1 > 0
    CurveRecord negative2;  ///< square -m2 < 0
    CurveRecord negative3;  ///< square -m3 < 0

    void validate() const;
};

/// Orbifold Euler characteristic of the complement of the three curves in a
/// space with chi = 5 (b2 = 3): 5 - sum (2 - 2 g_i) - sum_p (1 - 1/d_p).
Rat orbifold_euler_complement(const std::vector<Int>& genus, const std::vector<Int>& point_orders);

/// Bound on the number of singular points from three disjoint spanning
/// triples of curves: sum of 2 (2g1 + 2g2 + 2g3 - 1).
Int compute_T0(const std::vector<std::vector<Int>>& genus_triples);

struct CanonicalCoeffs {
    Rat a1, a2, a3;
};

/// Coefficients of the canonical class in the basis, from adjunction:
/// a1 = (chi1 - m1)/m1, a_i = -(chi_i + m_i)/m_i. Throws
/// EffectivityViolation when m1 >= chi1.
CanonicalCoeffs canonical_coeffs(const BasisCandidate& basis);

/// K^2 = (chi1 - m1)^2/m1 - (chi2 + m2)^2/m2 - (chi3 + m3)^2/m3.
Rat k_squared(const BasisCandidate& basis);

struct AuditEntry {
    std::string key;
    std::string formula;
    std::string value;
    std::string provenance;  ///< "forced", "default", or "input"
};

/// Every universal constant of the obstruction argument, with an audit trail
/// recording the formula and provenance of each entry. T7 is stored through
/// its square; downstream ceilings are taken exactly on the surd.
struct ConstantsLedger {
    Int T0;
    Rat T1, T2, T3, T4, T5, T6;
    Rat T7_squared;
    Surd T7;
    Surd T8;
    Int N0;          ///< 4 T0 + 1
    Int N1;          ///< size of the index sets (1 here)
    Int N_of_1;      ///< N(1)
    Int n0;          ///< least n with 8 n^2 > T5 + T2
    Int N_leq;       ///< supplied; no closed form exists
    Int N_gt;        ///< ceil(T8) + 1
    Int N_final;     ///< max(N_leq, N_gt)
    Int R;           ///< 4 * 5 * 7 * 11 * 13 * 17
    Rat eps;
    std::vector<AuditEntry> audit;
};

struct ConstantsPipelineInput {
    Int n_of_1;
    Int t0;
    Rat eps;                  ///< > 0
    Int g_a;                  ///< genus bound of the not-bad basis family
    std::optional<Rat> t5;    ///< default 20 + T4
    Int n_leq = 0;            ///< default: not derivable, must be supplied
    Int n1 = 1;
};

ConstantsLedger constants_pipeline(const ConstantsPipelineInput& input);

/// Primes n_1 < ... < n_count with n_1 the least prime >= start and
/// n_{i+1} the least prime exceeding max(2 n_i^2, ceil(sqrt(6) n_i)).
std::vector<Int> s_a_sequence(const Int& start, std::size_t count);

struct DiophantineTriple {
    Int x, y, z;
    bool operator<(const DiophantineTriple& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }
    bool operator==(const DiophantineTriple&) const = default;
};

/// Parametric solution of x^2 + 8 q y^2 = z^2:
///   x = d (2q lam^2 / s - s mu^2), y = d lam mu, z = d (2q lam^2 / s + s mu^2)
/// for s | 2q, gcd(lam, mu) = 1. Returns the +-branch.
DiophantineTriple diophantine_family(const Int& q, const Int& d, const Int& lam, const Int& mu,
                                     const Int& s);

/// All solutions with 0 <= y <= ymax and x, z >= 0 (y = 0 gives x = z; those
/// are listed up to x <= xmax_for_y0).
std::set<DiophantineTriple> diophantine_solutions_brute(const Int& q, const Int& ymax,
                                                        const Int& xmax_for_y0);

/// Canonical nonnegative triples generated by the family over all admissible
/// parameters with 0 <= y <= ymax (same y = 0 convention).
std::set<DiophantineTriple> diophantine_family_set(const Int& q, const Int& ymax,
                                                   const Int& xmax_for_y0);

/// The finite set { (d_i / d_j) n^beta / n'^gamma : d_i, d_j | 4R,
/// beta, gamma in {0, 1, 2} } of possible self-intersection quotients.
std::set<Rat> admissible_quotients(const Int& n, const Int& n_prime, const Int& r);

/// Window for the positive square m1 of the curve of genus n^2 + 1:
///   [ 2n^2 + T6/2 - sqrt(2 n^2 T6 + T6^2/4), 2n^2 ],
/// with the relaxed lower bound 2n^2 - sqrt(2 T6) n.
struct M1Interval {
    Surd lo;
    Rat hi;
    Surd relaxed_lo;

    bool contains(const Rat& m1) const { return lo <= m1 && m1 <= hi; }
    bool contains_relaxed(const Rat& m1) const { return relaxed_lo <= m1 && m1 <= hi; }
};

M1Interval m1_interval(const Int& n, const Rat& t6);

struct EliminationVerdict {
    Rat threshold;       ///< bound on n^2 above which K^2 > 0 is forced
    Rat k2_lower_bound;  ///< min(n, n')^2 - threshold
    bool eliminated;     ///< true once the lower bound is positive
};

/// Replays the final contradiction for proportional positive curves: with
/// m1 = n^2 and m1' = n'^2 forced, K^2 = n^2 - m2 - (18 + m3)^2 / m3 is
/// positive once n^2 exceeds (2 + T4) + max_{m3 in [1, 20+T4]} (18+m3)^2/m3.
EliminationVerdict eliminate_k2_nonpositive(const Int& n, const Int& n_prime,
                                            const ConstantsLedger& ledger);

struct PackingBound {
    Int bound;          ///< ceil( 6 (T7 - 1) / (cosh(eps/2) - 1) ), certified
    Rat paper_estimate; ///< 48 (T7 - 1) / eps^2
};

/// Ball-packing count in the hyperbolic cap of area 2 pi (T7 - 1), evaluated
/// through the identity 2 sinh^2(x/2) = cosh x - 1 with certified rational
/// enclosures of cosh.
PackingBound packing_count_bound(const Rat& t7, const Rat& eps);

struct CapIdentityCheck {
    RatInterval lhs;  ///< cosh R - 1
    RatInterval rhs;  ///< 2 sinh^2(R/2)
    bool consistent;  ///< intervals overlap at the requested width
};

/// Certified check of cosh R - 1 = 2 sinh^2(R/2) at a rational R.
CapIdentityCheck hyperbolic_cap_identity(const Rat& r, const Rat& width);

}  // namespace orbtop
