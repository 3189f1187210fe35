#pragma once

#include <vector>

#include "orbtop/rational.hpp"

namespace orbtop {

/// Hirzebruch-Jung continued fraction [b_1, ..., b_l] with every b_i >= 2;
/// encodes a chain of rational curves of self-intersections -b_i.
struct HJChain {
    std::vector<Int> coeffs;

    std::size_t length() const { return coeffs.size(); }
    static HJChain of(std::initializer_list<long> bs);
    static HJChain constant(const Int& b, std::size_t l);
};

/// Cyclic quotient singularity of type (d, r): the quotient of C^2 by a
/// cyclic group of order d acting with weights (1, r), 0 < r < d, gcd = 1.
struct CyclicSingularity {
    Int d;
    Int r;

    bool operator==(const CyclicSingularity&) const = default;
};

/// Cyclic action on C^2 of order m with weights (j2, j1) on the coordinates,
/// gcd(j1, j2, m) = 1.
struct LocalAction {
    Int m;
    Int j1;
    Int j2;
};

/// Normal form of a LocalAction: m = m1 * m2 * d with m1 = gcd(j1, m),
/// m2 = gcd(j2, m); the point is smooth iff d = 1.
struct LocalActionReduction {
    Int m1;
    Int m2;
    Int d;
    Int e1;
    Int e2;
};

/// Evaluates the continued fraction b_1 - 1/(b_2 - 1/(...)) to a reduced
/// fraction d/r with d > r >= 1.
CyclicSingularity hj_eval(const HJChain& chain);

/// Unique HJ expansion of d/r; inverse of hj_eval.
HJChain hj_expand(const CyclicSingularity& s);

/// The singularity (d, r') with r * r' = 1 (mod d); its chain is the reverse.
CyclicSingularity dual(const CyclicSingularity& s);

enum class TailEnd { Front, Back };

/// Coefficients r_i with (A + sum r_i C_i) orthogonal to every chain curve,
/// where A meets the chain once at the given end. All r_i lie in (0, 1) and
/// decrease strictly away from the tail.
RatVec pullback_coeffs(const HJChain& chain, TailEnd tail_end);

/// Discrepancies a_i along the chain from the adjunction relations
/// a_{i-1} - b_i a_i + a_{i+1} = b_i - 2, with boundary value a_0 = -1 when a
/// tail curve is attached at the front and a_0 = 0 otherwise, a_{l+1} = 0.
/// Log canonical means every a_i >= -1.
RatVec log_discrepancies(const HJChain& chain, bool tail_attached);

/// One side of a curve meeting a chain: d and a with a/d the inverse
/// continued fraction of the partial chain; (1, 0) encodes an empty side.
struct ChainSide {
    Int d;
    Int a;

    static ChainSide trivial() { return {Int(1), Int(0)}; }
    /// Side data of the sub-chain [b_1, ..., b_k]: a/d = [b_1,...,b_k]^{-1}.
    static ChainSide of_chain(const HJChain& partial);
};

/// Local intersection contribution at a contracted chain where a transverse
/// curve meets the curve of self-intersection -b whose neighbours contract to
/// singularities encoded by `left` and `right`:
///   1 + d1 (d2 - 1) / (b d1 d2 - a1 d2 - a2 d1)  >= 1.
Rat local_contribution(const ChainSide& left, const ChainSide& right, const Int& b);

/// Independent route to the same quantity: solve the orthogonal pullback on
/// the resolution of the full chain (curve meets curve #j, 1-based; tail at
/// the front) and sum the exceptional corrections.
Rat local_contribution_resolution(const HJChain& chain, std::size_t j);

LocalActionReduction reduce_action(const LocalAction& a);

}  // namespace orbtop
