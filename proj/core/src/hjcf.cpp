#include "orbtop/hjcf.hpp"

#include "orbtop/errors.hpp"
#include "orbtop/rat_linalg.hpp"

namespace orbtop {

namespace {

void validate_chain(const HJChain& chain) {
    if (chain.coeffs.empty()) throw InvalidChain("empty chain");
    for (const Int& b : chain.coeffs)
        if (b < 2) throw InvalidChain("chain coefficient " + int_str(b) + " < 2");
}

void validate_singularity(const CyclicSingularity& s) {
    if (!(s.d > s.r && s.r > 0))
        throw InvalidParams("cyclic singularity needs 0 < r < d, got (" + int_str(s.d) + ", " +
                            int_str(s.r) + ")");
    if (gcd_int(s.d, s.r) != 1)
        throw InvalidParams("cyclic singularity needs gcd(d, r) = 1, got (" + int_str(s.d) +
                            ", " + int_str(s.r) + ")");
}

// Tridiagonal Gram matrix of the chain: -b_i on the diagonal, 1 next to it.
RatMatrix chain_gram(const HJChain& chain) {
    const std::size_t l = chain.length();
    RatMatrix g(l, RatVec(l, Rat(0)));
    for (std::size_t i = 0; i < l; ++i) {
        g[i][i] = Rat(-chain.coeffs[i]);
        if (i + 1 < l) {
            g[i][i + 1] = 1;
            g[i + 1][i] = 1;
        }
    }
    return g;
}

}  // namespace

HJChain HJChain::of(std::initializer_list<long> bs) {
    HJChain c;
    for (long b : bs) c.coeffs.emplace_back(b);
    return c;
}

HJChain HJChain::constant(const Int& b, std::size_t l) {
    HJChain c;
    c.coeffs.assign(l, b);
    return c;
}

CyclicSingularity hj_eval(const HJChain& chain) {
    validate_chain(chain);
    // Back-to-front integer recurrence N_i = b_i N_{i+1} - N_{i+2}; the
    // resulting numerator/denominator pair is automatically coprime.
    Int next(1), after(0);
    for (auto it = chain.coeffs.rbegin(); it != chain.coeffs.rend(); ++it) {
        Int current = (*it) * next - after;
        after = next;
        next = current;
    }
    return {next, after};
}

HJChain hj_expand(const CyclicSingularity& s) {
    validate_singularity(s);
    HJChain chain;
    Int d = s.d, r = s.r;
    while (r > 0) {
        Int b;
        mpz_cdiv_q(b.get_mpz_t(), d.get_mpz_t(), r.get_mpz_t());
        chain.coeffs.push_back(b);
        Int next = b * r - d;
        d = r;
        r = next;
    }
    return chain;
}

CyclicSingularity dual(const CyclicSingularity& s) {
    validate_singularity(s);
    return {s.d, inverse_mod(s.r, s.d)};
}

RatVec pullback_coeffs(const HJChain& chain, TailEnd tail_end) {
    validate_chain(chain);
    const std::size_t l = chain.length();
    RatVec rhs(l, Rat(0));
    rhs[tail_end == TailEnd::Front ? 0 : l - 1] = -1;
    return solve_linear_system(chain_gram(chain), rhs);
}

RatVec log_discrepancies(const HJChain& chain, bool tail_attached) {
    validate_chain(chain);
    const std::size_t l = chain.length();
    RatMatrix m(l, RatVec(l, Rat(0)));
    RatVec rhs(l);
    for (std::size_t i = 0; i < l; ++i) {
        m[i][i] = Rat(-chain.coeffs[i]);
        if (i > 0) m[i][i - 1] = 1;
        if (i + 1 < l) m[i][i + 1] = 1;
        rhs[i] = Rat(chain.coeffs[i] - 2);
    }
    if (tail_attached) rhs[0] += 1;  // moves the boundary value a_0 = -1 across
    return solve_linear_system(std::move(m), std::move(rhs));
}

ChainSide ChainSide::of_chain(const HJChain& partial) {
    if (partial.coeffs.empty()) return trivial();
    CyclicSingularity s = hj_eval(partial);
    return {s.d, s.r};
}

Rat local_contribution(const ChainSide& left, const ChainSide& right, const Int& b) {
    if (b < 2) throw InvalidParams("central curve must have self-intersection <= -2");
    for (const ChainSide& side : {left, right}) {
        bool ok = side.d == 1 ? side.a == 0
                              : side.d > 1 && side.a >= 1 && side.a < side.d &&
                                    gcd_int(side.d, side.a) == 1;
        if (!ok)
            throw InvalidParams("invalid chain side (" + int_str(side.d) + ", " +
                                int_str(side.a) + ")");
    }
    Int denom = b * left.d * right.d - left.a * right.d - right.a * left.d;
    if (denom <= 0)
        throw DegenerateConfiguration("nonpositive intersection denominator " + int_str(denom));
    return Rat(1) + make_rat(left.d * (right.d - 1), denom);
}

Rat local_contribution_resolution(const HJChain& chain, std::size_t j) {
    validate_chain(chain);
    if (j < 1 || j > chain.length()) throw InvalidParams("curve index out of range");
    // Pull the transverse curve back to the resolution, orthogonally to the
    // chain, and collect the exceptional corrections to (K + D + A) . A.
    RatVec rhs(chain.length(), Rat(0));
    rhs[j - 1] = -1;
    RatVec r = solve_linear_system(chain_gram(chain), rhs);
    Rat total = r[0] + r[j - 1];
    for (std::size_t k = 0; k < chain.length(); ++k)
        total += r[k] * Rat(chain.coeffs[k] - 2);
    return total;
}

LocalActionReduction reduce_action(const LocalAction& a) {
    if (a.m < 1) throw InvalidParams("action order must be positive");
    Int j1 = mod_pos(a.j1, a.m), j2 = mod_pos(a.j2, a.m);
    if (gcd_int(gcd_int(j1, j2), a.m) != 1)
        throw InvalidParams("local action needs gcd(j1, j2, m) = 1");
    LocalActionReduction red;
    red.m1 = gcd_int(j1, a.m);
    red.m2 = gcd_int(j2, a.m);
    red.d = a.m / (red.m1 * red.m2);
    red.e1 = red.d == 1 ? Int(0) : mod_pos(j1 / red.m1, red.d);
    red.e2 = red.d == 1 ? Int(0) : mod_pos(j2 / red.m2, red.d);
    if (red.d > 1 && (gcd_int(red.e1, red.d) != 1 || gcd_int(red.e2, red.d) != 1))
        throw InvariantViolation("reduced weights not coprime to the quotient order");
    return red;
}

}  // namespace orbtop
