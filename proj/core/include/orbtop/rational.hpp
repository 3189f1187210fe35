#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "orbtop/errors.hpp"

namespace orbtop {

// Arbitrary-precision integers and rationals. GMP canonical form matches the
// required invariants: rationals are always reduced with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InvalidParams("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num) { return Rat(num); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

/// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Smallest integer >= q.
inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Representative of a mod m in [0, m). Requires m > 0.
inline Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Multiplicative inverse of a mod m; throws if gcd(a, m) != 1.
inline Int inverse_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw InvalidParams("no inverse: gcd(" + a.get_str() + ", " + m.get_str() + ") != 1");
    return r;
}

/// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& a) {
    if (a < 0) throw InvalidParams("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline std::string int_str(const Int& a) { return a.get_str(); }

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("not an integer: '" + s + "'");
    }
}

/// Renders q as "p" when integral, "p/q" otherwise.
inline std::string rat_str(const Rat& q) {
    return is_integer(q) ? q.get_num().get_str()
                         : q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return make_rat(num, den);
}

using RatVec = std::vector<Rat>;

inline RatVec rat_vec(std::initializer_list<long> entries) {
    RatVec v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

}  // namespace orbtop
