#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "orbtop/rational.hpp"

namespace orbtop {

/// Deterministic primality by trial division (adequate at the magnitudes
/// this library needs; every caller works with primes of modest size).
bool is_prime(const Int& n);

/// Least prime >= start satisfying `accept`. The predicates used here are
/// lower bounds and finite exclusion sets, so the search terminates.
Int next_prime_satisfying(const Int& start, const std::function<bool(const Int&)>& accept);

inline Int next_prime(const Int& start) {
    return next_prime_satisfying(start, [](const Int&) { return true; });
}

/// Smallest nonnegative solution of simultaneous congruences x = r_i mod m_i.
/// Moduli must be pairwise coprime; throws NonCoprimeModuli otherwise.
Int crt_smallest(const std::vector<std::pair<Int, Int>>& congruences);

/// Prime factorization (p, exponent), primes ascending.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

}  // namespace orbtop
