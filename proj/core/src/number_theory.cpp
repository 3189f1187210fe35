#include "orbtop/number_theory.hpp"

namespace orbtop {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    Int bound = isqrt(n);
    for (Int d = 5; d <= bound; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Int next_prime_satisfying(const Int& start, const std::function<bool(const Int&)>& accept) {
    Int candidate = start < 2 ? Int(2) : start;
    while (true) {
        if (is_prime(candidate) && accept(candidate)) return candidate;
        ++candidate;
    }
}

Int crt_smallest(const std::vector<std::pair<Int, Int>>& congruences) {
    for (const auto& [r, m] : congruences) {
        (void)r;
        if (m <= 0) throw InvalidParams("CRT modulus must be positive");
    }
    for (size_t i = 0; i < congruences.size(); ++i) {
        for (size_t j = i + 1; j < congruences.size(); ++j) {
            Int g = gcd_int(congruences[i].second, congruences[j].second);
            if (g > 1)
                throw NonCoprimeModuli("moduli " + int_str(congruences[i].second) + " and " +
                                       int_str(congruences[j].second) + " share factor " +
                                       int_str(g));
        }
    }
    Int residue = 0, modulus = 1;
    for (const auto& [r, m] : congruences) {
        if (m == 1) continue;
        // Solve x = residue (mod modulus), x = r (mod m).
        Int shift = mod_pos((mod_pos(r, m) - residue) * inverse_mod(modulus, m), m);
        residue += shift * modulus;
        modulus *= m;
    }
    return mod_pos(residue, modulus);
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n <= 0) throw InvalidParams("factorize expects a positive integer");
    std::vector<std::pair<Int, unsigned>> factors;
    Int rest = n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    Int d = 5;
    while (d * d <= rest) {
        strip(d);
        strip(d + 2);
        d += 6;
    }
    if (rest > 1) factors.emplace_back(rest, 1);
    return factors;
}

}  // namespace orbtop
