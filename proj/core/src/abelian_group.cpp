#include "orbtop/abelian_group.hpp"

#include <algorithm>
#include <map>

#include "orbtop/number_theory.hpp"

namespace orbtop {

FiniteAbelianGroup::FiniteAbelianGroup(std::size_t free_rank,
                                       std::vector<TorsionComponent> torsion)
    : free_rank_(free_rank) {
    std::map<std::pair<Int, unsigned>, unsigned long> merged;
    for (const auto& c : torsion) {
        if (c.multiplicity == 0) continue;
        if (c.exponent == 0) throw InvalidParams("torsion exponent must be positive");
        if (!is_prime(c.prime))
            throw InvalidParams("torsion base " + int_str(c.prime) + " is not prime");
        merged[{c.prime, c.exponent}] += c.multiplicity;
    }
    for (const auto& [key, mult] : merged)
        torsion_.push_back({key.first, key.second, static_cast<unsigned>(mult)});
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<Int>& orders) {
    std::size_t rank = 0;
    std::vector<TorsionComponent> torsion;
    for (const Int& d : orders) {
        if (d < 0) throw InvalidParams("negative cyclic order");
        if (d == 0) {
            ++rank;
            continue;
        }
        if (d == 1) continue;
        for (const auto& [p, e] : factorize(d)) torsion.push_back({p, e, 1});
    }
    return FiniteAbelianGroup(rank, std::move(torsion));
}

Int FiniteAbelianGroup::torsion_order() const {
    Int order = 1;
    for (const auto& c : torsion_)
        for (unsigned i = 0; i < c.multiplicity; ++i) order *= pow_int(c.prime, c.exponent);
    return order;
}

std::vector<Int> FiniteAbelianGroup::invariant_factors() const {
    // Per prime, list exponents with multiplicity, descending; the j-th
    // invariant factor (from the top) multiplies the j-th largest exponent
    // of each prime.
    std::map<Int, std::vector<unsigned>> exponents;
    std::size_t slots = 0;
    for (const auto& c : torsion_) {
        auto& v = exponents[c.prime];
        for (unsigned i = 0; i < c.multiplicity; ++i) v.push_back(c.exponent);
    }
    for (auto& [p, v] : exponents) {
        std::sort(v.rbegin(), v.rend());
        slots = std::max(slots, v.size());
    }
    std::vector<Int> factors(slots, Int(1));
    for (const auto& [p, v] : exponents)
        for (std::size_t j = 0; j < v.size(); ++j)
            factors[slots - 1 - j] *= pow_int(p, v[j]);
    return factors;  // ascending, k_1 | k_2 | ... | k_s
}

std::string FiniteAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += " + ";
        out += part;
    };
    if (free_rank_ == 1) append("Z");
    if (free_rank_ > 1) append("Z^" + std::to_string(free_rank_));
    for (const auto& c : torsion_) {
        std::string part = "Z_" + int_str(pow_int(c.prime, c.exponent));
        if (c.multiplicity > 1) part += "^" + std::to_string(c.multiplicity);
        append(part);
    }
    return out;
}

FiniteAbelianGroup cokernel(const IntMatrix& m) {
    IntMatrix d = smith_normal_form(m).d;
    std::vector<Int> orders;
    std::size_t nonzero = 0;
    for (std::size_t t = 0; t < std::min(d.rows(), d.cols()); ++t) {
        if (d.at(t, t) == 0) continue;
        ++nonzero;
        if (d.at(t, t) > 1) orders.push_back(d.at(t, t));
    }
    for (std::size_t i = nonzero; i < m.cols(); ++i) orders.push_back(0);
    return FiniteAbelianGroup::from_cyclic_orders(orders);
}

}  // namespace orbtop
