#pragma once

#include <string>
#include <vector>

#include "orbtop/int_matrix.hpp"
#include "orbtop/rational.hpp"

namespace orbtop {

/// One torsion block Z_{p^e} with multiplicity `count`.
struct TorsionComponent {
    Int prime;
    unsigned exponent = 1;
    unsigned multiplicity = 1;

    bool operator==(const TorsionComponent&) const = default;
};

/// Finitely generated abelian group in primary (prime-power) decomposition.
/// The representation is canonical: components sorted by (prime, exponent),
/// multiplicities positive, primes genuinely prime. Two groups are isomorphic
/// iff they compare equal.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    FiniteAbelianGroup(std::size_t free_rank, std::vector<TorsionComponent> torsion);

    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }
    static FiniteAbelianGroup free(std::size_t rank) { return FiniteAbelianGroup(rank, {}); }
    /// Z_{d_1} x ... x Z_{d_k} x Z^{#zeros}; d_i = 0 means a free factor,
    /// d_i = 1 contributes nothing.
    static FiniteAbelianGroup from_cyclic_orders(const std::vector<Int>& orders);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<TorsionComponent>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    /// Order of the torsion subgroup.
    Int torsion_order() const;

    /// Invariant factors k_1 | k_2 | ... | k_s (ascending).
    std::vector<Int> invariant_factors() const;

    std::string to_string() const;

    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    std::size_t free_rank_ = 0;
    std::vector<TorsionComponent> torsion_;
};

/// Cokernel Z^cols / image(M^T), i.e. the abelian group presented by the rows
/// of M as relations on cols generators.
FiniteAbelianGroup cokernel(const IntMatrix& m);

}  // namespace orbtop
