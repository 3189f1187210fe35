#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbtop/hjcf.hpp"
#include "orbtop/rational.hpp"

namespace orbtop {

/// Formal rational combination of named curves.
using DivisorClass = std::map<std::string, Rat>;

/// Intersection table of the named surfaces in the fiber sum of two
/// rational elliptic surfaces glued along a smooth fiber. It carries two
/// 9-cycles of (-2)-spheres C1..C9 and C1'..C9', three glued sections
/// E1, E2, E3 of square -2 (E_j meets C_{3j-2} and C'_{3j-2} and every
/// fiber once), a smooth fiber F of square 0, and two disjoint pairs
/// (D, T), (D', T') with D^2 = -2, T^2 = 0, D.T = 1.
class CurveSystem {
public:
    CurveSystem();

    const std::vector<std::string>& names() const { return names_; }
    bool has(const std::string& name) const;

    Rat pairing(const std::string& a, const std::string& b) const;
    Rat pairing(const DivisorClass& a, const DivisorClass& b) const;

    /// The 17 spheres C8, ..., C1, E1, C1', ..., C8' in chain order.
    std::vector<std::string> contraction_chain() const;
    /// Their self-intersection data as a continued-fraction chain [2,...,2].
    HJChain contraction_chain_data() const;

private:
    std::vector<std::string> names_;
    std::map<std::pair<std::string, std::string>, Rat> table_;
    void set(const std::string& a, const std::string& b, long value);
};

}  // namespace orbtop
