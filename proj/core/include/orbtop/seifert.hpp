#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbtop/abelian_group.hpp"
#include "orbtop/hjcf.hpp"
#include "orbtop/symmetric_form.hpp"

namespace orbtop {

/// Connected surface of isotropy points inside a 4-orbifold. The local
/// invariant j and its inverse b satisfy j * b = 1 (mod m).
struct IsotropySurface {
    std::string label;
    Int genus;                ///< >= 0
    Int multiplicity;         ///< m >= 2
    Int local_invariant;      ///< j, gcd(j, m) = 1
    Int b;                    ///< 0 < b < m, j * b = 1 (mod m)
    RatVec homology_class;    ///< coordinates in the model basis
};

/// Isolated point with nontrivial reduced isotropy (d > 1 after reduction).
struct SingularPoint {
    std::string label;
    LocalAction action;
    std::vector<std::string> incident_surfaces;  ///< at most 2
};

struct BasisVector {
    std::string label;
    bool integral = false;  ///< declared to lie in the integral lattice
};

/// A closed oriented cyclic 4-orbifold presented through its rational
/// second cohomology: a basis with an intersection form, isotropy surfaces
/// as coordinate vectors, and isolated singular points. b1 = 0 is an input
/// assertion rather than a computed fact.
struct OrbifoldModel {
    std::vector<BasisVector> basis;
    SymmetricForm intersection;
    bool b1_zero = false;
    bool w2_zero = false;
    std::optional<RatVec> canonical_class;
    std::vector<IsotropySurface> surfaces;
    std::vector<SingularPoint> points;

    std::size_t b2() const { return basis.size(); }
    const IsotropySurface& surface(const std::string& label) const;
    const SingularPoint& point(const std::string& label) const;
    Rat pair(const RatVec& u, const RatVec& v) const { return intersection.pairing(u, v); }

    /// Checks every structural invariant; throws InvariantViolation with the
    /// violated rule. In particular, two surfaces with non-coprime
    /// multiplicities must have intersection number zero.
    void validate() const;
};

/// Seifert circle bundle over an orbifold model, determined by a background
/// integral class and the local invariants of the isotropy surfaces.
struct SeifertBundle {
    OrbifoldModel base;
    RatVec background_class;  ///< c1 of the background line bundle

    /// lcm of all point multiplicities m_x = d_x * prod m_i and surface
    /// multiplicities.
    Int ell() const;
    /// lcm of the surface multiplicities alone.
    Int mu() const;
};

/// Orbifold multiplicity of a singular point: d_x times the product of the
/// multiplicities of the incident surfaces (which must be pairwise coprime).
Int point_multiplicity(const OrbifoldModel& model, const std::string& point_label);

/// First Chern class c1(B) + sum (b_i / m_i) [D_i], exact rational.
RatVec chern_class(const SeifertBundle& bundle);

struct H1Report {
    bool b1_zero = false;               // condition 1 (input assertion)
    bool surjective = false;            // condition 2
    bool primitive = false;             // condition 3
    std::optional<Int> failing_prime;   // witness for a condition-2 failure
    Int primitivity_gcd;                // witness for condition 3
    std::vector<std::string> notes;

    bool all() const { return b1_zero && surjective && primitive; }
};

/// Vanishing test for H_1 of the total space: b1 of the base, surjectivity
/// of restriction to the isotropy surfaces (checked prime by prime through
/// unit-hitting pairings of the declared integral basis vectors, and
/// cross-checked by a Smith-form cokernel computation), and primitivity of
/// the mu-rescaled Chern class away from the singular points (decided by the
/// gcd of its pairings with the integral basis vectors).
H1Report h1_vanishing_report(const SeifertBundle& bundle);

/// H_2 of the total space when H_1 vanishes: Z^{b2 - 1} plus Z_{m_i}^{2 g_i}
/// for every isotropy surface. Throws H1NotZero otherwise.
FiniteAbelianGroup h2_total_space(const SeifertBundle& bundle);

/// Whether the total space is spin: the pulled-back second Stiefel-Whitney
/// class of the base plus sum (m_i - 1) [D_i] must vanish mod 2.
bool spin_check(const SeifertBundle& bundle);

/// Classification label of a simply connected closed spin 5-manifold with
/// the given second homology.
struct SmaleBardenLabel {
    std::size_t rank = 0;
    std::vector<Int> invariant_factors;  ///< k_1 | k_2 | ... | k_s
    int barden = 0;                      ///< 0 for spin manifolds

    std::string name() const;
};

SmaleBardenLabel smale_barden_label(const FiniteAbelianGroup& h2, bool spin);

/// Abelianized orbifold fundamental group presented by a relation matrix
/// (rows = relations, columns = generators).
FiniteAbelianGroup abelianized_orbifold_pi1(const IntMatrix& relation_matrix);

}  // namespace orbtop
