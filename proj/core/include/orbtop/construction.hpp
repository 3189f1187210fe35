#pragma once

#include <string>
#include <vector>

#include "orbtop/curve_system.hpp"
#include "orbtop/rat_linalg.hpp"
#include "orbtop/seifert.hpp"

namespace orbtop {

/// Element of SL(2, Z).
struct SL2Matrix {
    Int a, b, c, d;

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    SL2Matrix operator*(const SL2Matrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    SL2Matrix power(unsigned n) const;
    static SL2Matrix identity() { return {1, 0, 0, 1}; }
    bool operator==(const SL2Matrix&) const = default;
};

/// Monodromy of a fishtail-type singular fiber with vanishing cycle (p, q).
SL2Matrix vanishing_matrix(const Int& p, const Int& q);

/// Checks the global monodromy relation of the elliptic fibration with one
/// I9 fiber and three nodal fibers with vanishing cycles (1,1), (1,-2),
/// (2,-1): the product with nine more (1,0) twists is the identity.
bool verify_monodromy();
SL2Matrix monodromy_product();

struct GompfBookkeeping {
    Int chi;
    Int b2;
};

/// Euler characteristic and b2 of a fiber sum of two pieces with b1 = 0
/// glued along a surface of the given genus.
GompfBookkeeping gompf_bookkeeping(const Int& chi1, const Int& chi2, const Int& genus);

/// Genus of two surfaces glued along d positive transverse intersection
/// points with the gluing surface: g1 + g2 + d - 1.
Int glued_genus(const Int& g1, const Int& g2, const Int& d);

struct TnInvariants {
    Int genus;
    Int self_intersection;

    bool operator==(const TnInvariants&) const = default;
};

/// The n-fold torus-plus-sphere smoothing T_n: genus n^2 + 1 and square
/// 2 n^2; satisfies adjunction with K . T_n = 0. n = 0 is the torus itself.
TnInvariants tn_invariants(const Int& n);

struct ASystemSolution {
    std::vector<Int> coeffs;  ///< a_0 ... a_8
    Int a_squared;
    Int genus;
};

/// Solves for the class 2F + a_0 E1 + sum a_k (C_k + C_k') orthogonal to E1
/// and C_1 ... C_8; the system is integral and uniquely solvable.
ASystemSolution solve_A_system();

struct ChainContraction {
    CyclicSingularity singularity;
    Int new_b2;
};

/// Contracting a chain removes length(chain) classes from b2 and creates a
/// cyclic singularity of type hj_eval(chain).
ChainContraction contract_chain_bookkeeping(const HJChain& chain, const Int& ambient_b2);

/// Rational intersection form on the quotient after contracting a
/// configuration with negative-definite Gram matrix `config`. `ambient` holds
/// the pairings of the k pushed-forward classes upstairs and `incidence`
/// their intersections with the l configuration curves (k x l). Each class
/// pulls back to itself plus the unique exceptional correction orthogonal to
/// the configuration.
SymmetricForm mumford_pairing(const SymmetricForm& ambient, const RatMatrix& incidence,
                              const SymmetricForm& config);

/// Primes p_nm, 0 <= n, m <= N: pairwise distinct, at least 5, and larger
/// than both indices. Filled deterministically row-major with the smallest
/// unused admissible prime.
struct PrimeScheme {
    std::size_t n = 0;  ///< table is (n+1) x (n+1)
    std::vector<std::vector<Int>> p;

    const Int& at(std::size_t row, std::size_t col) const { return p[row][col]; }
};

PrimeScheme build_prime_scheme(std::size_t n);

struct Multiplicities {
    std::vector<Int> t;        ///< m_{T_n}  = prod_m p_nm
    std::vector<Int> t_prime;  ///< m_{T'_m} = prod_n p_nm^2
    Int a;                     ///< m_A      = prod p_nm^3
};

Multiplicities multiplicities(const PrimeScheme& scheme);

/// The construction's orbifold together with the Seifert bundle data over
/// it: basis (T_1, T_1', A) with Gram diag(2, 2, 18), surfaces T_n, T'_m, A
/// with the scheme multiplicities, the three singular points, and the local
/// invariant b_0 chosen by the Chinese remainder theorem (odd, avoiding the
/// residue mod 3 that would break primitivity).
struct ConstructionModel {
    PrimeScheme scheme;
    Multiplicities mults;
    SeifertBundle bundle;
    Int b0;
};

ConstructionModel assemble_orbifold(std::size_t n);
ConstructionModel assemble_orbifold(std::size_t n, const PrimeScheme& scheme);

struct Pi1Options {
    /// Dropping the isotropy-order relations m_j c_j = 0 is the negative
    /// control: the abelianization must become nontrivial.
    bool with_multiplicity_relations = true;
};

/// Relation matrix of the abelianized orbifold fundamental group on the
/// generators a, a', b, gamma, c_0..c_N, c'_0..c'_N (rows = relations).
IntMatrix pi1_relation_matrix(std::size_t n, const PrimeScheme& scheme,
                              const Pi1Options& options = {});

std::vector<std::string> pi1_generator_labels(std::size_t n);

}  // namespace orbtop
