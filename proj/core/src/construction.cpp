#include "orbtop/construction.hpp"

#include <algorithm>
#include <set>

#include "orbtop/number_theory.hpp"

namespace orbtop {

SL2Matrix SL2Matrix::power(unsigned n) const {
    SL2Matrix acc = identity();
    for (unsigned i = 0; i < n; ++i) acc = acc * (*this);
    return acc;
}

SL2Matrix vanishing_matrix(const Int& p, const Int& q) {
    if (p == 0 && q == 0) throw InvalidParams("vanishing cycle (0, 0)");
    return {1 + p * q, -p * p, q * q, 1 - p * q};
}

SL2Matrix monodromy_product() {
    SL2Matrix c = vanishing_matrix(1, 1);
    return c * vanishing_matrix(1, -2) * vanishing_matrix(2, -1) *
           vanishing_matrix(1, 0).power(9);
}

bool verify_monodromy() { return monodromy_product().is_identity(); }

GompfBookkeeping gompf_bookkeeping(const Int& chi1, const Int& chi2, const Int& genus) {
    Int chi = chi1 + chi2 - 2 * (2 - 2 * genus);
    return {chi, chi - 2};
}

Int glued_genus(const Int& g1, const Int& g2, const Int& d) {
    if (d < 1) throw InvalidParams("gluing needs at least one intersection point");
    return g1 + g2 + d - 1;
}

TnInvariants tn_invariants(const Int& n) {
    if (n < 0) throw InvalidParams("negative multiple");
    return {n * n + 1, 2 * n * n};
}

ASystemSolution solve_A_system() {
    CurveSystem cs;
    // Unknowns multiply E1 and the pairs C_k + C_k'; the class must be
    // orthogonal to E1 and C_1..C_8 (C_9 is not part of the chain).
    std::vector<DivisorClass> gens(9);
    gens[0] = {{"E1", Rat(1)}};
    for (int k = 1; k <= 8; ++k)
        gens[k] = {{"C" + std::to_string(k), Rat(1)}, {"C" + std::to_string(k) + "'", Rat(1)}};
    DivisorClass base = {{"F", Rat(2)}};

    std::vector<DivisorClass> targets;
    targets.push_back({{"E1", Rat(1)}});
    for (int i = 1; i <= 8; ++i) targets.push_back({{"C" + std::to_string(i), Rat(1)}});

    RatMatrix m(9, RatVec(9));
    RatVec rhs(9);
    for (std::size_t row = 0; row < 9; ++row) {
        for (std::size_t col = 0; col < 9; ++col) m[row][col] = cs.pairing(gens[col], targets[row]);
        rhs[row] = -cs.pairing(base, targets[row]);
    }
    RatVec x = solve_linear_system(std::move(m), std::move(rhs));

    ASystemSolution out;
    DivisorClass a_class = base;
    for (std::size_t k = 0; k < 9; ++k) {
        if (!is_integer(x[k]))
            throw SingularSystem("non-integral solution coefficient " + rat_str(x[k]));
        out.coeffs.push_back(rat_num(x[k]));
        for (const auto& [name, coeff] : gens[k]) a_class[name] += x[k] * coeff;
    }
    Rat sq = cs.pairing(a_class, a_class);
    out.a_squared = rat_num(sq);
    // Adjunction with K . A = 0: 2g - 2 = A^2.
    out.genus = (out.a_squared + 2) / 2;
    return out;
}

ChainContraction contract_chain_bookkeeping(const HJChain& chain, const Int& ambient_b2) {
    return {hj_eval(chain), ambient_b2 - Int(chain.length())};
}

SymmetricForm mumford_pairing(const SymmetricForm& ambient, const RatMatrix& incidence,
                              const SymmetricForm& config) {
    const std::size_t k = ambient.dim();
    const std::size_t l = config.dim();
    if (incidence.size() != k) throw InvalidParams("incidence row count mismatch");
    for (const auto& row : incidence)
        if (row.size() != l) throw InvalidParams("incidence column count mismatch");
    if (!config.is_negative_definite())
        throw NotNegativeDefinite("contracted configuration must be negative definite");

    RatMatrix gram(l, RatVec(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) gram[i][j] = config.at(i, j);

    // Each class pulls back to itself + sum r_i C_i with G r = -v.
    std::vector<RatVec> corrections(k);
    for (std::size_t j = 0; j < k; ++j) {
        RatVec rhs(l);
        for (std::size_t i = 0; i < l; ++i) rhs[i] = -incidence[j][i];
        corrections[j] = l == 0 ? RatVec{} : solve_linear_system(gram, rhs);
    }
    SymmetricForm out(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rat value = ambient.at(i, j);
            for (std::size_t t = 0; t < l; ++t) value += incidence[i][t] * corrections[j][t];
            out.at(i, j) = value;
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (out.at(i, j) != out.at(j, i))
                throw InvariantViolation("pushed-forward pairing not symmetric");
    return out;
}

PrimeScheme build_prime_scheme(std::size_t n) {
    PrimeScheme scheme;
    scheme.n = n;
    scheme.p.assign(n + 1, std::vector<Int>(n + 1));
    std::set<Int> used;
    for (std::size_t row = 0; row <= n; ++row)
        for (std::size_t col = 0; col <= n; ++col) {
            Int start = std::max<Int>(Int(5), Int(std::max(row, col) + 1));
            Int p = next_prime_satisfying(
                start, [&used](const Int& q) { return used.find(q) == used.end(); });
            used.insert(p);
            scheme.p[row][col] = p;
        }
    return scheme;
}

Multiplicities multiplicities(const PrimeScheme& scheme) {
    const std::size_t n = scheme.n;
    Multiplicities m;
    m.t.assign(n + 1, Int(1));
    m.t_prime.assign(n + 1, Int(1));
    m.a = 1;
    for (std::size_t row = 0; row <= n; ++row)
        for (std::size_t col = 0; col <= n; ++col) {
            const Int& p = scheme.at(row, col);
            m.t[row] *= p;
            m.t_prime[col] *= p * p;
            m.a *= p * p * p;
        }
    return m;
}

namespace {

IsotropySurface make_surface(std::string label, const Int& genus, const Int& m, const Int& b,
                             RatVec cls) {
    IsotropySurface s;
    s.label = std::move(label);
    s.genus = genus;
    s.multiplicity = m;
    s.b = b;
    s.local_invariant = inverse_mod(b, m);
    s.homology_class = std::move(cls);
    return s;
}

// Smallest positive b_0 that is odd, keeps the mu-rescaled class away from
// the residue 0 mod 3 on its first coordinate, and is invertible mod m_0.
Int choose_b0(const Multiplicities& mults, std::size_t n) {
    const Int mu = mults.a;
    Int u = mod_pos(mu / mults.t[0], 3);
    Int s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += 2 * Int(k) * (mu / mults.t[k]);
    s = mod_pos(s, 3);

    std::vector<Int> candidates;
    for (long t = 0; t < 3; ++t)
        if (mod_pos(Int(t) * u + s, 3) != 0)
            candidates.push_back(crt_smallest({{Int(1), Int(2)}, {Int(t), Int(3)}}));
    std::sort(candidates.begin(), candidates.end());
    for (Int b0 : candidates) {
        while (gcd_int(b0, mults.t[0]) != 1) b0 += 6;  // keeps both congruences
        return b0;
    }
    throw InvariantViolation("no admissible b_0 residue");  // unreachable
}

}  // namespace

ConstructionModel assemble_orbifold(std::size_t n) {
    return assemble_orbifold(n, build_prime_scheme(n));
}

ConstructionModel assemble_orbifold(std::size_t n, const PrimeScheme& scheme) {
    if (scheme.n != n) throw InvalidParams("scheme size does not match N");
    ConstructionModel out;
    out.scheme = scheme;
    out.mults = multiplicities(scheme);

    OrbifoldModel model;
    // Basis of integral classes: the genus-2 smoothings on both sides and
    // the genus-10 surface; squares 2, 2, 18, pairwise orthogonal.
    model.basis = {{"T1", true}, {"T1'", true}, {"A", true}};
    model.intersection = SymmetricForm::diagonal({Rat(2), Rat(2), Rat(18)});
    model.b1_zero = true;
    model.w2_zero = true;
    model.canonical_class = RatVec{Rat(0), Rat(0), Rat(0)};

    out.b0 = choose_b0(out.mults, n);
    for (std::size_t k = 0; k <= n; ++k) {
        TnInvariants inv = tn_invariants(Int(k));
        Rat coord = k == 0 ? Rat(1, 2) : Rat(Int(k));
        Int b = k == 0 ? out.b0 : Int(1);
        model.surfaces.push_back(make_surface("T" + std::to_string(k), inv.genus, out.mults.t[k],
                                              b, {coord, Rat(0), Rat(0)}));
    }
    for (std::size_t k = 0; k <= n; ++k) {
        TnInvariants inv = tn_invariants(Int(k));
        Rat coord = k == 0 ? Rat(1, 2) : Rat(Int(k));
        model.surfaces.push_back(make_surface("T" + std::to_string(k) + "'", inv.genus,
                                              out.mults.t_prime[k], Int(1),
                                              {Rat(0), coord, Rat(0)}));
    }
    model.surfaces.push_back(
        make_surface("A", Int(10), out.mults.a, Int(1), {Rat(0), Rat(0), Rat(1)}));

    model.points.push_back({"p", LocalAction{Int(2), Int(1), Int(1)}, {"T0"}});
    model.points.push_back({"p'", LocalAction{Int(2), Int(1), Int(1)}, {"T0'"}});
    model.points.push_back({"q", LocalAction{Int(18), Int(1), Int(17)}, {}});

    model.validate();
    out.bundle = SeifertBundle{std::move(model), {Rat(0), Rat(0), Rat(0)}};
    return out;
}

std::vector<std::string> pi1_generator_labels(std::size_t n) {
    std::vector<std::string> labels = {"a", "a'", "b", "gamma"};
    for (std::size_t k = 0; k <= n; ++k) labels.push_back("c" + std::to_string(k));
    for (std::size_t k = 0; k <= n; ++k) labels.push_back("c" + std::to_string(k) + "'");
    return labels;
}

IntMatrix pi1_relation_matrix(std::size_t n, const PrimeScheme& scheme,
                              const Pi1Options& options) {
    if (scheme.n != n) throw InvalidParams("scheme size does not match N");
    Multiplicities mults = multiplicities(scheme);
    const std::size_t gens = 4 + 2 * (n + 1);
    const std::size_t ia = 0, iap = 1, ib = 2, igamma = 3;
    auto ic = [](std::size_t k) { return 4 + k; };
    auto icp = [n](std::size_t k) { return 4 + (n + 1) + k; };

    std::vector<std::vector<Int>> rows;
    auto add_row = [&]() -> std::vector<Int>& {
        rows.emplace_back(gens, Int(0));
        return rows.back();
    };

    // Order of the loop around the contracted 17-chain, and its powers
    // forced by the central sphere of the chain and the two extra sections
    // meeting the chain at positions 5/13 and 2/16.
    for (long order : {18, 9, 8, 14}) add_row()[ib] = order;

    // Genus-10 surface relation: its boundary loop to the 18th power is a
    // product of commutators.
    add_row()[igamma] = 18;

    // Meridian of the isotropy torus through a contracted double point is
    // the square of the loop around that point.
    {
        auto& r = add_row();
        r[ic(0)] = 1;
        r[ia] = -2;
    }
    {
        auto& r = add_row();
        r[icp(0)] = 1;
        r[iap] = -2;
    }

    // Pushing the torus off itself: it crosses the contracted sphere once
    // and each T_k in k points.
    {
        auto& r = add_row();
        r[ia] = 1;
        for (std::size_t k = 1; k <= n; ++k) r[ic(k)] = Int(k);
    }
    {
        auto& r = add_row();
        r[iap] = 1;
        for (std::size_t k = 1; k <= n; ++k) r[icp(k)] = Int(k);
    }

    if (options.with_multiplicity_relations) {
        for (std::size_t k = 0; k <= n; ++k) add_row()[ic(k)] = mults.t[k];
        for (std::size_t k = 0; k <= n; ++k) add_row()[icp(k)] = mults.t_prime[k];
        add_row()[igamma] = mults.a;
    }

    IntMatrix m(rows.size(), gens);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < gens; ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace orbtop
