#include <doctest.h>

#include "orbtop/seifert.hpp"
#include "test_util.hpp"

using namespace orbtop;

namespace {

IsotropySurface surface(std::string label, long genus, long m, long b, RatVec cls) {
    IsotropySurface s;
    s.label = std::move(label);
    s.genus = genus;
    s.multiplicity = m;
    s.b = b;
    s.local_invariant = inverse_mod(Int(b), Int(m));
    s.homology_class = std::move(cls);
    return s;
}

// Model with an identity-pairing integral basis of the given dimension.
OrbifoldModel euclidean_model(std::size_t b2) {
    OrbifoldModel m;
    for (std::size_t i = 0; i < b2; ++i) m.basis.push_back({"e" + std::to_string(i + 1), true});
    m.intersection = SymmetricForm::diagonal(RatVec(b2, Rat(1)));
    m.b1_zero = true;
    m.w2_zero = true;
    return m;
}

}  // namespace

TEST_CASE("point multiplicity") {
    OrbifoldModel m = euclidean_model(2);
    m.surfaces.push_back(surface("S", 1, 15, 1, {Rat(1), Rat(0)}));
    m.points.push_back({"q", LocalAction{18, 1, 17}, {}});
    m.points.push_back({"p", LocalAction{2, 1, 1}, {"S"}});
    m.points.push_back({"r", LocalAction{2, 1, 1}, {}});
    m.validate();
    CHECK(point_multiplicity(m, "q") == 18);
    CHECK(point_multiplicity(m, "p") == 30);
    CHECK(point_multiplicity(m, "r") == 2);

    SUBCASE("incompatible incident multiplicities") {
        m.surfaces.push_back(surface("S2", 1, 10, 1, {Rat(0), Rat(1)}));
        m.points[1].incident_surfaces.push_back("S2");
        CHECK_THROWS_AS(point_multiplicity(m, "p"), IncompatibleMultiplicities);
    }
}

TEST_CASE("bundle invariants ell and mu") {
    OrbifoldModel m = euclidean_model(2);
    m.surfaces.push_back(surface("S", 1, 15, 1, {Rat(1), Rat(0)}));
    m.points.push_back({"p", LocalAction{2, 1, 1}, {"S"}});
    m.points.push_back({"q", LocalAction{18, 1, 17}, {}});
    SeifertBundle bundle{m, {Rat(0), Rat(0)}};
    CHECK(bundle.mu() == 15);
    CHECK(bundle.ell() == lcm_int(lcm_int(Int(30), Int(18)), Int(15)));
}

TEST_CASE("chern class") {
    SUBCASE("no isotropy surfaces: the background class") {
        OrbifoldModel m = euclidean_model(2);
        SeifertBundle bundle{m, {Rat(1), Rat(0)}};
        CHECK(chern_class(bundle) == RatVec{Rat(1), Rat(0)});
    }
    SUBCASE("one surface of multiplicity 3 with b = 2 on class 3 e1") {
        OrbifoldModel m = euclidean_model(1);
        m.surfaces.push_back(surface("S", 1, 3, 2, {Rat(3)}));
        SeifertBundle bundle{m, {Rat(0)}};
        CHECK(chern_class(bundle) == RatVec{Rat(2)});
    }
}

TEST_CASE("h1 vanishing report") {
    SUBCASE("clean model passes with unit witnesses") {
        OrbifoldModel m = euclidean_model(3);
        m.surfaces.push_back(surface("S", 2, 3, 1, {Rat(1), Rat(0), Rat(0)}));
        SeifertBundle bundle{m, RatVec(3, Rat(0))};
        H1Report report = h1_vanishing_report(bundle);
        CHECK(report.b1_zero);
        CHECK(report.surjective);
        CHECK(report.primitive);
        CHECK(report.primitivity_gcd == 1);
        CHECK(report.all());
    }
    SUBCASE("prime powers are decided by the rank mod p") {
        // Surjectivity onto Z_4 holds iff the pairings hit a unit mod 2.
        OrbifoldModel m = euclidean_model(1);
        m.surfaces.push_back(surface("S", 1, 4, 1, {Rat(1)}));
        CHECK(h1_vanishing_report(SeifertBundle{m, {Rat(0)}}).surjective);
        OrbifoldModel bad = euclidean_model(1);
        bad.surfaces.push_back(surface("S", 1, 4, 1, {Rat(2)}));
        H1Report report = h1_vanishing_report(SeifertBundle{bad, {Rat(0)}});
        CHECK_FALSE(report.surjective);
        REQUIRE(report.failing_prime.has_value());
        CHECK(*report.failing_prime == 2);
    }
    SUBCASE("even pairings against a multiplicity-2 surface break surjectivity") {
        OrbifoldModel m = euclidean_model(1);
        m.surfaces.push_back(surface("S", 1, 2, 1, {Rat(2)}));
        SeifertBundle bundle{m, {Rat(0)}};
        H1Report report = h1_vanishing_report(bundle);
        CHECK_FALSE(report.surjective);
        REQUIRE(report.failing_prime.has_value());
        CHECK(*report.failing_prime == 2);
    }
    SUBCASE("rescaled chern class with coordinate pairings (2,4,6) is imprimitive") {
        OrbifoldModel m = euclidean_model(3);
        m.surfaces.push_back(surface("S", 1, 3, 1, {Rat(2), Rat(4), Rat(6)}));
        SeifertBundle bundle{m, RatVec(3, Rat(0))};
        H1Report report = h1_vanishing_report(bundle);
        CHECK(report.surjective);  // (2,4,6) mod 3 = (2,1,0) hits a unit
        CHECK_FALSE(report.primitive);
        CHECK(report.primitivity_gcd == 2);
        CHECK_FALSE(report.all());
    }
    SUBCASE("declared integral vectors must pair integrally") {
        OrbifoldModel m;
        m.basis = {{"e1", true}};
        m.intersection = SymmetricForm::diagonal({Rat(1, 2)});
        m.b1_zero = true;
        m.w2_zero = true;
        m.surfaces.push_back(surface("S", 1, 3, 1, {Rat(1)}));
        SeifertBundle bundle{m, {Rat(0)}};
        CHECK_THROWS_AS(h1_vanishing_report(bundle), BasisNotIntegral);
    }
    SUBCASE("b1 flag is propagated, not computed") {
        OrbifoldModel m = euclidean_model(1);
        m.b1_zero = false;
        SeifertBundle bundle{m, {Rat(0)}};
        CHECK_FALSE(h1_vanishing_report(bundle).b1_zero);
    }
}

TEST_CASE("h2 of the total space") {
    SUBCASE("b2 = 3 with one surface of genus 2 and multiplicity 3") {
        OrbifoldModel m = euclidean_model(3);
        m.surfaces.push_back(surface("S", 2, 3, 1, {Rat(1), Rat(0), Rat(0)}));
        SeifertBundle bundle{m, RatVec(3, Rat(0))};
        CHECK(h2_total_space(bundle) == FiniteAbelianGroup(2, {{Int(3), 1, 4}}));
    }
    SUBCASE("b2 = 1 with no surfaces and a primitive background: trivial group") {
        OrbifoldModel m = euclidean_model(1);
        SeifertBundle bundle{m, {Rat(1)}};
        CHECK(h2_total_space(bundle).is_trivial());
    }
    SUBCASE("rank is always b2 - 1") {
        OrbifoldModel m = euclidean_model(4);
        m.surfaces.push_back(surface("S", 3, 5, 1, {Rat(1), Rat(0), Rat(0), Rat(0)}));
        SeifertBundle bundle{m, RatVec(4, Rat(0))};
        CHECK(h2_total_space(bundle).free_rank() == 3);
    }
    SUBCASE("an imprimitive bare circle bundle fails the conditions") {
        OrbifoldModel m = euclidean_model(1);
        SeifertBundle bundle{m, {Rat(2)}};
        CHECK_FALSE(h1_vanishing_report(bundle).primitive);
        CHECK_THROWS_AS(h2_total_space(bundle), H1NotZero);
    }
    SUBCASE("throws when a condition fails") {
        OrbifoldModel m = euclidean_model(1);
        m.b1_zero = false;
        SeifertBundle bundle{m, {Rat(0)}};
        CHECK_THROWS_AS(h2_total_space(bundle), H1NotZero);
    }
}

TEST_CASE("spin check") {
    SUBCASE("odd multiplicities and w2 = 0") {
        OrbifoldModel m = euclidean_model(1);
        m.surfaces.push_back(surface("S", 1, 3, 1, {Rat(1)}));
        CHECK(spin_check(SeifertBundle{m, {Rat(0)}}));
    }
    SUBCASE("an even multiplicity on an odd class breaks spin") {
        OrbifoldModel m = euclidean_model(1);
        m.surfaces.push_back(surface("S", 1, 2, 1, {Rat(1)}));
        CHECK_FALSE(spin_check(SeifertBundle{m, {Rat(0)}}));
    }
    SUBCASE("no surfaces, flat base") {
        OrbifoldModel m = euclidean_model(2);
        CHECK(spin_check(SeifertBundle{m, RatVec(2, Rat(0))}));
    }
    SUBCASE("even canonical class works as w2 data") {
        OrbifoldModel m = euclidean_model(1);
        m.w2_zero = false;
        m.canonical_class = RatVec{Rat(2)};
        CHECK(spin_check(SeifertBundle{m, {Rat(0)}}));
        m.canonical_class = RatVec{Rat(1)};
        CHECK_FALSE(spin_check(SeifertBundle{m, {Rat(0)}}));
    }
    SUBCASE("missing w2 data") {
        OrbifoldModel m = euclidean_model(1);
        m.w2_zero = false;
        CHECK_THROWS_AS(spin_check(SeifertBundle{m, {Rat(0)}}), MissingW2Data);
    }
}

TEST_CASE("smale-barden labels") {
    SUBCASE("Z gives S^2 x S^3") {
        SmaleBardenLabel label = smale_barden_label(FiniteAbelianGroup::free(1), true);
        CHECK(label.rank == 1);
        CHECK(label.invariant_factors.empty());
        CHECK(label.barden == 0);
        CHECK(label.name() == "S^2 x S^3");
    }
    SUBCASE("Z_3 + Z_3 gives M_3") {
        SmaleBardenLabel label =
            smale_barden_label(FiniteAbelianGroup(0, {{Int(3), 1, 2}}), true);
        CHECK(label.rank == 0);
        CHECK(label.invariant_factors == std::vector<Int>{Int(3)});
        CHECK(label.name() == "M_{0;3;0}");
    }
    SUBCASE("trivial group gives S^5") {
        CHECK(smale_barden_label(FiniteAbelianGroup::trivial(), true).name() == "S^5");
    }
    SUBCASE("unpairable torsion is rejected") {
        CHECK_THROWS_AS(smale_barden_label(FiniteAbelianGroup(0, {{Int(3), 1, 3}}), true),
                        NotRealizable);
    }
    SUBCASE("labels are total on spin Seifert homology") {
        // Z_{m}^{2g} always pairs.
        OrbifoldModel m = euclidean_model(3);
        m.surfaces.push_back(surface("S", 2, 15, 1, {Rat(1), Rat(0), Rat(0)}));
        SeifertBundle bundle{m, RatVec(3, Rat(0))};
        SmaleBardenLabel label = smale_barden_label(h2_total_space(bundle), true);
        CHECK(label.rank == 2);
        CHECK(label.invariant_factors == std::vector<Int>{Int(15), Int(15)});
    }
}

TEST_CASE("abelianized orbifold fundamental group") {
    CHECK(abelianized_orbifold_pi1(IntMatrix(0, 1)) == FiniteAbelianGroup::free(1));
    CHECK(abelianized_orbifold_pi1(IntMatrix::from_rows({{7}})) ==
          FiniteAbelianGroup(0, {{Int(7), 1, 1}}));
}

TEST_CASE("model validation rejects non-coprime intersecting surfaces") {
    OrbifoldModel m = euclidean_model(1);
    m.surfaces.push_back(surface("S1", 1, 6, 1, {Rat(1)}));
    m.surfaces.push_back(surface("S2", 1, 10, 1, {Rat(1)}));
    CHECK_THROWS_AS(m.validate(), InvariantViolation);
    // Orthogonal classes with the same multiplicities are fine.
    OrbifoldModel ok = euclidean_model(2);
    ok.surfaces.push_back(surface("S1", 1, 6, 1, {Rat(1), Rat(0)}));
    ok.surfaces.push_back(surface("S2", 1, 10, 1, {Rat(0), Rat(1)}));
    ok.validate();
}

TEST_CASE("rescaling b by a unit keeps the model valid and rescales chern") {
    OrbifoldModel m = euclidean_model(1);
    m.surfaces.push_back(surface("S", 1, 7, 2, {Rat(7)}));
    m.validate();
    SeifertBundle bundle{m, {Rat(0)}};
    CHECK(chern_class(bundle) == RatVec{Rat(2)});
    // b -> 3b mod 7 = 6, j -> j * inverse(3) keeps j b = 1 (mod m).
    OrbifoldModel m2 = m;
    m2.surfaces[0].b = 6;
    m2.surfaces[0].local_invariant = inverse_mod(Int(6), Int(7));
    m2.validate();
    CHECK(chern_class(SeifertBundle{m2, {Rat(0)}}) == RatVec{Rat(6)});
}
