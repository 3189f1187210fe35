#include <doctest.h>

#include "orbtop/number_theory.hpp"
#include "orbtop/obstruction.hpp"
#include "test_util.hpp"

using namespace orbtop;
using orbtop_test::Rng;

TEST_CASE("orbifold euler characteristic of the complement") {
    CHECK(orbifold_euler_complement({1, 1, 1}, {}) == 5);
    CHECK(orbifold_euler_complement({2, 1, 10}, {2, 2}) == 24);
    SUBCASE("each residual point decreases the value by 1 - 1/d") {
        Rng rng(99);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Int> genus = {orbtop_test::rand_in(rng, 1, 20),
                                      orbtop_test::rand_in(rng, 1, 20),
                                      orbtop_test::rand_in(rng, 1, 20)};
            std::vector<Int> pts;
            Rat prev = orbifold_euler_complement(genus, pts);
            for (int k = 0; k < 5; ++k) {
                Int d = orbtop_test::rand_in(rng, 2, 9);
                pts.push_back(d);
                Rat next = orbifold_euler_complement(genus, pts);
                CHECK(prev - next == Rat(1) - make_rat(1, d));
                prev = next;
            }
        }
    }
    SUBCASE("maximal number of order-2 points before the value goes negative") {
        // With all d = 2 each point costs 1/2, so the count is bounded by
        // 2 (2g1 + 2g2 + 2g3 - 1).
        std::vector<Int> genus = {2, 3, 4};
        long bound = 2 * (2 * 2 + 2 * 3 + 2 * 4 - 1);
        std::vector<Int> pts(bound, Int(2));
        CHECK(orbifold_euler_complement(genus, pts) >= 0);
        pts.push_back(2);
        CHECK(orbifold_euler_complement(genus, pts) < 0);
    }
}

TEST_CASE("singular point bound from three spanning triples") {
    CHECK(compute_T0({{2, 5, 10}, {17, 26, 10}, {37, 50, 10}}) == 662);
    CHECK(compute_T0({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 30);
    SUBCASE("monotone in every genus entry") {
        std::vector<std::vector<Int>> base = {{2, 5, 10}, {17, 26, 10}, {37, 50, 10}};
        Int reference = compute_T0(base);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                auto bumped = base;
                bumped[i][j] += 1;
                CHECK(compute_T0(bumped) > reference);
            }
    }
}

TEST_CASE("canonical class coefficients") {
    BasisCandidate basis;
    basis.positive = {2, Rat(1), {}};
    basis.negative2 = {2, Rat(-1), {}};
    basis.negative3 = {10, Rat(-1), {}};
    CanonicalCoeffs k = canonical_coeffs(basis);
    CHECK(k.a1 == 1);
    CHECK(k.a2 == -3);
    CHECK(k.a3 == -19);

    SUBCASE("boundary m1 = chi1 is an effectivity violation") {
        BasisCandidate bad = basis;
        bad.positive = {2, Rat(2), {}};  // chi1 = 2 = m1
        CHECK_THROWS_AS(canonical_coeffs(bad), EffectivityViolation);
    }
    SUBCASE("k squared and its symmetry in the negative curves") {
        Rat k2 = k_squared(basis);
        CHECK(k2 == Rat(1) - Rat(9) - Rat(361));
        BasisCandidate swapped = basis;
        std::swap(swapped.negative2, swapped.negative3);
        CHECK(k_squared(swapped) == k2);
    }
    SUBCASE("chi of a curve through singular points") {
        CurveRecord c{1, Rat(4), {2, 3}};
        CHECK(c.chi() == Rat(0) + (Rat(1) - Rat(1, 2)) + (Rat(1) - Rat(1, 3)));
        CHECK_FALSE(c.good());
    }
}

TEST_CASE("constants pipeline") {
    ConstantsPipelineInput input;
    input.n_of_1 = 10;
    input.t0 = 662;
    input.eps = Rat(1);
    input.g_a = 2;
    ConstantsLedger ledger = constants_pipeline(input);
    CHECK(ledger.T1 == 361);
    CHECK(ledger.T2 == 36);
    CHECK(ledger.T3 == 48);
    CHECK(ledger.T4 == 178);
    CHECK(ledger.N0 == 4 * 662 + 1);
    CHECK(ledger.R == 340340);
    CHECK(ledger.T5 == 198);
    // T6 = T1 + (2 + T4) + max((18+1)^2/1, (18+198)^2/198) = 361 + 180 + 361
    CHECK(ledger.T6 == 902);
    CHECK(ledger.N_gt == ledger.T8.ceil() + 1);
    CHECK(ledger.N_final == std::max(ledger.N_leq, ledger.N_gt));
    // n0: least n with 8 n^2 > T5 + T2 = 234
    CHECK(ledger.n0 == 6);
    CHECK_FALSE(ledger.audit.empty());

    SUBCASE("monotonicity in N(1)") {
        ConstantsPipelineInput bigger = input;
        bigger.n_of_1 = 11;
        ConstantsLedger l2 = constants_pipeline(bigger);
        CHECK(l2.T1 >= ledger.T1);
        CHECK(l2.T2 >= ledger.T2);
        CHECK(l2.T3 >= ledger.T3);
        CHECK(l2.T4 >= ledger.T4);
    }
    SUBCASE("decreasing eps never decreases T8") {
        ConstantsPipelineInput smaller = input;
        smaller.eps = Rat(1, 10);
        ConstantsLedger l2 = constants_pipeline(smaller);
        CHECK(l2.T8.ceil() >= ledger.T8.ceil());
    }
    SUBCASE("T7 through its square") {
        // T7^2 = max(361 + 184^2/182 - 216^2/198, 9, 289)
        Rat first = Rat(361) + make_rat(184 * 184, 182) - make_rat(216 * 216, 198);
        CHECK(ledger.T7_squared == std::max(first, Rat(289)));
        CHECK(ledger.T7 >= Rat(17));
        // T8 = 48 (T7 - 1) at eps = 1
        Rat t7_hi = ledger.T7.enclose(Rat(1, 1000000)).hi;
        Rat t8_hi = ledger.T8.enclose(Rat(1, 1000)).hi;
        CHECK(t8_hi <= 48 * (t7_hi - 1) + Rat(1, 100));
    }
}

TEST_CASE("prime sequences with quadratic growth") {
    std::vector<Int> s = s_a_sequence(11, 2);
    CHECK(s == std::vector<Int>{Int(11), Int(251)});
    CHECK(s_a_sequence(11, 1) == std::vector<Int>{Int(11)});
    SUBCASE("growth property") {
        std::vector<Int> longer = s_a_sequence(5, 4);
        for (std::size_t i = 0; i + 1 < longer.size(); ++i) {
            CHECK(longer[i + 1] > 2 * longer[i] * longer[i]);
            CHECK(is_prime(longer[i + 1]));
            // also exceeds sqrt(6) n_i: (n_{i+1})^2 > 6 n_i^2
            CHECK(longer[i + 1] * longer[i + 1] > 6 * longer[i] * longer[i]);
        }
    }
}

TEST_CASE("diophantine family") {
    CHECK(diophantine_family(1, 1, 1, 1, 1) == DiophantineTriple{1, 1, 3});
    CHECK(diophantine_family(2, 1, 1, 0, 1) == DiophantineTriple{4, 0, 4});
    CHECK_THROWS_AS(diophantine_family(3, 1, 1, 1, 4), InvalidParams);   // 4 does not divide 6
    CHECK_THROWS_AS(diophantine_family(3, 1, 2, 2, 1), InvalidParams);   // gcd(2, 2) = 2
    CHECK_THROWS_AS(diophantine_family(3, 1, 1, 1, 0), InvalidParams);   // s = 0

    SUBCASE("defining equation holds on random admissible draws") {
        Rng rng(13579);
        int done = 0;
        while (done < 10000) {
            Int q = orbtop_test::rand_in(rng, 1, 30);
            Int d = orbtop_test::rand_in(rng, -20, 20);
            Int lam = orbtop_test::rand_in(rng, -20, 20);
            Int mu = orbtop_test::rand_in(rng, -20, 20);
            if (gcd_int(lam, mu) != 1) continue;
            std::vector<Int> divisors;
            for (Int s = 1; s <= 2 * q; ++s)
                if ((2 * q) % s == 0) divisors.push_back(s);
            Int s = divisors[orbtop_test::rand_in(rng, 0, long(divisors.size()) - 1)];
            DiophantineTriple t = diophantine_family(q, d, lam, mu, s);
            CHECK(t.x * t.x + 8 * q * t.y * t.y == t.z * t.z);
            ++done;
        }
    }
    SUBCASE("family reaches every brute-force solution for small q") {
        for (long q = 1; q <= 3; ++q) {
            auto brute = diophantine_solutions_brute(q, 12, 30);
            auto family = diophantine_family_set(q, 12, 30);
            for (const auto& t : brute) CHECK(family.count(t) == 1);
            for (const auto& t : family)
                CHECK(t.x * t.x + 8 * q * t.y * t.y == t.z * t.z);
        }
    }
}

TEST_CASE("admissible quotients") {
    SUBCASE("divisor count of 4R") {
        Int r = Int(4) * 5 * 7 * 11 * 13 * 17;
        // 4R = 2^4 * 5 * 7 * 11 * 13 * 17 has (4+1) * 2^5 = 160 divisors.
        Int count = 1;
        for (const auto& [p, e] : factorize(4 * r)) count *= e + 1;
        CHECK(count == 160);
        std::set<Rat> q = admissible_quotients(5, 7, r);
        CHECK_FALSE(q.empty());
        CHECK(q.count(Rat(1)) == 1);
    }
    SUBCASE("closed under inversion with the primes swapped") {
        Int r = 12;
        std::set<Rat> q = admissible_quotients(5, 7, r);
        std::set<Rat> swapped = admissible_quotients(7, 5, r);
        for (const Rat& value : q) CHECK(swapped.count(1 / value) == 1);
    }
    CHECK_THROWS_AS(admissible_quotients(6, 7, 12), InvalidParams);
}

TEST_CASE("m1 window") {
    SUBCASE("2n^2 - 1 lies in the relaxed window") {
        for (long n = 1; n <= 10; ++n)
            for (long t6 = 2; t6 <= 12; t6 += 5) {
                M1Interval w = m1_interval(n, Rat(t6));
                CHECK(w.contains_relaxed(Rat(2 * n * n - 1)));
                CHECK(w.contains_relaxed(Rat(2 * n * n)));
                CHECK_FALSE(w.contains_relaxed(Rat(2 * n * n + 1)));
            }
    }
    SUBCASE("T6 = 0 degenerates to the single point 2n^2") {
        M1Interval w = m1_interval(3, Rat(0));
        CHECK(w.lo.is_rational());
        CHECK(w.lo.rational_value() == 18);
        CHECK(w.hi == 18);
        CHECK(w.relaxed_lo.is_rational());
        CHECK(w.relaxed_lo.rational_value() == 18);
    }
    SUBCASE("tight window sits inside the relaxed one") {
        M1Interval w = m1_interval(4, Rat(7));
        Rat probe = Rat(2 * 16) - Rat(1, 2);
        CHECK(w.contains(probe) == (w.lo <= probe));
        // lo >= relaxed_lo as reals: compare through a common enclosure.
        CHECK(w.lo.enclose(Rat(1, 1000)).lo >= w.relaxed_lo.enclose(Rat(1, 1000)).lo - Rat(1, 100));
    }
    SUBCASE("quotient separation: only n^2/n'^2 survives near the window ratio") {
        // With n' much larger than n, every admissible quotient other than
        // n^2/n'^2 misses the eps-window around n^2/n'^2.
        Int r = 6;
        Int n = 7;  // n^2 must also clear max(d)/(1 - eps), and no divisor
                    // of 4R may fall in ((1-eps) n, (1+eps) n)
        Rat eps(1, 10);
        std::vector<Int> divisors;
        for (Int d = 1; d <= 4 * r; ++d)
            if ((4 * r) % d == 0) divisors.push_back(d);
        Int max_d = divisors.back();
        // n' > (1 + eps) max_d n^2
        Int n_prime = next_prime(Int(2) * max_d * n * n);
        Rat center = make_rat(n * n, n_prime * n_prime);
        std::set<Rat> quotients = admissible_quotients(n, n_prime, r);
        CHECK(quotients.count(center) == 1);
        for (const Rat& value : quotients) {
            if (value == center) continue;
            bool inside = value > (1 - eps) * center && value < (1 + eps) * center;
            CHECK_FALSE(inside);
        }
    }
}

TEST_CASE("elimination of nonpositive k squared") {
    ConstantsPipelineInput input;
    input.n_of_1 = 10;
    input.t0 = 662;
    input.eps = Rat(1);
    input.g_a = 2;
    ConstantsLedger ledger = constants_pipeline(input);

    EliminationVerdict verdict = eliminate_k2_nonpositive(29, 31, ledger);
    // threshold = (2 + T4) + max((19)^2, (216)^2/198) = 180 + 361 = 541
    CHECK(verdict.threshold == 541);
    CHECK(verdict.eliminated);
    CHECK(verdict.k2_lower_bound == Rat(29 * 29 - 541));

    CHECK_FALSE(eliminate_k2_nonpositive(23, 29, ledger).eliminated);
    // with the forced value m1 = n^2 the positive term is exactly n^2
    for (long n : {3, 7, 20})
        CHECK(make_rat(Int(2 * n * n - n * n) * (2 * n * n - n * n), Int(n * n)) == n * n);
    SUBCASE("verdict is stable under increasing n") {
        bool seen_positive = false;
        for (long n = 2; n <= 60; ++n) {
            bool now = eliminate_k2_nonpositive(n, n, ledger).eliminated;
            if (seen_positive) CHECK(now);
            seen_positive = seen_positive || now;
        }
        CHECK(seen_positive);
    }
}

TEST_CASE("ball packing bound in the hyperbolic cap") {
    PackingBound bound = packing_count_bound(Rat(2), Rat(1));
    CHECK(bound.paper_estimate == 48);
    // 6 / (cosh(1/2) - 1) = 47.01...
    CHECK(bound.bound == 48);

    SUBCASE("small-eps agreement with the quadratic estimate within 1%") {
        for (long denom : {100, 1000}) {
            PackingBound b = packing_count_bound(Rat(2), Rat(1, denom));
            Rat ratio = Rat(b.bound) / b.paper_estimate;
            CHECK(ratio > Rat(99, 100));
            CHECK(ratio < Rat(101, 100));
        }
    }
}

TEST_CASE("hyperbolic cap identity cosh R - 1 = 2 sinh^2(R/2)") {
    Rat width(1, pow_int(10, 12));
    for (const Rat& r : {Rat(1), Rat(3, 2), Rat(7, 3)}) {
        CapIdentityCheck check = hyperbolic_cap_identity(r, width);
        CHECK(check.consistent);
        CHECK(check.lhs.width() <= width);
        CHECK(check.rhs.width() <= width);
        CHECK(check.lhs.intersects(check.rhs));
    }
}

TEST_CASE("basis candidates validate the signature") {
    BasisCandidate bad;
    bad.positive = {2, Rat(-1), {}};
    bad.negative2 = {2, Rat(-1), {}};
    bad.negative3 = {10, Rat(-1), {}};
    CHECK_THROWS_AS(bad.validate(), InvalidParams);
}
