#include "orbtop/obstruction.hpp"

#include <algorithm>

#include "orbtop/errors.hpp"
#include "orbtop/number_theory.hpp"

namespace orbtop {

Rat CurveRecord::chi() const {
    Rat value = Rat(2 * genus - 2);
    for (const Int& d : point_orders) {
        if (d < 2) throw InvalidParams("singular point order must be >= 2");
        value += Rat(1) - make_rat(1, d);
    }
    return value;
}

void BasisCandidate::validate() const {
    if (positive.self_intersection <= 0)
        throw InvalidParams("first curve must have positive square");
    if (negative2.self_intersection >= 0 || negative3.self_intersection >= 0)
        throw InvalidParams("second and third curves must have negative square");
    for (const CurveRecord* c : {&positive, &negative2, &negative3}) {
        if (c->genus < 1) throw InvalidParams("basis curves must have genus >= 1");
        if (c->good() && !is_integer(c->self_intersection))
            throw InvalidParams("good curve with non-integral self-intersection");
    }
}

Rat orbifold_euler_complement(const std::vector<Int>& genus,
                              const std::vector<Int>& point_orders) {
    if (genus.size() != 3) throw InvalidParams("expected three genus values");
    Rat value(5);
    for (const Int& g : genus) value -= Rat(2 - 2 * g);
    for (const Int& d : point_orders) {
        if (d < 2) throw InvalidParams("residual point order must be >= 2");
        value -= Rat(1) - make_rat(1, d);
    }
    return value;
}

Int compute_T0(const std::vector<std::vector<Int>>& genus_triples) {
    if (genus_triples.size() != 3) throw InvalidParams("expected three genus triples");
    Int total = 0;
    for (const auto& triple : genus_triples) {
        if (triple.size() != 3) throw InvalidParams("each triple needs three genus values");
        total += 2 * (2 * triple[0] + 2 * triple[1] + 2 * triple[2] - 1);
    }
    return total;
}

CanonicalCoeffs canonical_coeffs(const BasisCandidate& basis) {
    basis.validate();
    Rat m1 = basis.positive.self_intersection;
    Rat m2 = -basis.negative2.self_intersection;
    Rat m3 = -basis.negative3.self_intersection;
    Rat chi1 = basis.positive.chi();
    if (m1 >= chi1)
        throw EffectivityViolation("m1 = " + rat_str(m1) + " >= chi1 = " + rat_str(chi1) +
                                   "; the canonical class would be anti-effective");
    return {(chi1 - m1) / m1, -(basis.negative2.chi() + m2) / m2,
            -(basis.negative3.chi() + m3) / m3};
}

Rat k_squared(const BasisCandidate& basis) {
    basis.validate();
    Rat m1 = basis.positive.self_intersection;
    Rat m2 = -basis.negative2.self_intersection;
    Rat m3 = -basis.negative3.self_intersection;
    Rat c1 = basis.positive.chi() - m1;
    Rat c2 = basis.negative2.chi() + m2;
    Rat c3 = basis.negative3.chi() + m3;
    return c1 * c1 / m1 - c2 * c2 / m2 - c3 * c3 / m3;
}

namespace {

// max over integer m in [1, hi] of (18 + m)^2 / m; the function is convex,
// so the maximum sits at an endpoint.
Rat max_cusp_term(const Int& hi) {
    if (hi < 1) throw InvalidParams("empty range for m3");
    auto f = [](const Int& m) { return make_rat((18 + m) * (18 + m), m); };
    return std::max(f(1), f(hi));
}

void push_audit(std::vector<AuditEntry>& audit, std::string key, std::string formula,
                std::string value, std::string provenance) {
    audit.push_back({std::move(key), std::move(formula), std::move(value),
                     std::move(provenance)});
}

}  // namespace

ConstantsLedger constants_pipeline(const ConstantsPipelineInput& input) {
    if (input.n_of_1 <= 0 || input.t0 <= 0 || input.g_a < 1)
        throw InvalidParams("pipeline inputs must be positive");
    if (input.eps <= 0) throw InvalidParams("eps must be positive");

    ConstantsLedger ledger;
    auto& audit = ledger.audit;
    ledger.eps = input.eps;
    ledger.N1 = input.n1;
    ledger.N_of_1 = input.n_of_1;
    ledger.T0 = input.t0;
    push_audit(audit, "T0", "sum over three spanning triples of 2(2g1+2g2+2g3-1)",
               int_str(ledger.T0), "input");
    push_audit(audit, "N(1)", "largest prime in the disjoint index sets at N1 = 1",
               int_str(ledger.N_of_1), "input");

    ledger.N0 = 4 * ledger.T0 + 1;
    push_audit(audit, "N0", "4*T0 + 1", int_str(ledger.N0), "forced");

    const Int& n1v = ledger.N_of_1;
    ledger.T1 = Rat((2 * n1v - 1) * (2 * n1v - 1));
    push_audit(audit, "T1", "(2*N(1) - 1)^2", rat_str(ledger.T1), "forced");
    ledger.T2 = Rat(4 * n1v - 4);
    push_audit(audit, "T2", "4*N(1) - 4", rat_str(ledger.T2), "forced");
    ledger.T3 = Rat(12) + ledger.T2;
    push_audit(audit, "T3", "12 + T2", rat_str(ledger.T3), "forced");
    ledger.T4 = 4 * ledger.T3 - 14;
    push_audit(audit, "T4", "4*T3 - 14", rat_str(ledger.T4), "forced");

    if (!is_integer(ledger.T4)) throw InvariantViolation("T4 must be integral");
    const Int t4 = rat_num(ledger.T4);

    ledger.T5 = input.t5.value_or(Rat(20 + t4));
    push_audit(audit, "T5", "bound on the positive square of a genus <= 10 curve: 20 + T4",
               rat_str(ledger.T5), input.t5 ? "input" : "default");
    ledger.T6 = ledger.T1 + Rat(2 + t4) + max_cusp_term(20 + t4);
    push_audit(audit, "T6", "T1 + (2 + T4) + max_{1 <= m3 <= 20 + T4} (18+m3)^2/m3",
               rat_str(ledger.T6), "default");

    const Int g = input.g_a;
    Rat first = ledger.T1 + make_rat((4 * g - 2 + t4) * (4 * g - 2 + t4), 2 * g + t4) -
                make_rat((38 + t4) * (38 + t4), 20 + t4);
    Rat second = Rat((2 * g - 1) * (2 * g - 1));
    ledger.T7_squared = std::max({first, second, Rat(289)});
    ledger.T7 = Surd::sqrt_of(ledger.T7_squared);
    push_audit(audit, "T7^2",
               "max(T1 + (4g_a-2+T4)^2/(2g_a+T4) - (38+T4)^2/(20+T4), (2g_a-1)^2, 17^2)",
               rat_str(ledger.T7_squared), "forced");

    Rat scale = Rat(48) / (input.eps * input.eps);
    ledger.T8 = Surd(-scale, scale, ledger.T7_squared);  // 48 (T7 - 1) / eps^2
    push_audit(audit, "T8", "48*(T7 - 1)/eps^2", ledger.T8.to_string(), "forced");

    // Threshold past which a basis whose positive curve has low genus
    // contradicts the lower bound on K^2.
    Rat need = ledger.T5 + ledger.T2;
    Int n0 = 1;
    while (Rat(8 * n0 * n0) <= need) ++n0;
    ledger.n0 = n0;
    push_audit(audit, "n0", "least n with 8 n^2 > T5 + T2", int_str(ledger.n0), "forced");

    ledger.R = Int(4) * 5 * 7 * 11 * 13 * 17;
    push_audit(audit, "R", "4*5*7*11*13*17", int_str(ledger.R), "forced");

    ledger.N_leq = input.n_leq;
    push_audit(audit, "N_leq", "no closed form; supplied by the caller",
               int_str(ledger.N_leq), input.n_leq == 0 ? "default" : "input");
    ledger.N_gt = ledger.T8.ceil() + 1;
    push_audit(audit, "N_gt", "ceil(T8) + 1", int_str(ledger.N_gt), "forced");
    ledger.N_final = std::max(ledger.N_leq, ledger.N_gt);
    push_audit(audit, "N", "max(N_leq, N_gt)", int_str(ledger.N_final), "forced");
    return ledger;
}

std::vector<Int> s_a_sequence(const Int& start, std::size_t count) {
    if (count == 0) throw InvalidParams("need at least one prime");
    std::vector<Int> primes;
    primes.push_back(next_prime(start));
    while (primes.size() < count) {
        const Int& n = primes.back();
        Int six = 6 * n * n;
        Int root = isqrt(six);
        if (root * root != six) root += 1;  // exact ceiling of sqrt(6) n
        Int bound = std::max(Int(2 * n * n), root);
        primes.push_back(next_prime(bound + 1));
    }
    return primes;
}

DiophantineTriple diophantine_family(const Int& q, const Int& d, const Int& lam, const Int& mu,
                                     const Int& s) {
    if (q < 1) throw InvalidParams("q must be positive");
    if (s == 0 || (2 * q) % s != 0)
        throw InvalidParams("s = " + int_str(s) + " does not divide 2q = " + int_str(2 * q));
    if (gcd_int(lam, mu) != 1)
        throw InvalidParams("gcd(lam, mu) = " + int_str(gcd_int(lam, mu)) + " != 1");
    Int twoq_s = (2 * q) / s;
    DiophantineTriple t{d * (twoq_s * lam * lam - s * mu * mu), d * lam * mu,
                        d * (twoq_s * lam * lam + s * mu * mu)};
    if (t.x * t.x + 8 * q * t.y * t.y != t.z * t.z)
        throw InvariantViolation("family triple fails its defining equation");
    return t;
}

namespace {

std::vector<Int> positive_divisors(const Int& n) {
    std::vector<Int> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        std::vector<Int> next;
        Int power = 1;
        for (unsigned i = 0; i <= e; ++i) {
            for (const Int& d : divs) next.push_back(d * power);
            power *= p;
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

std::set<DiophantineTriple> diophantine_solutions_brute(const Int& q, const Int& ymax,
                                                        const Int& xmax_for_y0) {
    if (q < 1 || ymax < 0) throw InvalidParams("invalid brute-force range");
    std::set<DiophantineTriple> out;
    for (Int x = 0; x <= xmax_for_y0; ++x) out.insert({x, 0, x});
    for (Int y = 1; y <= ymax; ++y) {
        Int k = 8 * q * y * y;
        // (z - x)(z + x) = k with both factors of equal parity.
        for (const Int& e : positive_divisors(k)) {
            Int f = k / e;
            if (e > f) break;
            if (mod_pos(e, 2) != mod_pos(f, 2)) continue;
            out.insert({(f - e) / 2, y, (e + f) / 2});
        }
    }
    return out;
}

std::set<DiophantineTriple> diophantine_family_set(const Int& q, const Int& ymax,
                                                   const Int& xmax_for_y0) {
    if (q < 1 || ymax < 0) throw InvalidParams("invalid family range");
    std::set<DiophantineTriple> out;
    std::vector<Int> s_values = positive_divisors(2 * q);
    // y = 0: mu = 0 with lam = 1 gives x = z = d * 2q/s, every multiple of 1.
    for (Int x = 0; x <= xmax_for_y0; ++x) out.insert({x, 0, x});
    for (Int y = 1; y <= ymax; ++y) {
        for (const Int& d : positive_divisors(y)) {
            Int rest = y / d;
            for (const Int& lam : positive_divisors(rest)) {
                Int mu = rest / lam;
                if (gcd_int(lam, mu) != 1) continue;
                for (const Int& s : s_values) {
                    DiophantineTriple t = diophantine_family(q, d, lam, mu, s);
                    if (t.x < 0) t.x = -t.x;
                    if (t.y != y) throw InvariantViolation("family y mismatch");
                    out.insert(t);
                }
            }
        }
    }
    return out;
}

std::set<Rat> admissible_quotients(const Int& n, const Int& n_prime, const Int& r) {
    if (!is_prime(n) || !is_prime(n_prime)) throw InvalidParams("n and n' must be prime");
    std::vector<Int> divs = positive_divisors(4 * r);
    std::vector<Int> n_pows{1, n, n * n};
    std::vector<Int> np_pows{1, n_prime, n_prime * n_prime};
    std::set<Rat> out;
    for (const Int& di : divs)
        for (const Int& dj : divs)
            for (const Int& np : n_pows)
                for (const Int& npp : np_pows) out.insert(make_rat(di * np, dj * npp));
    return out;
}

M1Interval m1_interval(const Int& n, const Rat& t6) {
    if (t6 < 0) throw InvalidParams("T6 must be nonnegative");
    Rat two_n2 = Rat(2 * n * n);
    M1Interval window;
    window.hi = two_n2;
    window.lo = Surd(two_n2 + t6 / 2, Rat(-1), two_n2 * t6 + t6 * t6 / 4);
    window.relaxed_lo = Surd(two_n2, Rat(-1), 2 * t6 * Rat(n * n));
    return window;
}

EliminationVerdict eliminate_k2_nonpositive(const Int& n, const Int& n_prime,
                                            const ConstantsLedger& ledger) {
    if (ledger.T4 < 0 || !is_integer(ledger.T4))
        throw IncompleteLedger("ledger is missing a valid T4");
    Int t4 = rat_num(ledger.T4);
    EliminationVerdict verdict;
    verdict.threshold = Rat(2 + t4) + max_cusp_term(20 + t4);
    Int least = std::min(n, n_prime);
    verdict.k2_lower_bound = Rat(least * least) - verdict.threshold;
    verdict.eliminated = verdict.k2_lower_bound > 0;
    return verdict;
}

PackingBound packing_count_bound(const Rat& t7, const Rat& eps) {
    if (t7 <= 1) throw InvalidParams("T7 must exceed 1");
    if (eps <= 0) throw InvalidParams("eps must be positive");
    PackingBound out;
    out.paper_estimate = 48 * (t7 - 1) / (eps * eps);
    Rat numerator = 6 * (t7 - 1);
    Rat width(1, 1024);
    while (true) {
        RatInterval c = cosh_enclosure(eps / 2, width);
        // 2 sinh^2(eps/4) = cosh(eps/2) - 1; both endpoints stay positive
        // once the width is below cosh(eps/2) - 1 itself.
        Rat den_lo = c.lo - 1, den_hi = c.hi - 1;
        if (den_lo > 0) {
            Int lo_ceil = ceil_rat(numerator / den_hi);
            Int hi_ceil = ceil_rat(numerator / den_lo);
            if (lo_ceil == hi_ceil) {
                out.bound = lo_ceil;
                return out;
            }
        }
        width /= 1024;
    }
}

CapIdentityCheck hyperbolic_cap_identity(const Rat& r, const Rat& width) {
    if (r < 0) throw InvalidParams("cap radius must be nonnegative");
    CapIdentityCheck check;
    RatInterval c = cosh_enclosure(r, width);
    check.lhs = {c.lo - 1, c.hi - 1};
    Rat w = width / 8;
    while (true) {
        RatInterval s = sinh_enclosure(r / 2, w);
        Rat lo = s.lo < 0 ? Rat(0) : s.lo;
        check.rhs = {2 * lo * lo, 2 * s.hi * s.hi};
        if (check.rhs.width() <= width) break;
        w /= 16;
    }
    check.consistent = check.lhs.intersects(check.rhs);
    return check;
}

}  // namespace orbtop
