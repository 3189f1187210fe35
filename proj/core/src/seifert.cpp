#include "orbtop/seifert.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbtop/number_theory.hpp"

namespace orbtop {

const IsotropySurface& OrbifoldModel::surface(const std::string& label) const {
    for (const auto& s : surfaces)
        if (s.label == label) return s;
    throw InvalidParams("unknown surface '" + label + "'");
}

const SingularPoint& OrbifoldModel::point(const std::string& label) const {
    for (const auto& p : points)
        if (p.label == label) return p;
    throw InvalidParams("unknown point '" + label + "'");
}

void OrbifoldModel::validate() const {
    if (intersection.dim() != basis.size())
        throw InvariantViolation("intersection form dimension differs from basis size");
    std::set<std::string> labels;
    for (const auto& v : basis)
        if (!labels.insert(v.label).second)
            throw InvariantViolation("duplicate basis label '" + v.label + "'");

    std::set<std::string> surface_labels;
    for (const auto& s : surfaces) {
        if (!surface_labels.insert(s.label).second)
            throw InvariantViolation("duplicate surface label '" + s.label + "'");
        if (s.genus < 0) throw InvariantViolation("surface " + s.label + " has negative genus");
        if (s.multiplicity < 2)
            throw InvariantViolation("surface " + s.label + " has multiplicity < 2");
        if (gcd_int(s.local_invariant, s.multiplicity) != 1)
            throw InvariantViolation("surface " + s.label +
                                     ": local invariant not coprime to multiplicity");
        if (s.b <= 0 || s.b >= s.multiplicity ||
            mod_pos(s.local_invariant * s.b, s.multiplicity) != 1)
            throw InvariantViolation("surface " + s.label + ": j * b != 1 mod m");
        if (s.homology_class.size() != b2())
            throw InvariantViolation("surface " + s.label + ": class has wrong dimension");
    }

    // Surfaces with a common multiplicity factor cannot intersect.
    for (std::size_t i = 0; i < surfaces.size(); ++i)
        for (std::size_t j = i + 1; j < surfaces.size(); ++j) {
            if (gcd_int(surfaces[i].multiplicity, surfaces[j].multiplicity) == 1) continue;
            if (pair(surfaces[i].homology_class, surfaces[j].homology_class) != 0)
                throw InvariantViolation(
                    "surfaces " + surfaces[i].label + " and " + surfaces[j].label +
                    " intersect but their multiplicities are not coprime");
        }

    for (const auto& p : points) {
        if (p.incident_surfaces.size() > 2)
            throw InvariantViolation("point " + p.label + " lies on more than two surfaces");
        if (reduce_action(p.action).d <= 1)
            throw InvariantViolation("point " + p.label + " is not singular (d = 1)");
        std::set<std::string> seen;
        for (const auto& label : p.incident_surfaces) {
            surface(label);  // existence
            if (!seen.insert(label).second)
                throw InvariantViolation("point " + p.label + " lists surface '" + label +
                                         "' twice");
        }
    }
    if (canonical_class && canonical_class->size() != b2())
        throw InvariantViolation("canonical class has wrong dimension");
}

Int point_multiplicity(const OrbifoldModel& model, const std::string& point_label) {
    const SingularPoint& p = model.point(point_label);
    Int m = reduce_action(p.action).d;
    for (std::size_t i = 0; i < p.incident_surfaces.size(); ++i)
        for (std::size_t j = i + 1; j < p.incident_surfaces.size(); ++j) {
            const Int& a = model.surface(p.incident_surfaces[i]).multiplicity;
            const Int& b = model.surface(p.incident_surfaces[j]).multiplicity;
            if (gcd_int(a, b) != 1)
                throw IncompatibleMultiplicities(
                    "point " + point_label +
                    ": incident surface multiplicities are not coprime");
        }
    for (const auto& label : p.incident_surfaces) m *= model.surface(label).multiplicity;
    return m;
}

Int SeifertBundle::mu() const {
    Int m = 1;
    for (const auto& s : base.surfaces) m = lcm_int(m, s.multiplicity);
    return m;
}

Int SeifertBundle::ell() const {
    Int l = mu();
    for (const auto& p : base.points) l = lcm_int(l, point_multiplicity(base, p.label));
    return l;
}

RatVec chern_class(const SeifertBundle& bundle) {
    if (bundle.background_class.size() != bundle.base.b2())
        throw InvalidParams("background class has wrong dimension");
    RatVec c = bundle.background_class;
    for (const auto& s : bundle.base.surfaces) {
        Rat w = make_rat(s.b, s.multiplicity);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += w * s.homology_class[k];
    }
    return c;
}

namespace {

// Integral basis vectors declared by the model, as coordinate vectors.
std::vector<RatVec> integral_generators(const OrbifoldModel& model) {
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < model.basis.size(); ++i) {
        if (!model.basis[i].integral) continue;
        RatVec e(model.b2(), Rat(0));
        e[i] = 1;
        gens.push_back(e);
    }
    return gens;
}

Int integral_pairing(const OrbifoldModel& model, const RatVec& a, const RatVec& b) {
    Rat value = model.pair(a, b);
    if (!is_integer(value))
        throw BasisNotIntegral("pairing " + rat_str(value) +
                               " of declared integral classes is not an integer");
    return rat_num(value);
}

// Restriction map to the surfaces whose multiplicity the given prime
// divides, evaluated on the integral generators: one column per surface.
IntMatrix restriction_matrix(const OrbifoldModel& model, const std::vector<RatVec>& gens,
                             const std::vector<const IsotropySurface*>& cols) {
    IntMatrix m(gens.size(), cols.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.at(i, j) = integral_pairing(model, gens[i], cols[j]->homology_class);
    return m;
}

// Surjectivity of Z^gens -> (+) Z_{p^e} given by an integer matrix: rank of
// the matrix mod p must equal the number of targets. Exact Gaussian
// elimination over the prime field.
bool full_rank_mod_p(const IntMatrix& m, const Int& p) {
    std::size_t rows = m.rows(), cols = m.cols();
    if (cols > rows) return false;
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod_pos(m.at(i, j), p);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) return false;
        std::swap(a[r], a[pivot]);
        Int inv = inverse_mod(a[r][c], p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Int f = mod_pos(a[i][c] * inv, p);
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = mod_pos(a[i][j] - f * a[r][j], p);
        }
        ++r;
    }
    return true;
}

// Smith-form route to the same surjectivity question: the map
// Z^gens -> (+)_i Z_{m_i} is onto iff [ P | diag(m_i) ] has trivial cokernel.
bool surjective_by_smith(const OrbifoldModel& model, const std::vector<RatVec>& gens) {
    const auto& surfaces = model.surfaces;
    if (surfaces.empty()) return true;
    IntMatrix stacked(surfaces.size(), gens.size() + surfaces.size());
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
        for (std::size_t g = 0; g < gens.size(); ++g)
            stacked.at(i, g) = integral_pairing(model, gens[g], surfaces[i].homology_class);
        stacked.at(i, gens.size() + i) = surfaces[i].multiplicity;
    }
    IntMatrix d = smith_normal_form(stacked).d;
    for (std::size_t t = 0; t < surfaces.size(); ++t)
        if (abs_int(d.at(t, t)) != 1) return false;
    return true;
}

}  // namespace

H1Report h1_vanishing_report(const SeifertBundle& bundle) {
    const OrbifoldModel& model = bundle.base;
    model.validate();
    H1Report report;
    report.b1_zero = model.b1_zero;
    report.primitivity_gcd = 0;

    std::vector<RatVec> gens = integral_generators(model);

    // Condition 2, prime by prime: for p dividing some multiplicities, the
    // pairing matrix against the surfaces with p | m_i must hit a unit in
    // every direction, i.e. have full rank mod p.
    std::set<Int> primes;
    for (const auto& s : model.surfaces)
        for (const auto& [p, e] : factorize(s.multiplicity)) primes.insert(p);
    report.surjective = true;
    for (const Int& p : primes) {
        std::vector<const IsotropySurface*> cols;
        for (const auto& s : model.surfaces)
            if (s.multiplicity % p == 0) cols.push_back(&s);
        if (!full_rank_mod_p(restriction_matrix(model, gens, cols), p)) {
            report.surjective = false;
            report.failing_prime = p;
            report.notes.push_back("restriction not surjective mod " + int_str(p));
            break;
        }
    }
    if (surjective_by_smith(model, gens) != report.surjective)
        throw InvariantViolation("prime-by-prime and Smith-form surjectivity checks disagree");

    // Condition 3: primitivity of mu * c1 away from the singular points,
    // decided by the gcd of its pairings with the declared integral classes.
    // Divisibility of the class forces divisibility of every pairing, so
    // gcd 1 certifies primitivity.
    Int mu = bundle.mu();
    RatVec x = bundle.background_class;
    for (Rat& coord : x) coord *= Rat(mu);
    for (const auto& s : model.surfaces) {
        Rat w = make_rat(s.b * mu, s.multiplicity);
        if (!is_integer(w))
            throw InvariantViolation("mu-rescaled coefficient of " + s.label +
                                     " is not an integer");
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += w * s.homology_class[k];
    }
    Int g = 0;
    for (const auto& gen : gens) g = gcd_int(g, integral_pairing(model, gen, x));
    report.primitivity_gcd = g;
    report.primitive = (g == 1);
    if (!report.primitive)
        report.notes.push_back("pairing gcd " + int_str(g) + " (primitive needs gcd 1)");
    return report;
}

FiniteAbelianGroup h2_total_space(const SeifertBundle& bundle) {
    H1Report report = h1_vanishing_report(bundle);
    if (!report.all())
        throw H1NotZero("H_1 of the total space does not vanish; H_2 formula unavailable");
    if (bundle.base.b2() == 0) throw InvalidParams("model must have b2 >= 1");
    std::vector<TorsionComponent> torsion;
    for (const auto& s : bundle.base.surfaces) {
        if (s.genus == 0) continue;
        if (!s.genus.fits_uint_p()) throw InvalidParams("surface genus too large");
        unsigned copies = 2 * static_cast<unsigned>(s.genus.get_ui());
        for (const auto& [p, e] : factorize(s.multiplicity))
            torsion.push_back({p, e, copies});
    }
    return FiniteAbelianGroup(bundle.base.b2() - 1, std::move(torsion));
}

bool spin_check(const SeifertBundle& bundle) {
    const OrbifoldModel& model = bundle.base;
    bool base_even;
    if (model.canonical_class) {
        base_even = true;
        for (const Rat& c : *model.canonical_class) {
            if (!is_integer(c))
                throw MissingW2Data("canonical class has non-integral coordinates");
            if (mod_pos(rat_num(c), 2) != 0) base_even = false;
        }
    } else if (model.w2_zero) {
        base_even = true;
    } else {
        throw MissingW2Data("no w2 data: set the w2_zero flag or provide a canonical class");
    }
    if (!base_even) return false;

    // sum (m_i - 1) [D_i] mod 2: only surfaces of even multiplicity count.
    RatVec odd_sum(model.b2(), Rat(0));
    for (const auto& s : model.surfaces) {
        if (mod_pos(s.multiplicity, 2) == 1) continue;
        for (std::size_t k = 0; k < odd_sum.size(); ++k) odd_sum[k] += s.homology_class[k];
    }
    for (const Rat& c : odd_sum) {
        if (!is_integer(c)) return false;
        if (mod_pos(rat_num(c), 2) != 0) return false;
    }
    return true;
}

std::string SmaleBardenLabel::name() const {
    if (rank == 0 && invariant_factors.empty()) return "S^5";
    if (rank == 1 && invariant_factors.empty()) return "S^2 x S^3";
    std::string s = "M_{0;";
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += ",";
        s += int_str(invariant_factors[i]);
    }
    s += ";" + std::to_string(rank) + "}";
    return s;
}

SmaleBardenLabel smale_barden_label(const FiniteAbelianGroup& h2, bool spin) {
    if (!spin)
        throw NotRealizable(
            "labeling a non-spin manifold needs the w2 map on torsion, which the homology "
            "group alone does not determine");
    // Spin torsion splits as pairs Z_k + Z_k, so every prime-power
    // multiplicity must be even; the label keeps one factor of each pair.
    std::vector<TorsionComponent> half;
    for (const auto& c : h2.torsion()) {
        if (c.multiplicity % 2 != 0)
            throw NotRealizable("torsion " + h2.to_string() +
                                " does not pair into Z_k + Z_k summands");
        half.push_back({c.prime, c.exponent, c.multiplicity / 2});
    }
    SmaleBardenLabel label;
    label.rank = h2.free_rank();
    label.invariant_factors = FiniteAbelianGroup(0, half).invariant_factors();
    label.barden = 0;
    return label;
}

FiniteAbelianGroup abelianized_orbifold_pi1(const IntMatrix& relation_matrix) {
    return cokernel(relation_matrix);
}

}  // namespace orbtop
