#include "orbtop/surd.hpp"

namespace orbtop {

Surd::Surd(Rat base, Rat coeff, Rat radicand)
    : base_(std::move(base)), coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw InvalidParams("negative radicand");
    if (radicand_ == 0) coeff_ = 0;
    if (coeff_ == 0) {
        radicand_ = 0;
        return;
    }
    if (is_perfect_square(rat_num(radicand_)) && is_perfect_square(rat_den(radicand_))) {
        Rat root = make_rat(isqrt(rat_num(radicand_)), isqrt(rat_den(radicand_)));
        base_ += coeff_ * root;
        coeff_ = 0;
        radicand_ = 0;
    }
}

int Surd::compare(const Rat& x) const {
    // Decide sign of  coeff * sqrt(radicand) - (x - base).
    Rat t = x - base_;
    if (coeff_ == 0) return t == 0 ? 0 : (t < 0 ? 1 : -1);
    const int cs = coeff_ < 0 ? -1 : 1;  // sign of the irrational part (radicand > 0)
    const int ts = t == 0 ? 0 : (t < 0 ? -1 : 1);
    if (cs > 0 && ts <= 0) return 1;
    if (cs < 0 && ts >= 0) return -1;
    // Both sides share a strict sign; compare squares.
    Rat lhs = coeff_ * coeff_ * radicand_;
    Rat rhs = t * t;
    if (lhs == rhs) return 0;  // unreachable for non-square radicand, kept for safety
    bool lhs_bigger = lhs > rhs;
    return (cs > 0) == lhs_bigger ? 1 : -1;
}

RatInterval Surd::enclose(const Rat& width) const {
    if (coeff_ == 0) return {base_, base_};
    Rat w = width / (coeff_ < 0 ? Rat(-coeff_) : coeff_);
    RatInterval root = sqrt_enclosure(radicand_, w);
    if (coeff_ > 0) return {base_ + coeff_ * root.lo, base_ + coeff_ * root.hi};
    return {base_ + coeff_ * root.hi, base_ + coeff_ * root.lo};
}

Int Surd::floor() const {
    if (coeff_ == 0) return floor_rat(base_);
    Rat width(1, 4);
    while (true) {
        RatInterval box = enclose(width);
        Int lo = floor_rat(box.lo);
        Int hi = floor_rat(box.hi);
        if (lo == hi) return lo;
        // The value is irrational here (a non-square radicand survived
        // construction), so the enclosure eventually separates from integers.
        width /= 16;
    }
}

Int Surd::ceil() const {
    if (coeff_ == 0) return ceil_rat(base_);
    return floor() + 1;  // irrational value: ceil = floor + 1
}

std::string Surd::to_string() const {
    if (coeff_ == 0) return rat_str(base_);
    std::string s = rat_str(base_);
    s += coeff_ < 0 ? " - " : " + ";
    Rat c = coeff_ < 0 ? Rat(-coeff_) : coeff_;
    if (c != 1) s += rat_str(c) + "*";
    return s + "sqrt(" + rat_str(radicand_) + ")";
}

RatInterval sqrt_enclosure(const Rat& x, const Rat& width) {
    if (x < 0) throw InvalidParams("sqrt of a negative rational");
    if (width <= 0) throw InvalidParams("enclosure width must be positive");
    if (x == 0) return {Rat(0), Rat(0)};
    // sqrt(p/q) = isqrt(p * q * scale^2) / (q * scale), sharpened by scale.
    const Int p = rat_num(x), q = rat_den(x);
    Int scale = 1;
    while (true) {
        Int root = isqrt(p * q * scale * scale);
        Rat lo = make_rat(root, q * scale);
        Rat hi = make_rat(root + 1, q * scale);
        if (hi - lo <= width) return {lo, hi};
        scale *= 16;
    }
}

namespace {

// Partial sums of sum x^(2k+off) / (2k+off)! with a geometric tail bound.
// off = 0 gives cosh, off = 1 gives sinh. Converges for every rational x;
// terms decay once (2k)^2 > x^2.
RatInterval even_odd_series(const Rat& x, unsigned offset, const Rat& width) {
    const Rat x2 = x * x;
    Rat term = offset == 0 ? Rat(1) : x;  // k = 0 term
    Rat sum = term;
    unsigned long k = offset;             // degree of the current term
    while (true) {
        // next term: multiply by x^2 / ((k+1)(k+2))
        term = term * x2 / Rat(Int(k + 1) * Int(k + 2));
        k += 2;
        sum += term;
        // Tail after the current term is bounded by a geometric series with
        // ratio r = x^2 / ((k+1)(k+2)) once r < 1.
        Rat r = x2 / Rat(Int(k + 1) * Int(k + 2));
        if (r < 1) {
            Rat tail = term * r / (1 - r);
            if (tail < 0) tail = -tail;
            if (tail <= width / 2) {
                if (x >= 0 || offset == 0) return {sum, sum + tail};
                return {sum - tail, sum};  // sinh of negative x: remaining terms negative
            }
        }
    }
}

}  // namespace

RatInterval cosh_enclosure(const Rat& x, const Rat& width) {
    return even_odd_series(x < 0 ? Rat(-x) : x, 0, width);
}

RatInterval sinh_enclosure(const Rat& x, const Rat& width) {
    return even_odd_series(x, 1, width);
}

}  // namespace orbtop
