#pragma once

#include <string>

#include "orbtop/rational.hpp"

namespace orbtop {

/// Closed rational interval [lo, hi] certified to contain a real value.
struct RatInterval {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool intersects(const RatInterval& other) const {
        return lo <= other.hi && other.lo <= hi;
    }
};

/// Quadratic surd  base + coeff * sqrt(radicand)  with rational components.
/// Comparisons against rationals are decided exactly by sign analysis and
/// squaring; no floating point is involved. When the radicand is a perfect
/// square the value collapses to a rational at construction.
class Surd {
public:
    Surd() : base_(0), coeff_(0), radicand_(0) {}
    explicit Surd(const Rat& value) : base_(value), coeff_(0), radicand_(0) {}
    Surd(Rat base, Rat coeff, Rat radicand);

    static Surd sqrt_of(const Rat& radicand) { return Surd(Rat(0), Rat(1), radicand); }

    const Rat& base() const { return base_; }
    const Rat& coeff() const { return coeff_; }
    const Rat& radicand() const { return radicand_; }

    bool is_rational() const { return coeff_ == 0; }
    /// Valid only when is_rational().
    const Rat& rational_value() const { return base_; }

    /// Sign of (this - x): -1, 0, +1.
    int compare(const Rat& x) const;

    bool operator<(const Rat& x) const { return compare(x) < 0; }
    bool operator<=(const Rat& x) const { return compare(x) <= 0; }
    bool operator>(const Rat& x) const { return compare(x) > 0; }
    bool operator>=(const Rat& x) const { return compare(x) >= 0; }
    bool operator==(const Rat& x) const { return compare(x) == 0; }

    Surd operator+(const Rat& x) const { return Surd(base_ + x, coeff_, radicand_); }
    Surd operator-(const Rat& x) const { return Surd(base_ - x, coeff_, radicand_); }
    Surd operator*(const Rat& x) const { return Surd(base_ * x, coeff_ * x, radicand_); }

    /// Exact floor / ceiling (terminates: either the value is rational or
    /// irrational, and the enclosure is refined until the integer is pinned).
    Int floor() const;
    Int ceil() const;

    /// Certified enclosure of width <= `width`.
    RatInterval enclose(const Rat& width) const;

    std::string to_string() const;

private:
    Rat base_, coeff_, radicand_;
};

/// Certified enclosure of sqrt(x), x >= 0, of width <= `width`.
RatInterval sqrt_enclosure(const Rat& x, const Rat& width);

/// Certified enclosures of cosh(x) and sinh(x) at rational x via partial sums
/// of the defining series with an explicit geometric tail bound.
RatInterval cosh_enclosure(const Rat& x, const Rat& width);
RatInterval sinh_enclosure(const Rat& x, const Rat& width);

}  // namespace orbtop
