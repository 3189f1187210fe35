#pragma once

#include <cstddef>
#include <vector>

#include "orbtop/int_matrix.hpp"
#include "orbtop/rational.hpp"

namespace orbtop {

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    bool operator==(const Signature&) const = default;
};

/// Symmetric bilinear form with exact rational Gram matrix.
class SymmetricForm {
public:
    SymmetricForm() : dim_(0) {}
    explicit SymmetricForm(std::size_t dim) : dim_(dim), gram_(dim * dim, Rat(0)) {}
    /// Row-major entries; throws unless the matrix is symmetric.
    SymmetricForm(std::size_t dim, std::vector<Rat> gram);

    static SymmetricForm diagonal(const RatVec& d);
    static SymmetricForm from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t dim() const { return dim_; }
    Rat& at(std::size_t i, std::size_t j) { return gram_[i * dim_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return gram_[i * dim_ + j]; }

    /// Pairing <u, v> = u^T G v of coordinate vectors.
    Rat pairing(const RatVec& u, const RatVec& v) const;

    /// Exact inertia counts by congruence diagonalization.
    Signature signature() const;

    bool is_negative_definite() const;

    /// Congruent form U^T G U for an integer change of basis.
    SymmetricForm conjugated(const IntMatrix& u) const;

    bool operator==(const SymmetricForm&) const = default;

private:
    std::size_t dim_;
    std::vector<Rat> gram_;
};

}  // namespace orbtop
