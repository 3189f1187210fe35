#pragma once

#include <cstddef>
#include <vector>

#include "orbtop/rational.hpp"

namespace orbtop {

/// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    /// Exact determinant (fraction-free Bareiss elimination); square only.
    Int det() const;

    bool is_identity() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row a += c * row b
    void add_row(std::size_t a, std::size_t b, const Int& c);
    /// col a += c * col b
    void add_col(std::size_t a, std::size_t b, const Int& c);
    void negate_row(std::size_t a);
    void negate_col(std::size_t a);

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

struct SmithDecomposition {
    IntMatrix d;  ///< diagonal, nonnegative, d_i | d_{i+1}
    IntMatrix u;  ///< unimodular, rows() x rows()
    IntMatrix v;  ///< unimodular, cols() x cols()
};

/// Smith normal form: U * M * V = D with U, V unimodular and D diagonal with
/// each diagonal entry dividing the next. Pivots are chosen with minimal
/// absolute value to limit entry growth.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Rank of the matrix (= number of nonzero diagonal entries of its SNF).
std::size_t rank(const IntMatrix& m);

}  // namespace orbtop
