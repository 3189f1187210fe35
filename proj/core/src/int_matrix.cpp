#include "orbtop/int_matrix.hpp"

#include <algorithm>

namespace orbtop {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw InvalidParams("ragged matrix initializer");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw InvalidParams("matrix product dimension mismatch");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw InvalidParams("determinant of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination; all divisions below are exact.
    IntMatrix w = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && w.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            w.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

namespace {

// Locates the entry of minimal nonzero absolute value in the trailing
// submatrix starting at (t, t). Returns false when that block is zero.
bool find_min_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& e = d.at(i, j);
            if (e == 0) continue;
            Int a = abs_int(e);
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    SmithDecomposition s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;

    std::size_t steps = std::min(d.rows(), d.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_min_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        while (true) {
            // Reduce column t, then row t, against the pivot. After reduction
            // a smaller remainder may appear; move it to the pivot and retry.
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                find_min_pivot(d, t, pi, pj);
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // Pivot must divide every entry of the trailing block, or the
            // divisibility chain d_1 | d_2 | ... fails later.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < d.cols() && divides_all; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return s;
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix d = smith_normal_form(m).d;
    std::size_t r = 0;
    for (std::size_t t = 0; t < std::min(d.rows(), d.cols()); ++t)
        if (d.at(t, t) != 0) ++r;
    return r;
}

}  // namespace orbtop
