#include <doctest.h>

#include <functional>

#include "orbtop/int_matrix.hpp"
#include "test_util.hpp"

using namespace orbtop;
using orbtop_test::Rng;

namespace {

// Independent validity oracle for a Smith decomposition.
void check_smith(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(abs_int(s.u.det()) == 1);
    CHECK(abs_int(s.v.det()) == 1);
    std::size_t k = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    for (std::size_t t = 0; t < k; ++t) CHECK(s.d.at(t, t) >= 0);
    for (std::size_t t = 0; t + 1 < k; ++t) {
        if (s.d.at(t + 1, t + 1) == 0) continue;
        REQUIRE(s.d.at(t, t) != 0);
        CHECK(s.d.at(t + 1, t + 1) % s.d.at(t, t) == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    SUBCASE("1x1 zero matrix") {
        IntMatrix m(1, 1);
        SmithDecomposition s = smith_normal_form(m);
        CHECK(s.d.at(0, 0) == 0);
        CHECK(s.u.is_identity());
        CHECK(s.v.is_identity());
    }
    SUBCASE("diag(2,3) -> diag(1,6)") {
        IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
        SmithDecomposition s = smith_normal_form(m);
        CHECK(s.d.at(0, 0) == 1);
        CHECK(s.d.at(1, 1) == 6);
        check_smith(m);
    }
    SUBCASE("rank-1 matrix -> diag(2,0)") {
        IntMatrix m = IntMatrix::from_rows({{2, 4}, {4, 8}});
        SmithDecomposition s = smith_normal_form(m);
        CHECK(s.d.at(0, 0) == 2);
        CHECK(s.d.at(1, 1) == 0);
        check_smith(m);
    }
}

TEST_CASE("smith normal form round-trip on random matrices") {
    Rng rng(20240811);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t rows = orbtop_test::rand_in(rng, 1, 6);
        std::size_t cols = orbtop_test::rand_in(rng, 1, 6);
        check_smith(orbtop_test::random_matrix(rng, rows, cols, 20));
    }
}

TEST_CASE("smith normal form of empty and degenerate shapes") {
    check_smith(IntMatrix(0, 3));
    check_smith(IntMatrix(3, 0));
    check_smith(IntMatrix(0, 0));
    check_smith(IntMatrix(2, 5));
}

TEST_CASE("determinant by Bareiss matches cofactor expectations") {
    CHECK(IntMatrix::from_rows({{2, 0}, {0, 3}}).det() == 6);
    CHECK(IntMatrix::from_rows({{0, 1}, {1, 0}}).det() == -1);
    CHECK(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).det() == 0);
    CHECK(IntMatrix::identity(4).det() == 1);
}

TEST_CASE("rank") {
    CHECK(rank(IntMatrix::from_rows({{2, 4}, {4, 8}})) == 1);
    CHECK(rank(IntMatrix::identity(3)) == 3);
    CHECK(rank(IntMatrix(2, 2)) == 0);
}

namespace {

// gcd of all k x k minors; zero when every minor vanishes.
Int minor_gcd(const IntMatrix& m, std::size_t k) {
    Int g = 0;
    // enumerate all row and column index subsets of size k
    std::vector<std::size_t> ridx(k), cidx(k);
    std::function<void(std::size_t, std::size_t)> pick_cols = [&](std::size_t start,
                                                                  std::size_t depth) {
        if (depth == k) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(ridx[i], cidx[j]);
            g = gcd_int(g, sub.det());
            return;
        }
        for (std::size_t c = start; c < m.cols(); ++c) {
            cidx[depth] = c;
            pick_cols(c + 1, depth + 1);
        }
    };
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start,
                                                                  std::size_t depth) {
        if (depth == k) {
            pick_cols(0, 0);
            return;
        }
        for (std::size_t r = start; r < m.rows(); ++r) {
            ridx[depth] = r;
            pick_rows(r + 1, depth + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

}  // namespace

TEST_CASE("smith diagonal matches the determinantal divisors") {
    // d_1 * ... * d_k equals the gcd of all k x k minors, an independent
    // characterization of the Smith form.
    Rng rng(8080);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = orbtop_test::rand_in(rng, 1, 4);
        std::size_t cols = orbtop_test::rand_in(rng, 1, 4);
        IntMatrix m = orbtop_test::random_matrix(rng, rows, cols, 9);
        IntMatrix d = smith_normal_form(m).d;
        Int product = 1;
        for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
            product *= d.at(k - 1, k - 1);
            CHECK(product == minor_gcd(m, k));
            if (product == 0) break;
        }
    }
}
