#pragma once

#include <random>

#include "orbtop/int_matrix.hpp"
#include "orbtop/rational.hpp"

namespace orbtop_test {

using Rng = std::mt19937_64;

inline long rand_in(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline orbtop::IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    orbtop::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rand_in(rng, -bound, bound);
    return m;
}

// Product of random elementary matrices: unimodular by construction.
inline orbtop::IntMatrix random_unimodular(Rng& rng, std::size_t n, int ops = 12) {
    orbtop::IntMatrix u = orbtop::IntMatrix::identity(n);
    for (int k = 0; k < ops; ++k) {
        std::size_t i = rand_in(rng, 0, long(n) - 1);
        std::size_t j = rand_in(rng, 0, long(n) - 1);
        if (i == j) continue;
        u.add_row(i, j, orbtop::Int(rand_in(rng, -3, 3)));
    }
    return u;
}

}  // namespace orbtop_test
