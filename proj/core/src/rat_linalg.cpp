#include "orbtop/rat_linalg.hpp"

#include "orbtop/errors.hpp"

namespace orbtop {

RatVec solve_linear_system(RatMatrix a, RatVec b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw InvalidParams("right-hand side dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw InvalidParams("linear system must be square");

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) throw SingularSystem("singular linear system");
        std::swap(a[k], a[pivot]);
        std::swap(b[k], b[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    RatVec x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = b[k] / a[k][k];
    return x;
}

}  // namespace orbtop
