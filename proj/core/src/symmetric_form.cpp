#include "orbtop/symmetric_form.hpp"

namespace orbtop {

SymmetricForm::SymmetricForm(std::size_t dim, std::vector<Rat> gram)
    : dim_(dim), gram_(std::move(gram)) {
    if (gram_.size() != dim_ * dim_) throw InvalidParams("gram matrix size mismatch");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (at(i, j) != at(j, i)) throw InvalidParams("gram matrix is not symmetric");
}

SymmetricForm SymmetricForm::diagonal(const RatVec& d) {
    SymmetricForm f(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) f.at(i, i) = d[i];
    return f;
}

SymmetricForm SymmetricForm::from_rows(const std::vector<std::vector<long>>& rows) {
    SymmetricForm f(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw InvalidParams("ragged gram initializer");
        for (std::size_t j = 0; j < rows.size(); ++j) f.at(i, j) = Rat(rows[i][j]);
    }
    for (std::size_t i = 0; i < f.dim(); ++i)
        for (std::size_t j = i + 1; j < f.dim(); ++j)
            if (f.at(i, j) != f.at(j, i)) throw InvalidParams("gram matrix is not symmetric");
    return f;
}

Rat SymmetricForm::pairing(const RatVec& u, const RatVec& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw InvalidParams("pairing vector dimension mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            acc += u[i] * at(i, j) * v[j];
        }
    }
    return acc;
}

Signature SymmetricForm::signature() const {
    // Symmetric Gaussian reduction over Q. A zero diagonal with a nonzero
    // off-diagonal entry is repaired by adding the partner row/column, which
    // is a congruence and keeps the form symmetric.
    std::vector<Rat> g = gram_;
    auto e = [&](std::size_t i, std::size_t j) -> Rat& { return g[i * dim_ + j]; };
    Signature sig;
    for (std::size_t k = 0; k < dim_; ++k) {
        if (e(k, k) == 0) {
            std::size_t partner = dim_;
            for (std::size_t j = k + 1; j < dim_; ++j)
                if (e(k, j) != 0) {
                    partner = j;
                    break;
                }
            if (partner == dim_) {
                ++sig.zero;
                continue;
            }
            if (e(partner, partner) != 0) {
                for (std::size_t j = 0; j < dim_; ++j) std::swap(e(k, j), e(partner, j));
                for (std::size_t i = 0; i < dim_; ++i) std::swap(e(i, k), e(i, partner));
            } else {
                for (std::size_t j = 0; j < dim_; ++j) e(k, j) += e(partner, j);
                for (std::size_t i = 0; i < dim_; ++i) e(i, k) += e(i, partner);
            }
        }
        const Rat pivot = e(k, k);
        if (pivot > 0)
            ++sig.positive;
        else
            ++sig.negative;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i == k || e(i, k) == 0) continue;
            Rat f = e(i, k) / pivot;
            for (std::size_t j = 0; j < dim_; ++j) e(i, j) -= f * e(k, j);
            for (std::size_t j = 0; j < dim_; ++j) e(j, i) -= f * e(j, k);
        }
    }
    return sig;
}

bool SymmetricForm::is_negative_definite() const {
    Signature s = signature();
    return s.negative == dim_;
}

SymmetricForm SymmetricForm::conjugated(const IntMatrix& u) const {
    if (u.rows() != dim_) throw InvalidParams("basis change dimension mismatch");
    SymmetricForm out(u.cols());
    for (std::size_t a = 0; a < u.cols(); ++a)
        for (std::size_t b = 0; b < u.cols(); ++b) {
            Rat acc(0);
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j)
                    acc += Rat(u.at(i, a)) * at(i, j) * Rat(u.at(j, b));
            out.at(a, b) = acc;
        }
    return out;
}

}  // namespace orbtop
