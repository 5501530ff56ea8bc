#include "poisson/skew_matrix.hpp"

namespace poisson {

SkewMatrix SkewMatrix::from_upper(size_t n, std::vector<Rational> upper) {
    SkewMatrix m(n);
    if (upper.size() != n * (n - 1) / 2)
        throw Error("skew matrix: expected n(n-1)/2 upper-triangle entries");
    m.upper_ = std::move(upper);
    return m;
}

size_t SkewMatrix::slot(size_t i, size_t j) const {
    // Row-major offset into the strict upper triangle.
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

const Rational& SkewMatrix::upper(size_t i, size_t j) const {
    if (!(i < j && j < n_)) throw Error("skew matrix: upper() needs i < j < n");
    return upper_[slot(i, j)];
}

Rational SkewMatrix::at(size_t i, size_t j) const {
    if (i >= n_ || j >= n_) throw Error("skew matrix: index out of range");
    if (i == j) return Rational(0);
    return i < j ? upper_[slot(i, j)] : Rational(-upper_[slot(j, i)]);
}

void SkewMatrix::set(size_t i, size_t j, Rational value) {
    if (i == j) throw Error("skew matrix: diagonal entries are fixed at zero");
    if (i >= n_ || j >= n_) throw Error("skew matrix: index out of range");
    if (i < j)
        upper_[slot(i, j)] = std::move(value);
    else
        upper_[slot(j, i)] = -value;
}

bool SkewMatrix::all_offdiag_nonzero() const {
    for (const auto& v : upper_)
        if (v == 0) return false;
    return true;
}

}  // namespace poisson
