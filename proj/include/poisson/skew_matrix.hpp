#pragma once

#include <cstddef>
#include <vector>

#include "poisson/rational.hpp"

namespace poisson {

// Skew-symmetric coefficient matrix for skew quadratic Poisson brackets.
// Only the strict upper triangle is stored; lambda_ji = -lambda_ij and the
// diagonal is zero by construction.
class SkewMatrix {
  public:
    explicit SkewMatrix(size_t n) : n_(n), upper_(n * (n - 1) / 2, Rational(0)) {}

    // Row-major strict upper triangle: (0,1), (0,2), ..., (n-2,n-1).
    static SkewMatrix from_upper(size_t n, std::vector<Rational> upper);

    size_t dim() const { return n_; }
    const Rational& upper(size_t i, size_t j) const;  // requires i < j
    Rational at(size_t i, size_t j) const;            // signed, diagonal 0
    void set(size_t i, size_t j, Rational value);     // requires i != j

    // Classifier hypothesis: every off-diagonal entry nonzero.
    bool all_offdiag_nonzero() const;

    bool operator==(const SkewMatrix&) const = default;

  private:
    size_t slot(size_t i, size_t j) const;  // i < j

    size_t n_;
    std::vector<Rational> upper_;
};

}  // namespace poisson
