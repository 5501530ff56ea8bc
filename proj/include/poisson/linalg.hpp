#pragma once

#include <vector>

#include "poisson/rational.hpp"

namespace poisson {

// Dense exact linear algebra over the rationals; rows are equations.
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// Reduced row echelon form in place. Returns the pivot column of each
// nonzero row, in row order.
std::vector<size_t> rref(Matrix& m);

size_t rank(Matrix m);

// Basis of { v : m v = 0 }. The basis is echelon in the free coordinates:
// each vector carries a 1 in its own free column and 0 in the others, so the
// result is canonical for a fixed column order.
std::vector<Vector> null_space(const Matrix& m, size_t ncols);

}  // namespace poisson
