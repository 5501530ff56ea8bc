#include "poisson/linalg.hpp"

#include <algorithm>

namespace poisson {

std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = rows;
        for (size_t r = row; r < rows; ++r) {
            if (m[r][col] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == rows) continue;
        std::swap(m[row], m[sel]);
        Rational inv = 1 / m[row][col];
        for (size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> null_space(const Matrix& m, size_t ncols) {
    Matrix e = m;
    std::vector<size_t> pivots = rref(e);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(ncols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace poisson
