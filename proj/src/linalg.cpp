#include "foldprod/linalg.hpp"

#include <stdexcept>

namespace foldprod {

std::vector<size_t> rref(QMatrix& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    const size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        Rational inv = a[r][c].inverse();
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(QMatrix a) { return rref(a).size(); }

std::vector<QVector> nullspace(const QMatrix& a) {
    if (a.empty()) return {};
    const size_t cols = a[0].size();
    QMatrix m = a;
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols, Rational(0));
        v[free] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(QMatrix a, QVector b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    if (a.empty()) return QVector{};
    const size_t cols = a[0].size();
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(a);
    // Inconsistent iff the augmented column became a pivot.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVector x(cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

} // namespace foldprod
