#pragma once

#include "qd/rational.hpp"

#include <optional>
#include <vector>

namespace qd {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

/// Row-reduces [A | b...] in place, returns pivot columns.
/// Works on any number of augmented columns (aug = how many trailing
/// columns are right-hand sides and must not be chosen as pivots).
inline std::vector<int> row_reduce(Matrix& m, int aug = 0) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size()) - aug;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        Rational inv = m[r][c];
        for (auto& v : m[r]) v /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

/// Solves A x = b. Returns nullopt if inconsistent or underdetermined.
inline std::optional<Vector> solve_unique(const Matrix& a, const Vector& b) {
    if (a.empty()) return b.empty() ? std::optional<Vector>(Vector{}) : std::nullopt;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    Matrix m(rows, Vector(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    auto pivots = row_reduce(m, 1);
    if (static_cast<int>(pivots.size()) != cols) return std::nullopt;
    // consistency: rows past the pivot rows must have zero RHS
    for (int i = static_cast<int>(pivots.size()); i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;
    Vector x(cols);
    for (int i = 0; i < cols; ++i) x[pivots[i]] = m[i][cols];
    return x;
}

/// Basis of the right nullspace of A.
inline std::vector<Vector> nullspace(Matrix m) {
    if (m.empty()) return {};
    int cols = static_cast<int>(m[0].size());
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
    int n = static_cast<int>(a.size());
    Matrix m(n, Vector(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    auto pivots = row_reduce(m, n);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    Matrix inv(n, Vector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

} // namespace qd
