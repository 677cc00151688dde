#pragma once

#include <optional>
#include <vector>

#include "qspieri/linear.hpp"

namespace qspieri {

using RatMatrix = std::vector<std::vector<Rational>>;

// Gaussian elimination over the rationals; destroys its argument.
inline int matrix_rank(RatMatrix m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const Rational lead = m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] /= lead;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Builds the dense coefficient matrix of a family of sparse vectors; the
// column key order is returned through `columns`.
template <class K>
RatMatrix to_matrix(const std::vector<Lin<K>>& rows, std::vector<K>& columns) {
    std::map<K, int> index;
    for (const auto& row : rows)
        for (const auto& [k, c] : row) index.emplace(k, 0);
    columns.clear();
    for (auto& [k, i] : index) {
        i = static_cast<int>(columns.size());
        columns.push_back(k);
    }
    RatMatrix m(rows.size(), std::vector<Rational>(columns.size(), Rational(0)));
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [k, c] : rows[r]) m[r][index[k]] = c;
    return m;
}

template <class K>
int rank_of(const std::vector<Lin<K>>& rows) {
    std::vector<K> columns;
    return matrix_rank(to_matrix(rows, columns));
}

// Solves sum_j x_j basis[j] = target exactly.  Returns nullopt when the
// target is outside the span.  Free coordinates are set to zero.
template <class K>
std::optional<std::vector<Rational>> solve_in_span(const std::vector<Lin<K>>& basis,
                                                   const Lin<K>& target) {
    std::map<K, int> index;
    for (const auto& row : basis)
        for (const auto& [k, c] : row) index.emplace(k, 0);
    for (const auto& [k, c] : target) index.emplace(k, 0);
    int nrows = 0;
    for (auto& [k, i] : index) i = nrows++;

    int ncols = static_cast<int>(basis.size());
    // One row per key: A x = b with A[key][j] = basis[j][key].
    RatMatrix a(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (int j = 0; j < ncols; ++j)
        for (const auto& [k, c] : basis[static_cast<size_t>(j)]) a[index[k]][j] = c;
    for (const auto& [k, c] : target) a[index[k]][ncols] = c;

    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const Rational lead = a[rank][col];
        for (int c = col; c <= ncols; ++c) a[rank][c] /= lead;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (int c = col; c <= ncols; ++c) a[r][c] -= f * a[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < nrows; ++r)
        if (a[r][ncols] != 0) return std::nullopt;

    std::vector<Rational> x(ncols, Rational(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = a[r][ncols];
    return x;
}

}  // namespace qspieri
