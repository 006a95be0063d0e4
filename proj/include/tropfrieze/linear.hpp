#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

#include "tropfrieze/matrix.hpp"

namespace tropfrieze {

// Unique rational solution of m u = rhs for square m; empty when m is singular.
inline std::optional<std::vector<mpq_class>> rational_solve(const IntMatrix& m, std::span<const Int> rhs) {
    if (!m.is_square() || rhs.size() != m.rows()) throw DimensionMismatch("rational_solve needs a square system");
    const std::size_t n = m.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n] = rhs[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const mpq_class factor = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= factor * a[c][j];
        }
    }
    std::vector<mpq_class> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = a[i][n] / a[i][i];
    return u;
}

}  // namespace tropfrieze
