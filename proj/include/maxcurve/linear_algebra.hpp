/*
   Copyright 2026 The maxcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXCURVE_LINEAR_ALGEBRA_HPP
#define MAXCURVE_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "field_tower.hpp"

namespace maxcurve {

using Matrix = std::vector<std::vector<Fe>>;

struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;  // pivot column of row i, increasing
};

/// In-place reduced row echelon form over the ambient field.
inline Echelon row_reduce(const FieldTower& t, Matrix& m) {
    Echelon e;
    if (m.empty()) return e;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][c] == t.zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        const Fe inv = t.inv(m[row][c]);
        for (auto& v : m[row]) v = t.mul(v, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == t.zero()) continue;
            const Fe factor = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] = t.sub(m[r][k], t.mul(factor, m[row][k]));
        }
        e.pivot_cols.push_back(c);
        ++row;
    }
    e.rank = row;
    return e;
}

inline std::size_t rank(const FieldTower& t, Matrix m) { return row_reduce(t, m).rank; }

/**
 * Nonzero kernel vector of m whose last nonzero entry has the smallest possible index,
 * or nullopt when the kernel is trivial.
 */
inline std::optional<std::vector<Fe>> lowest_kernel_vector(const FieldTower& t, Matrix m, std::size_t cols,
                                                           std::size_t* rank_out = nullptr) {
    const Echelon e = m.empty() ? Echelon{} : row_reduce(t, m);
    if (rank_out) *rank_out = e.rank;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::size_t free = cols;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) {
            free = c;
            break;
        }
    }
    if (free == cols) return std::nullopt;
    std::vector<Fe> v(cols, t.zero());
    v[free] = t.one();
    for (std::size_t r = 0; r < e.rank; ++r)
        if (e.pivot_cols[r] < free) v[e.pivot_cols[r]] = t.neg(m[r][free]);
    return v;
}

}  // namespace maxcurve

#endif
