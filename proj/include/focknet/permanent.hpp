/*
 * Copyright 2026 The focknet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "focknet/combinatorics.hpp"
#include "focknet/errors.hpp"
#include "focknet/matrix.hpp"

namespace focknet {

/// Order cap for the O(n * n!) definition-based permanent.
inline constexpr std::size_t kNaiveDimCap = 10;

/// Order cap for the O(n * 2^n) exact permanents (Ryser, Glynn).
inline constexpr std::size_t kExactDimCap = 24;

/// Permanent straight from the definition: sum over all permutations sigma of
/// prod_i m(i, sigma_i). Exponential in a bad way; useful as an oracle for the
/// faster algorithms. The empty matrix has permanent 1.
inline Complex per_naive(const ComplexMatrix& m, std::size_t max_dim = kNaiveDimCap) {
    const std::size_t n = m.dim();
    if (n > max_dim) {
        throw DimensionTooLarge("per_naive: order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(max_dim));
    }
    if (n == 0) return Complex(1.0, 0.0);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Complex sum(0.0, 0.0);
    do {
        Complex diagonal(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) diagonal *= m(i, perm[i]);
        sum += diagonal;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

/// Ryser's inclusion-exclusion formula,
///   per(m) = (-1)^n sum_{S != empty} (-1)^|S| prod_i sum_{j in S} m_ij,
/// walking the column subsets in Gray-code order so each step updates the n
/// row sums by a single column.
inline Complex per_ryser(const ComplexMatrix& m, std::size_t max_dim = kExactDimCap) {
    const std::size_t n = m.dim();
    if (n > max_dim) {
        throw DimensionTooLarge("per_ryser: order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(max_dim));
    }
    if (n == 0) return Complex(1.0, 0.0);

    std::vector<Complex> row_sums(n, Complex(0.0, 0.0));
    Complex total(0.0, 0.0);
    std::uint64_t subset = 0;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < end; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const std::uint64_t flipped = subset ^ next;
        const std::size_t col = static_cast<std::size_t>(std::countr_zero(flipped));
        const double direction = (next & flipped) != 0 ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) row_sums[i] += direction * m(i, col);
        subset = next;

        Complex product = row_sums[0];
        for (std::size_t i = 1; i < n; ++i) product *= row_sums[i];
        if (std::popcount(subset) & 1U) {
            total -= product;
        } else {
            total += product;
        }
    }
    return (n & 1U) ? -total : total;
}

/// Glynn's formula,
///   per(m) = 2^{1-n} sum_{delta, delta_1 = +1} (prod_k delta_k)
///            prod_j sum_i delta_i m_ij,
/// over sign vectors delta in {-1,+1}^n, again in Gray-code order. Entirely
/// independent of Ryser's subset sums, which makes it a good cross-check.
inline Complex per_glynn(const ComplexMatrix& m, std::size_t max_dim = kExactDimCap) {
    const std::size_t n = m.dim();
    if (n > max_dim) {
        throw DimensionTooLarge("per_glynn: order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(max_dim));
    }
    if (n == 0) return Complex(1.0, 0.0);

    std::vector<Complex> col_sums(n, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) col_sums[j] += m(i, j);
    }
    Complex total = col_sums[0];
    for (std::size_t j = 1; j < n; ++j) total *= col_sums[j];

    double sign = 1.0;
    std::uint64_t flips = 0;
    const std::uint64_t end = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < end; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const std::uint64_t flipped = flips ^ next;
        // delta_1 stays +1; bit b toggles delta_{b+2}.
        const std::size_t row = static_cast<std::size_t>(std::countr_zero(flipped)) + 1;
        const double step = (next & flipped) != 0 ? -2.0 : 2.0;
        for (std::size_t j = 0; j < n; ++j) col_sums[j] += step * m(row, j);
        flips = next;
        sign = -sign;

        Complex product = col_sums[0];
        for (std::size_t j = 1; j < n; ++j) product *= col_sums[j];
        total += sign * product;
    }
    return total / static_cast<double>(end);
}

/// Permanent of the index-repeated submatrix m[(1^{r_1},...)|(1^{c_1},...)]:
/// row i of `m` used r_i times, column j used c_j times. Materializes the
/// expanded matrix (order = total multiplicity) and runs Ryser on it.
inline Complex per_repeated(const ComplexMatrix& m, const OccupationVector& row_mult,
                            const OccupationVector& col_mult,
                            std::size_t max_dim = kExactDimCap) {
    if (row_mult.size() != m.dim() || col_mult.size() != m.dim()) {
        throw MultiplicityMismatch("per_repeated: multiplicity length must equal matrix dim");
    }
    if (row_mult.total() != col_mult.total()) {
        throw MultiplicityMismatch("per_repeated: row and column multiplicity totals differ");
    }
    if (static_cast<std::size_t>(row_mult.total()) > max_dim) {
        throw DimensionTooLarge("per_repeated: expanded order " +
                                std::to_string(row_mult.total()) + " exceeds cap " +
                                std::to_string(max_dim));
    }
    return per_ryser(build_submatrix(m, row_mult, col_mult), max_dim);
}

}  // namespace focknet
