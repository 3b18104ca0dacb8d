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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "focknet/errors.hpp"
#include "focknet/matrix.hpp"

namespace focknet {

// 128-bit integers keep factorials exact up to 33!; anything larger is
// rejected rather than silently rounded.
using Uint128 = unsigned __int128;

inline constexpr int kFactorialMax = 33;

/// Number of output configurations an enumeration may produce before it is
/// rejected as too large.
inline constexpr std::uint64_t kEnumerationCap = 10'000'000;

inline Uint128 factorial(int n) {
    if (n < 0) throw OutOfRange("factorial: negative argument");
    if (n > kFactorialMax) {
        throw DimensionTooLarge("factorial(" + std::to_string(n) +
                                ") exceeds the exact 128-bit range (max " +
                                std::to_string(kFactorialMax) + "!)");
    }
    Uint128 result = 1;
    for (int k = 2; k <= n; ++k) result *= static_cast<Uint128>(k);
    return result;
}

inline double factorial_as_double(int n) { return static_cast<double>(factorial(n)); }

/// Exact binomial coefficient C(n, k).
inline Uint128 binomial(int n, int k) {
    if (n < 0 || k < 0) throw OutOfRange("binomial: negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Uint128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<Uint128>(n - k + i) / static_cast<Uint128>(i);
    }
    return result;
}

/// Per-mode photon counts (n_1, ..., n_N). Also used as a row/column
/// multiplicity pattern when building index-repeated submatrices.
class OccupationVector {
public:
    OccupationVector() = default;

    explicit OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
        validate();
    }

    OccupationVector(std::initializer_list<int> counts) : counts_(counts) { validate(); }

    static OccupationVector zeros(std::size_t modes) {
        return OccupationVector(std::vector<int>(modes, 0));
    }

    static OccupationVector ones(std::size_t modes) {
        return OccupationVector(std::vector<int>(modes, 1));
    }

    std::size_t size() const { return counts_.size(); }
    int operator[](std::size_t i) const { return counts_[i]; }
    const std::vector<int>& counts() const { return counts_; }

    /// Total photon number.
    int total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

    auto operator<=>(const OccupationVector&) const = default;

private:
    void validate() const {
        for (int c : counts_) {
            if (c < 0) throw OutOfRange("OccupationVector: counts must be non-negative");
        }
    }

    std::vector<int> counts_;
};

/// Non-decreasing sequence of 1-based mode indices; labels one output
/// configuration of n photons over N modes.
class ModeSequence {
public:
    ModeSequence() = default;

    explicit ModeSequence(std::vector<int> values) : values_(std::move(values)) { validate(); }

    ModeSequence(std::initializer_list<int> values) : values_(values) { validate(); }

    std::size_t length() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }
    const std::vector<int>& values() const { return values_; }

    auto operator<=>(const ModeSequence&) const = default;

private:
    void validate() const {
        int prev = 1;
        for (int v : values_) {
            if (v < prev) {
                throw IndexOutOfRange("ModeSequence: values must be non-decreasing and >= 1");
            }
            prev = v;
        }
    }

    std::vector<int> values_;
};

/// All non-decreasing sequences of length `n` over modes 1..N, in ascending
/// lexicographic order. The list has C(n+N-1, n) elements.
inline std::vector<ModeSequence> enumerate_sequences(int n, int modes) {
    if (n < 0) throw OutOfRange("enumerate_sequences: negative photon number");
    if (modes < 1) throw OutOfRange("enumerate_sequences: need at least one mode");
    const Uint128 count = binomial(n + modes - 1, n);
    if (count > static_cast<Uint128>(kEnumerationCap)) {
        throw EnumerationTooLarge("enumerate_sequences: configuration count exceeds cap");
    }

    std::vector<ModeSequence> result;
    result.reserve(static_cast<std::size_t>(count));
    std::vector<int> current(static_cast<std::size_t>(n), 1);
    while (true) {
        result.emplace_back(current);
        // Advance: bump the rightmost entry below N, then flatten the tail.
        int pos = n - 1;
        while (pos >= 0 && current[static_cast<std::size_t>(pos)] == modes) --pos;
        if (pos < 0) break;
        const int next = current[static_cast<std::size_t>(pos)] + 1;
        for (std::size_t i = static_cast<std::size_t>(pos); i < current.size(); ++i) {
            current[i] = next;
        }
    }
    return result;
}

/// Occupation multiplicities of a mode sequence: counts[i-1] = number of
/// occurrences of mode i in `w`.
inline OccupationVector multiplicities(const ModeSequence& w, int modes) {
    if (modes < 1) throw OutOfRange("multiplicities: need at least one mode");
    std::vector<int> counts(static_cast<std::size_t>(modes), 0);
    for (std::size_t i = 0; i < w.length(); ++i) {
        const int mode = w[i];
        if (mode < 1 || mode > modes) {
            throw IndexOutOfRange("multiplicities: mode index outside 1..N");
        }
        ++counts[static_cast<std::size_t>(mode - 1)];
    }
    return OccupationVector(std::move(counts));
}

/// mu(w) = prod_i m_i(w)! where m_i are the occupation multiplicities of w.
inline Uint128 mu(const ModeSequence& w, int modes) {
    const OccupationVector m = multiplicities(w, modes);
    Uint128 product = 1;
    for (std::size_t i = 0; i < m.size(); ++i) product *= factorial(m[i]);
    return product;
}

/// Product of factorials of all counts, prod_i n_i!.
inline Uint128 occupation_factorial(const OccupationVector& occ) {
    Uint128 product = 1;
    for (std::size_t i = 0; i < occ.size(); ++i) product *= factorial(occ[i]);
    return product;
}

/// Index-repeated submatrix: row index i of `m` appears row_pattern[i] times
/// (in ascending mode order), column index j appears col_pattern[j] times.
/// The result is square of order row_pattern.total().
inline ComplexMatrix build_submatrix(const ComplexMatrix& m, const OccupationVector& row_pattern,
                                     const OccupationVector& col_pattern) {
    if (row_pattern.size() != m.dim() || col_pattern.size() != m.dim()) {
        throw PatternMismatch("build_submatrix: pattern length must equal matrix dim");
    }
    if (row_pattern.total() != col_pattern.total()) {
        throw PatternMismatch("build_submatrix: row and column totals differ");
    }

    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    rows.reserve(static_cast<std::size_t>(row_pattern.total()));
    cols.reserve(static_cast<std::size_t>(col_pattern.total()));
    for (std::size_t i = 0; i < row_pattern.size(); ++i) {
        for (int r = 0; r < row_pattern[i]; ++r) rows.push_back(i);
    }
    for (std::size_t j = 0; j < col_pattern.size(); ++j) {
        for (int r = 0; r < col_pattern[j]; ++r) cols.push_back(j);
    }

    ComplexMatrix expanded(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            expanded(r, c) = m(rows[r], cols[c]);
        }
    }
    return expanded;
}

}  // namespace focknet
