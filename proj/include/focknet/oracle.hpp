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

// Brute-force reference path. Everything here expands the creation-operator
// polynomial directly and never touches the permanent kernels; agreement
// between the two routes is what the test suites check.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "focknet/combinatorics.hpp"
#include "focknet/errors.hpp"
#include "focknet/fock_state.hpp"
#include "focknet/matrix.hpp"
#include "focknet/random.hpp"

namespace focknet {

/// Total-photon cap for the brute-force expansion.
inline constexpr int kOraclePhotonCap = 10;

/// N x N table of non-negative integers n_ij with prescribed row sums; cell
/// (i, j) counts photons routed from input mode i to output mode j.
class ContingencyTable {
public:
    ContingencyTable(std::size_t modes, std::vector<int> cells)
        : modes_(modes), cells_(std::move(cells)) {
        if (cells_.size() != modes_ * modes_) {
            throw DimensionMismatch("ContingencyTable: cell count must be modes^2");
        }
    }

    std::size_t modes() const { return modes_; }

    int operator()(std::size_t row, std::size_t col) const { return cells_[row * modes_ + col]; }

    int row_sum(std::size_t row) const {
        int sum = 0;
        for (std::size_t j = 0; j < modes_; ++j) sum += (*this)(row, j);
        return sum;
    }

    int column_sum(std::size_t col) const {
        int sum = 0;
        for (std::size_t i = 0; i < modes_; ++i) sum += (*this)(i, col);
        return sum;
    }

    OccupationVector column_sums() const {
        std::vector<int> sums(modes_, 0);
        for (std::size_t i = 0; i < modes_; ++i) {
            for (std::size_t j = 0; j < modes_; ++j) sums[j] += (*this)(i, j);
        }
        return OccupationVector(std::move(sums));
    }

    const std::vector<int>& cells() const { return cells_; }

    auto operator<=>(const ContingencyTable&) const = default;

private:
    std::size_t modes_;
    std::vector<int> cells_;
};

namespace detail {

// Weak compositions of `total` into `cells` parts, first cell largest first:
// (total,0,...,0), (total-1,1,0,...), ..., (0,...,0,total).
inline void append_compositions(int total, int cells, std::vector<int>& current,
                                std::vector<std::vector<int>>& out) {
    if (cells == 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int value = total; value >= 0; --value) {
        current.push_back(value);
        append_compositions(total - value, cells - 1, current, out);
        current.pop_back();
    }
}

}  // namespace detail

/// All contingency tables whose row i sums to in[i], in deterministic order
/// (row 0 varies slowest, each row running through its compositions with the
/// first cell decreasing). There are prod_i C(n_i + N - 1, n_i) of them.
inline std::vector<ContingencyTable> enumerate_tables(const OccupationVector& in) {
    const std::size_t modes = in.size();
    if (modes == 0) throw OutOfRange("enumerate_tables: need at least one mode");

    Uint128 count = 1;
    for (std::size_t i = 0; i < modes; ++i) {
        count *= binomial(in[i] + static_cast<int>(modes) - 1, in[i]);
        if (count > static_cast<Uint128>(kEnumerationCap)) {
            throw EnumerationTooLarge("enumerate_tables: table count exceeds cap");
        }
    }

    std::vector<std::vector<std::vector<int>>> row_choices(modes);
    std::vector<int> scratch;
    for (std::size_t i = 0; i < modes; ++i) {
        detail::append_compositions(in[i], static_cast<int>(modes), scratch, row_choices[i]);
    }

    std::vector<ContingencyTable> tables;
    tables.reserve(static_cast<std::size_t>(count));
    std::vector<std::size_t> pick(modes, 0);
    while (true) {
        std::vector<int> cells;
        cells.reserve(modes * modes);
        for (std::size_t i = 0; i < modes; ++i) {
            const auto& row = row_choices[i][pick[i]];
            cells.insert(cells.end(), row.begin(), row.end());
        }
        tables.emplace_back(modes, std::move(cells));

        // odometer, last row fastest
        std::size_t pos = modes;
        while (pos > 0) {
            --pos;
            if (++pick[pos] < row_choices[pos].size()) break;
            pick[pos] = 0;
            if (pos == 0) return tables;
        }
    }
}

/// Brute-force network transform by multinomial expansion: every table of
/// photon routings {n_ij} contributes
///
///   (prod_i n_i!)^{1/2} / (prod_ij n_ij!) * (prod_l m_l!)^{1/2}
///   * prod_{k,l} Lambda_{lk}^{n_kl}
///
/// to the output state |m_1,...,m_N>, where m_j are the table's column sums.
inline FockStateVector oracle_transform(const UnitaryMatrix& u, const OccupationVector& in) {
    const std::size_t modes = u.dim();
    if (in.size() != modes) {
        throw DimensionMismatch("oracle_transform: occupation length must equal network size");
    }
    if (in.total() > kOraclePhotonCap) {
        throw EnumerationTooLarge("oracle_transform: total photon number " +
                                  std::to_string(in.total()) + " exceeds cap " +
                                  std::to_string(kOraclePhotonCap));
    }

    const double input_factorial = static_cast<double>(occupation_factorial(in));
    FockStateVector result(modes);
    for (const ContingencyTable& table : enumerate_tables(in)) {
        Complex product(1.0, 0.0);
        double table_factorials = 1.0;
        for (std::size_t i = 0; i < modes; ++i) {
            for (std::size_t j = 0; j < modes; ++j) {
                const int count = table(i, j);
                table_factorials *= factorial_as_double(count);
                // n_ij photons go from input i to output j, each with amplitude
                // Lambda_{ji}.
                for (int p = 0; p < count; ++p) product *= u(j, i);
            }
        }
        const OccupationVector out = table.column_sums();
        const double roots = std::sqrt(
            input_factorial * static_cast<double>(occupation_factorial(out)));
        result.add(out, product * roots / table_factorials);
    }
    result.prune();
    return result;
}

/// Amplitude of |out> in the brute-force transform of |in>; zero if absent.
inline Complex oracle_matrix_element(const UnitaryMatrix& u, const OccupationVector& out,
                                     const OccupationVector& in) {
    if (out.size() != u.dim()) {
        throw DimensionMismatch("oracle_matrix_element: occupation length must equal network size");
    }
    return oracle_transform(u, in).amplitude(out);
}

/// Haar-random unitary drawn from `rng`: orthonormalize a matrix of standard
/// complex Gaussians by modified Gram-Schmidt (run twice for orthogonality at
/// machine precision). The triangular factor's diagonal comes out real and
/// positive, which is exactly the phase fixing that makes the result
/// Haar-distributed.
inline UnitaryMatrix haar_random_unitary(std::size_t dim, Rng& rng) {
    if (dim < 1) throw OutOfRange("haar_random_unitary: dim must be >= 1");

    ComplexMatrix q(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) q(i, j) = rng.gaussian_complex();
    }

    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex overlap(0.0, 0.0);
                for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(q(i, k)) * q(i, j);
                for (std::size_t i = 0; i < dim; ++i) q(i, j) -= overlap * q(i, k);
            }
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) norm += std::norm(q(i, j));
        norm = std::sqrt(norm);
        if (norm < 1e-12) {
            // Degenerate draw (probability zero up to rounding): redraw column.
            for (std::size_t i = 0; i < dim; ++i) q(i, j) = rng.gaussian_complex();
            --j;
            continue;
        }
        for (std::size_t i = 0; i < dim; ++i) q(i, j) /= norm;
    }
    return UnitaryMatrix(std::move(q));
}

/// Seeded variant; deterministic in (dim, seed).
inline UnitaryMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_unitary(dim, rng);
}

}  // namespace focknet
