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

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "focknet/combinatorics.hpp"
#include "focknet/matrix.hpp"
#include "focknet/random.hpp"

namespace focknet::testing {

inline ComplexMatrix random_complex_matrix(std::size_t dim, Rng& rng) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rng.gaussian_complex();
    }
    return m;
}

inline ComplexMatrix random_permutation_matrix(std::size_t dim, Rng& rng) {
    std::vector<std::size_t> order(dim);
    for (std::size_t i = 0; i < dim; ++i) order[i] = i;
    for (std::size_t i = dim; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.uniform(static_cast<double>(i)));
        std::swap(order[i - 1], order[j]);
    }
    ComplexMatrix p(dim);
    for (std::size_t i = 0; i < dim; ++i) p(i, order[i]) = 1.0;
    return p;
}

inline ComplexMatrix random_diagonal_matrix(std::size_t dim, Rng& rng) {
    ComplexMatrix d(dim);
    for (std::size_t i = 0; i < dim; ++i) d(i, i) = rng.gaussian_complex();
    return d;
}

/// |a - b| <= tol * (1 + |a|), the relative agreement used throughout.
inline bool close_rel(const Complex& a, const Complex& b, double tol = 1e-10) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(a));
}

/// All occupations of `modes` modes with total photon number exactly `n`.
inline std::vector<OccupationVector> occupations_with_total(int n, int modes) {
    std::vector<OccupationVector> result;
    for (const ModeSequence& w : enumerate_sequences(n, modes)) {
        result.push_back(multiplicities(w, modes));
    }
    return result;
}

}  // namespace focknet::testing
