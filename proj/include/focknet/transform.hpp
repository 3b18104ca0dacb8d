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
#include <cstddef>
#include <string>

#include "focknet/combinatorics.hpp"
#include "focknet/errors.hpp"
#include "focknet/fock_state.hpp"
#include "focknet/matrix.hpp"
#include "focknet/permanent.hpp"

namespace focknet {

/// Total-photon cap for full state transforms; keeps both the configuration
/// count and the expanded permanent orders desk-sized.
inline constexpr int kTransformPhotonCap = 12;

/// Fock-basis matrix element <out|U|in> of a unitary network,
///
///   <m|U|n> = (prod_i n_i!)^{-1/2} (prod_j m_j!)^{-1/2}
///             per Lambda[(1^{m_1},...)|(1^{n_1},...)].
///
/// Photon number is conserved, so the element is exactly zero whenever the
/// totals differ; no permanent is evaluated in that case.
inline Complex matrix_element(const UnitaryMatrix& u, const OccupationVector& out,
                              const OccupationVector& in,
                              std::size_t max_photons = kExactDimCap) {
    if (out.size() != u.dim() || in.size() != u.dim()) {
        throw DimensionMismatch("matrix_element: occupation length must equal network size");
    }
    if (out.total() != in.total()) return Complex(0.0, 0.0);
    if (static_cast<std::size_t>(in.total()) > max_photons) {
        throw DimensionTooLarge("matrix_element: total photon number " +
                                std::to_string(in.total()) + " exceeds cap " +
                                std::to_string(max_photons));
    }
    const Complex permanent = per_repeated(u.matrix(), out, in, max_photons);
    const double normalization =
        std::sqrt(static_cast<double>(occupation_factorial(in)) *
                  static_cast<double>(occupation_factorial(out)));
    return permanent / normalization;
}

/// per Lambda = <1...1|U|1...1>: the permanent of a unitary read off as the
/// single-photon-per-mode transition amplitude. Lies in the closed unit disk.
inline Complex permanent_of_unitary(const UnitaryMatrix& u) {
    return matrix_element(u, OccupationVector::ones(u.dim()), OccupationVector::ones(u.dim()));
}

/// Full transform of the Fock state |in> through the network:
///
///   U|n> = (prod_i n_i!)^{-1/2} sum_{w in G_{n,N}} mu(w)^{-1/2}
///          per Lambda[w|(1^{n_1},...)] |m(w)>,
///
/// one permanent per non-decreasing output configuration w. Output terms are
/// accumulated in lexicographic w order, so the result is deterministic.
inline FockStateVector transform_state(const UnitaryMatrix& u, const OccupationVector& in,
                                       int max_photons = kTransformPhotonCap) {
    const std::size_t modes = u.dim();
    if (in.size() != modes) {
        throw DimensionMismatch("transform_state: occupation length must equal network size");
    }
    const int n = in.total();
    if (n > max_photons) {
        throw EnumerationTooLarge("transform_state: total photon number " + std::to_string(n) +
                                  " exceeds cap " + std::to_string(max_photons));
    }

    const double input_factorial = static_cast<double>(occupation_factorial(in));
    FockStateVector result(modes);
    for (const ModeSequence& w : enumerate_sequences(n, static_cast<int>(modes))) {
        // mu(w)! equals the occupation factorial of the configuration
        const OccupationVector out = multiplicities(w, static_cast<int>(modes));
        const Complex permanent = per_repeated(u.matrix(), out, in);
        const double normalization = std::sqrt(
            input_factorial * static_cast<double>(occupation_factorial(out)));
        result.add(out, permanent / normalization);
    }
    result.prune();
    return result;
}

/// Linear extension of transform_state to sparse superpositions.
inline FockStateVector transform_superposition(const UnitaryMatrix& u, const FockStateVector& in,
                                               int max_photons = kTransformPhotonCap) {
    if (in.modes() != u.dim()) {
        throw DimensionMismatch("transform_superposition: mode counts differ");
    }
    FockStateVector result(u.dim());
    for (const auto& [occ, amp] : in.amplitudes()) {
        result.add_scaled(transform_state(u, occ, max_photons), amp);
    }
    result.prune();
    return result;
}

/// Result of projecting all but the first output mode onto Fock states.
struct PartialProjection {
    int remaining;       ///< photons left in mode 1
    Complex amplitude;   ///< coefficient of |remaining> in mode 1
};

/// Partial matrix element <m_2,...,m_N|U|n_1,...,n_N>: only modes 2..N are
/// detected, leaving n - sum(m_j) photons in mode 1. Normalized so that it
/// equals the full matrix element with output (remaining, m_2, ..., m_N);
/// the (remaining!)^{-1/2} factor is included for exactly that reason.
inline PartialProjection partial_matrix_element(const UnitaryMatrix& u,
                                                const OccupationVector& detected,
                                                const OccupationVector& in) {
    const std::size_t modes = u.dim();
    if (in.size() != modes || detected.size() + 1 != modes) {
        throw DimensionMismatch(
            "partial_matrix_element: need N input occupations and N-1 detected counts");
    }
    const int remaining = in.total() - detected.total();
    if (remaining < 0) {
        throw PhotonDeficit("partial_matrix_element: detected more photons than supplied");
    }

    std::vector<int> out_counts;
    out_counts.reserve(modes);
    out_counts.push_back(remaining);
    for (std::size_t j = 0; j < detected.size(); ++j) out_counts.push_back(detected[j]);
    const OccupationVector out(std::move(out_counts));

    const Complex permanent = per_repeated(u.matrix(), out, in);
    const double normalization =
        std::sqrt(static_cast<double>(occupation_factorial(in)) *
                  static_cast<double>(occupation_factorial(out)));
    return PartialProjection{remaining, permanent / normalization};
}

}  // namespace focknet
