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
#include <map>
#include <utility>

#include "focknet/combinatorics.hpp"
#include "focknet/errors.hpp"
#include "focknet/matrix.hpp"

namespace focknet {

/// Amplitudes below this magnitude are dropped when a state is pruned; far
/// below every tolerance used by callers.
inline constexpr double kAmplitudePruneThreshold = 1e-14;

/// Sparse pure state over N modes: occupation vector -> complex amplitude.
/// Keys are kept in lexicographic order so iteration (and serialization) is
/// deterministic.
class FockStateVector {
public:
    using AmplitudeMap = std::map<OccupationVector, Complex>;

    explicit FockStateVector(std::size_t modes) : modes_(modes) {}

    /// Basis state |occ> with amplitude 1.
    static FockStateVector basis_state(const OccupationVector& occ) {
        FockStateVector state(occ.size());
        state.add(occ, Complex(1.0, 0.0));
        return state;
    }

    std::size_t modes() const { return modes_; }

    void add(const OccupationVector& occ, Complex amplitude) {
        if (occ.size() != modes_) {
            throw DimensionMismatch("FockStateVector: occupation length must equal mode count");
        }
        amplitudes_[occ] += amplitude;
    }

    /// Amplitude of |occ>, zero if the term is absent.
    Complex amplitude(const OccupationVector& occ) const {
        const auto it = amplitudes_.find(occ);
        return it == amplitudes_.end() ? Complex(0.0, 0.0) : it->second;
    }

    double norm_squared() const {
        double sum = 0.0;
        for (const auto& [occ, amp] : amplitudes_) sum += std::norm(amp);
        return sum;
    }

    std::size_t term_count() const { return amplitudes_.size(); }

    const AmplitudeMap& amplitudes() const { return amplitudes_; }

    void scale(Complex factor) {
        for (auto& [occ, amp] : amplitudes_) amp *= factor;
    }

    void add_scaled(const FockStateVector& other, Complex factor) {
        if (other.modes_ != modes_) {
            throw DimensionMismatch("FockStateVector: mode counts differ");
        }
        for (const auto& [occ, amp] : other.amplitudes_) amplitudes_[occ] += factor * amp;
    }

    /// Drop terms with |amplitude| below `threshold`.
    void prune(double threshold = kAmplitudePruneThreshold) {
        for (auto it = amplitudes_.begin(); it != amplitudes_.end();) {
            if (std::abs(it->second) < threshold) {
                it = amplitudes_.erase(it);
            } else {
                ++it;
            }
        }
    }

private:
    std::size_t modes_;
    AmplitudeMap amplitudes_;
};

}  // namespace focknet
