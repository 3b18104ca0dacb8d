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
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

#include "focknet/matrix.hpp"

namespace focknet {

/// Deterministic random source. Only the raw mt19937_64 output stream is
/// consumed (the standard pins it down exactly); the mappings to doubles are
/// implemented here so that results are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1].
    double uniform_positive() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform double in [0, high).
    double uniform(double high) { return uniform() * high; }

    /// One pair of independent standard normals (Box-Muller).
    std::pair<double, double> gaussian_pair() {
        const double radius = std::sqrt(-2.0 * std::log(uniform_positive()));
        const double angle = 2.0 * std::numbers::pi * uniform();
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    /// Standard complex Gaussian: independent N(0,1) real and imaginary parts.
    Complex gaussian_complex() {
        const auto [re, im] = gaussian_pair();
        return Complex(re, im);
    }

private:
    std::mt19937_64 engine_;
};

/// Stable sub-seed for worker `index` of a run seeded with `seed`
/// (splitmix64 stream element). Used to give parallel workers independent,
/// replayable random streams.
inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace focknet
