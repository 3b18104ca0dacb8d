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

// Seeded property suites runnable from the CLI (`focknet verify`). Each check
// reports the measured deviation next to its limit so failures are
// replayable and diagnosable from the printed report alone.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "focknet/entanglement.hpp"
#include "focknet/errors.hpp"
#include "focknet/oracle.hpp"
#include "focknet/permanent.hpp"
#include "focknet/random.hpp"
#include "focknet/transform.hpp"

namespace focknet {

struct CheckResult {
    std::string name;
    bool passed = false;
    double deviation = 0.0;  ///< measured value, in the units named by `unit`
    double limit = 0.0;      ///< the check passes iff deviation <= limit
    std::string unit;        ///< "abs" for absolute error, "3se" for std-error multiples
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.passed; });
    }
};

namespace detail {

inline CheckResult make_check(std::string name, double deviation, double limit,
                              std::string unit = "abs") {
    CheckResult check;
    check.name = std::move(name);
    check.deviation = deviation;
    check.limit = limit;
    check.passed = deviation <= limit;
    check.unit = std::move(unit);
    return check;
}

/// All occupations of `modes` modes with total photon number exactly `n`.
inline std::vector<OccupationVector> occupations_with_total(int n, int modes) {
    std::vector<OccupationVector> result;
    for (const ModeSequence& w : enumerate_sequences(n, modes)) {
        result.push_back(multiplicities(w, modes));
    }
    return result;
}

/// Max entrywise difference between two sparse states (over the key union).
inline double state_distance(const FockStateVector& a, const FockStateVector& b) {
    double distance = 0.0;
    for (const auto& [occ, amp] : a.amplitudes()) {
        distance = std::max(distance, std::abs(amp - b.amplitude(occ)));
    }
    for (const auto& [occ, amp] : b.amplitudes()) {
        distance = std::max(distance, std::abs(amp - a.amplitude(occ)));
    }
    return distance;
}

}  // namespace detail

/// 1000 Haar-random unitaries of orders 2..6: the permanent of a unitary
/// never leaves the closed unit disk.
inline VerifyReport verify_unit_disk(std::uint64_t seed = 0) {
    VerifyReport report;
    report.suite = "unit-disk";
    constexpr int kPerOrder = 200;
    std::uint64_t stream = 0;
    for (std::size_t order = 2; order <= 6; ++order) {
        double worst = 0.0;
        for (int i = 0; i < kPerOrder; ++i) {
            const UnitaryMatrix u = haar_random_unitary(order, derive_subseed(seed, stream++));
            worst = std::max(worst, std::abs(per_ryser(u.matrix())) - 1.0);
        }
        report.checks.push_back(detail::make_check(
            "order " + std::to_string(order) + ", " + std::to_string(kPerOrder) +
                " unitaries: max |per(U)| - 1",
            worst, 1e-10));
    }
    return report;
}

/// Permanent-path transforms against the brute-force multinomial expansion,
/// entrywise, for all inputs with n <= 5 photons on N <= 3 modes, plus the
/// output norms of both paths.
inline VerifyReport verify_oracle(std::uint64_t seed = 0) {
    VerifyReport report;
    report.suite = "oracle";
    constexpr int kMaxPhotons = 5;
    std::uint64_t stream = 0;
    for (int modes = 1; modes <= 3; ++modes) {
        const int unitaries = (modes < 3) ? 17 : 16;
        double worst_entry = 0.0;
        double worst_norm = 0.0;
        for (int i = 0; i < unitaries; ++i) {
            const UnitaryMatrix u = haar_random_unitary(static_cast<std::size_t>(modes),
                                                        derive_subseed(seed, stream++));
            for (int n = 0; n <= kMaxPhotons; ++n) {
                for (const OccupationVector& in : detail::occupations_with_total(n, modes)) {
                    const FockStateVector fast = transform_state(u, in);
                    const FockStateVector slow = oracle_transform(u, in);
                    worst_entry = std::max(worst_entry, detail::state_distance(fast, slow));
                    worst_norm = std::max(worst_norm, std::abs(fast.norm_squared() - 1.0));
                    worst_norm = std::max(worst_norm, std::abs(slow.norm_squared() - 1.0));
                }
            }
        }
        report.checks.push_back(detail::make_check(
            "N = " + std::to_string(modes) + ": max |permanent path - multinomial path|",
            worst_entry, 1e-10));
        report.checks.push_back(detail::make_check(
            "N = " + std::to_string(modes) + ": max |norm^2 - 1|", worst_norm, 1e-10));
    }
    return report;
}

/// Monte Carlo moments of the hyperspherical coefficient measure against the
/// closed forms 3/((N+1)(N+3)) and 1/((N+1)(N+3)), and empirical phase
/// averages against the Kronecker-delta tensor, at N = 1, 2, 3.
inline VerifyReport verify_moments(std::uint64_t seed = 0, long long samples = 1'000'000) {
    VerifyReport report;
    report.suite = "moments";
    std::uint64_t stream = 0;

    for (int n = 1; n <= 3; ++n) {
        const std::size_t dim = static_cast<std::size_t>(n) + 1;
        const AmplitudeMoments expected = amplitude_moments(n);

        std::vector<double> quartic_sum(dim, 0.0);
        std::vector<double> quartic_sq(dim, 0.0);
        std::vector<double> cross_sum(dim * dim, 0.0);
        std::vector<double> cross_sq(dim * dim, 0.0);
        Rng rng(derive_subseed(seed, stream++));
        for (long long s = 0; s < samples; ++s) {
            const std::vector<Complex> c = sample_product_state(n, rng);
            for (std::size_t i = 0; i < dim; ++i) {
                const double p_i = std::norm(c[i]);
                const double quartic = p_i * p_i;
                quartic_sum[i] += quartic;
                quartic_sq[i] += quartic * quartic;
                for (std::size_t j = i + 1; j < dim; ++j) {
                    const double value = p_i * std::norm(c[j]);
                    cross_sum[i * dim + j] += value;
                    cross_sq[i * dim + j] += value * value;
                }
            }
        }

        const auto z_score = [samples](double sum, double sum_sq, double target) {
            const double mean = sum / static_cast<double>(samples);
            const double variance =
                std::max(0.0, (sum_sq - static_cast<double>(samples) * mean * mean) /
                                  static_cast<double>(samples - 1));
            const double se = std::sqrt(variance / static_cast<double>(samples));
            return std::abs(mean - target) / se;
        };

        double worst_quartic = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            worst_quartic =
                std::max(worst_quartic, z_score(quartic_sum[i], quartic_sq[i], expected.quartic));
        }
        double worst_cross = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) {
                worst_cross = std::max(
                    worst_cross, z_score(cross_sum[i * dim + j], cross_sq[i * dim + j],
                                         expected.cross));
            }
        }
        report.checks.push_back(detail::make_check(
            "N = " + std::to_string(n) + ": E|c_i|^4 vs 3/((N+1)(N+3)), max z", worst_quartic,
            3.0, "3se"));
        report.checks.push_back(detail::make_check(
            "N = " + std::to_string(n) + ": E|c_i|^2|c_j|^2 vs 1/((N+1)(N+3)), max z",
            worst_cross, 3.0, "3se"));
    }

    // Phase tensor: empirical mean of e^{i(phi_i + phi_j - phi_k - phi_l)}
    // with phi_0 = 0, all index tuples.
    const long long phase_samples = std::max<long long>(samples / 10, 10'000);
    for (int n = 1; n <= 3; ++n) {
        const std::size_t dim = static_cast<std::size_t>(n) + 1;
        const std::size_t tuples = dim * dim * dim * dim;
        std::vector<double> re_sum(tuples, 0.0), re_sq(tuples, 0.0);
        std::vector<double> im_sum(tuples, 0.0), im_sq(tuples, 0.0);
        Rng rng(derive_subseed(seed, stream++));
        std::vector<Complex> unit(dim);
        for (long long s = 0; s < phase_samples; ++s) {
            unit[0] = Complex(1.0, 0.0);
            for (std::size_t i = 1; i < dim; ++i) {
                unit[i] = std::polar(1.0, rng.uniform(2.0 * std::numbers::pi));
            }
            std::size_t t = 0;
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    const Complex ij = unit[i] * unit[j];
                    for (std::size_t k = 0; k < dim; ++k) {
                        const Complex ijk = ij * std::conj(unit[k]);
                        for (std::size_t l = 0; l < dim; ++l, ++t) {
                            const Complex value = ijk * std::conj(unit[l]);
                            re_sum[t] += value.real();
                            re_sq[t] += value.real() * value.real();
                            im_sum[t] += value.imag();
                            im_sq[t] += value.imag() * value.imag();
                        }
                    }
                }
            }
        }
        double worst = 0.0;
        int beyond_band = 0;
        int scored = 0;
        std::size_t t = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                for (std::size_t k = 0; k < dim; ++k) {
                    for (std::size_t l = 0; l < dim; ++l, ++t) {
                        const double target = phase_average_tensor(
                            static_cast<int>(i), static_cast<int>(j), static_cast<int>(k),
                            static_cast<int>(l));
                        const auto score = [&](double sum, double sum_sq, double goal) {
                            const double mean = sum / static_cast<double>(phase_samples);
                            const double variance = std::max(
                                0.0,
                                (sum_sq - static_cast<double>(phase_samples) * mean * mean) /
                                    static_cast<double>(phase_samples - 1));
                            // Floor keeps constant tuples (variance is rounding
                            // noise) from producing spurious huge z-scores.
                            const double se = std::max(
                                std::sqrt(variance / static_cast<double>(phase_samples)), 1e-12);
                            return std::abs(mean - goal) / se;
                        };
                        for (const double z : {score(re_sum[t], re_sq[t], target),
                                               score(im_sum[t], im_sq[t], 0.0)}) {
                            worst = std::max(worst, z);
                            ++scored;
                            if (z > 3.0) ++beyond_band;
                        }
                    }
                }
            }
        }
        // With hundreds of tuple estimates, a few marginal 3-se exceedances
        // are expected for arbitrary seeds (two-sided rate 0.27%); allow that
        // many, but no gross outlier. At the fixed default seed and sample
        // count every estimate sits inside the band.
        const double expected_beyond = 0.0027 * scored;
        const double allowance =
            std::ceil(expected_beyond + 5.0 * std::sqrt(std::max(expected_beyond, 1.0)));
        report.checks.push_back(detail::make_check(
            "N = " + std::to_string(n) + ": phase-average estimates beyond 3 se (" +
                std::to_string(scored) + " tuples)",
            static_cast<double>(beyond_band), allowance, "count"));
        report.checks.push_back(detail::make_check(
            "N = " + std::to_string(n) + ": empirical phase average vs tensor, max z", worst,
            5.0, "z"));
    }
    return report;
}

/// Monte Carlo entanglement power for qubit inputs against the closed form
/// (3/64)(1 - p^2)(13 + 9 p^2) at p in {0, 0.3, 0.5, 0.8}.
inline VerifyReport verify_power(std::uint64_t seed = 0, long long samples = 1'000'000,
                                 int workers = 1) {
    VerifyReport report;
    report.suite = "power";
    const double per_values[] = {0.0, 0.3, 0.5, 0.8};
    std::uint64_t stream = 0;
    for (const double per_value : per_values) {
        const BeamSplitter bs = BeamSplitter::from_permanent(per_value);
        const McEstimate estimate = entanglement_power_mc(
            bs.unitary(), 1, samples, derive_subseed(seed, stream++), workers);
        const double analytic = qubit_power_analytic(per_value);
        const double z = std::abs(estimate.mean - analytic) / estimate.std_error;
        report.checks.push_back(detail::make_check(
            "per = " + std::to_string(per_value) + ": MC mean vs closed form, z", z, 3.0,
            "3se"));
    }
    return report;
}

}  // namespace focknet
