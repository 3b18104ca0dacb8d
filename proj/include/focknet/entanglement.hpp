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
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "focknet/combinatorics.hpp"
#include "focknet/errors.hpp"
#include "focknet/fock_state.hpp"
#include "focknet/matrix.hpp"
#include "focknet/permanent.hpp"
#include "focknet/random.hpp"
#include "focknet/transform.hpp"

namespace focknet {

inline constexpr double kBeamSplitterTolerance = 1e-12;

/// States fed to linear_entropy must be normalized to within this.
inline constexpr double kStateNormTolerance = 1e-8;

/// Two-mode beam splitter with complex transmittivity T and reflectivity R,
/// |T|^2 + |R|^2 = 1. The associated unitary is [[T, R], [-R*, T*]], whose
/// permanent is |T|^2 - |R|^2.
class BeamSplitter {
public:
    BeamSplitter(Complex transmittivity, Complex reflectivity)
        : t_(transmittivity), r_(reflectivity) {
        if (std::abs(std::norm(t_) + std::norm(r_) - 1.0) > kBeamSplitterTolerance) {
            throw NotNormalized("BeamSplitter: |T|^2 + |R|^2 must equal 1");
        }
    }

    static BeamSplitter from_magnitude(double abs_t, double phase_t = 0.0, double phase_r = 0.0) {
        if (abs_t < 0.0 || abs_t > 1.0) {
            throw OutOfRange("BeamSplitter: |T| must lie in [0, 1]");
        }
        const double abs_r = std::sqrt(std::max(0.0, 1.0 - abs_t * abs_t));
        return BeamSplitter(std::polar(abs_t, phase_t), std::polar(abs_r, phase_r));
    }

    /// Real beam splitter with the requested permanent |T|^2 - |R|^2.
    static BeamSplitter from_permanent(double per_value) {
        if (std::abs(per_value) > 1.0) {
            throw OutOfRange("BeamSplitter: permanent must lie in [-1, 1]");
        }
        return BeamSplitter(std::sqrt((1.0 + per_value) / 2.0),
                            std::sqrt((1.0 - per_value) / 2.0));
    }

    static BeamSplitter balanced() { return from_permanent(0.0); }

    Complex transmittivity() const { return t_; }
    Complex reflectivity() const { return r_; }

    UnitaryMatrix unitary() const {
        return UnitaryMatrix(
            ComplexMatrix{{t_, r_}, {-std::conj(r_), std::conj(t_)}});
    }

    double permanent() const { return std::norm(t_) - std::norm(r_); }

private:
    Complex t_;
    Complex r_;
};

/// Coefficients (c, d) of a bipartite product input sum c_{n1} d_{n2}
/// |n1, n2>, each party an (N+1)-dimensional unit vector whose first
/// coefficient carries no phase.
class ProductStateCoefficients {
public:
    ProductStateCoefficients(std::vector<Complex> c, std::vector<Complex> d)
        : c_(std::move(c)), d_(std::move(d)) {
        if (c_.size() != d_.size() || c_.size() < 2) {
            throw DimensionMismatch(
                "ProductStateCoefficients: parties must share a dimension >= 2");
        }
        validate_party(c_);
        validate_party(d_);
    }

    int dim_minus_one() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Complex>& first_party() const { return c_; }
    const std::vector<Complex>& second_party() const { return d_; }

    /// The joint two-mode state sum_{n1,n2} c_{n1} d_{n2} |n1, n2>.
    FockStateVector joint_state() const {
        FockStateVector state(2);
        for (std::size_t n1 = 0; n1 < c_.size(); ++n1) {
            for (std::size_t n2 = 0; n2 < d_.size(); ++n2) {
                state.add(OccupationVector{static_cast<int>(n1), static_cast<int>(n2)},
                          c_[n1] * d_[n2]);
            }
        }
        return state;
    }

private:
    static void validate_party(const std::vector<Complex>& party) {
        double norm2 = 0.0;
        for (const Complex& v : party) norm2 += std::norm(v);
        if (std::abs(norm2 - 1.0) > kBeamSplitterTolerance) {
            throw NotNormalized("ProductStateCoefficients: party norm must be 1");
        }
        // phase convention: the overall phase is absorbed into the state, so
        // the first coefficient is real and non-negative
        const Complex& head = party.front();
        if (std::abs(head.imag()) > kBeamSplitterTolerance || head.real() < -kBeamSplitterTolerance) {
            throw OutOfRange("ProductStateCoefficients: first coefficient must carry zero phase");
        }
    }

    std::vector<Complex> c_;
    std::vector<Complex> d_;
};

/// Linear entropy L = 2 (1 - Tr rho_1^2) of a normalized two-mode pure
/// state, with rho_1 the reduced state of mode 1. Zero for product states,
/// approaching 2 only for infinitely many equal Schmidt terms.
inline double linear_entropy(const FockStateVector& state) {
    if (state.modes() != 2) {
        throw DimensionMismatch("linear_entropy: expects a two-mode state");
    }
    if (std::abs(state.norm_squared() - 1.0) > kStateNormTolerance) {
        throw NotNormalized("linear_entropy: state norm^2 must be 1");
    }

    int max_k1 = 0;
    int max_k2 = 0;
    for (const auto& [occ, amp] : state.amplitudes()) {
        max_k1 = std::max(max_k1, occ[0]);
        max_k2 = std::max(max_k2, occ[1]);
    }
    std::vector<std::vector<Complex>> a(static_cast<std::size_t>(max_k1) + 1,
                                        std::vector<Complex>(static_cast<std::size_t>(max_k2) + 1,
                                                             Complex(0.0, 0.0)));
    for (const auto& [occ, amp] : state.amplitudes()) {
        a[static_cast<std::size_t>(occ[0])][static_cast<std::size_t>(occ[1])] = amp;
    }

    double purity = 0.0;
    for (int k1 = 0; k1 <= max_k1; ++k1) {
        for (int k1p = 0; k1p <= max_k1; ++k1p) {
            Complex rho(0.0, 0.0);
            for (int k2 = 0; k2 <= max_k2; ++k2) {
                rho += a[static_cast<std::size_t>(k1)][static_cast<std::size_t>(k2)] *
                       std::conj(a[static_cast<std::size_t>(k1p)][static_cast<std::size_t>(k2)]);
            }
            purity += std::norm(rho);
        }
    }
    return 2.0 * (1.0 - purity);
}

/// Output of a beam splitter on the qubit product input
/// (c0|0> + c1|1>)(d0|0> + d1|1>), written out term by term:
///
///   c0 d0 |00> + (c0 d1 R + c1 d0 T)|10> + (c0 d1 T* - c1 d0 R*)|01>
///   + c1 d1 [ sqrt(2) T R |20> - sqrt(2) T* R* |02> + (|T|^2 - |R|^2)|11> ].
inline FockStateVector qubit_output_state(const ProductStateCoefficients& coeffs,
                                          const BeamSplitter& bs) {
    if (coeffs.dim_minus_one() != 1) {
        throw DimensionMismatch("qubit_output_state: expects qubit (N = 1) coefficients");
    }
    const Complex c0 = coeffs.first_party()[0];
    const Complex c1 = coeffs.first_party()[1];
    const Complex d0 = coeffs.second_party()[0];
    const Complex d1 = coeffs.second_party()[1];
    const Complex t = bs.transmittivity();
    const Complex r = bs.reflectivity();
    const double root2 = std::numbers::sqrt2;

    FockStateVector state(2);
    state.add({0, 0}, c0 * d0);
    state.add({1, 0}, c0 * d1 * r + c1 * d0 * t);
    state.add({0, 1}, c0 * d1 * std::conj(t) - c1 * d0 * std::conj(r));
    state.add({2, 0}, c1 * d1 * root2 * t * r);
    state.add({0, 2}, -c1 * d1 * root2 * std::conj(t) * std::conj(r));
    state.add({1, 1}, c1 * d1 * (std::norm(t) - std::norm(r)));
    state.prune();
    return state;
}

/// Closed-form entanglement power of a beam splitter on qubit inputs as a
/// function of its permanent p = |T|^2 - |R|^2:
///
///   P(p) = (3/64) (1 - p^2) (13 + 9 p^2).
///
/// Maximal at the balanced splitter, P(0) = 39/64; zero at p = +-1 where the
/// beams do not mix.
inline double qubit_power_analytic(double per_value) {
    if (std::abs(per_value) > 1.0) {
        throw OutOfRange("qubit_power_analytic: permanent must lie in [-1, 1]");
    }
    const double p2 = per_value * per_value;
    return (3.0 / 64.0) * (1.0 - p2) * (13.0 + 9.0 * p2);
}

/// Same quantity computed from a beam splitter; depends on T and R only
/// through the permanent, so all phases drop out.
inline double averaged_power_analytic_qubit(const BeamSplitter& bs) {
    return qubit_power_analytic(std::clamp(bs.permanent(), -1.0, 1.0));
}

namespace detail {

/// Integral of sin^p over [0, theta], by the power-reduction recurrence
/// I_p = (-cos(theta) sin^{p-1}(theta) + (p-1) I_{p-2}) / p.
inline double sin_power_integral(int p, double theta) {
    if (p == 0) return theta;
    if (p == 1) return 1.0 - std::cos(theta);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    double two_below = theta;         // I_0
    double one_below = 1.0 - c;       // I_1
    double s_pow = s;                 // sin^{k-1} for k = 2
    double current = one_below;
    for (int k = 2; k <= p; ++k) {
        current = (-c * s_pow + (k - 1) * two_below) / k;
        two_below = one_below;
        one_below = current;
        s_pow *= s;
    }
    return current;
}

/// Draw an angle on [0, pi/2] with density proportional to sin^p. The CDF is
/// inverted in closed form for p <= 1 and by bisection to 1e-12 otherwise.
inline double sample_sin_power_angle(int p, Rng& rng) {
    const double u = rng.uniform();
    const double half_pi = std::numbers::pi / 2.0;
    if (p == 0) return u * half_pi;
    if (p == 1) return std::acos(1.0 - u);

    const double target = u * sin_power_integral(p, half_pi);
    double lo = 0.0;
    double hi = half_pi;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (sin_power_integral(p, mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// One party's coefficient vector (c_0, ..., c_N) drawn from the
/// hyperspherical measure: angles Theta_k on [0, pi/2] with density
/// proportional to sin^{N-k}, phases phi_1..phi_N uniform, phi_0 = 0, and
///
///   c_i = e^{i phi_i} cos(Theta_{i+1}) prod_{j<=i} sin(Theta_j),
///
/// with Theta_{N+1} = 0. The result is unit-norm by construction.
inline std::vector<Complex> sample_product_state(int dim_minus_one, Rng& rng) {
    const int n = dim_minus_one;
    if (n < 1) throw OutOfRange("sample_product_state: dimension N must be >= 1");

    std::vector<double> theta(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        theta[static_cast<std::size_t>(k - 1)] = detail::sample_sin_power_angle(n - k, rng);
    }
    std::vector<double> phi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) phi[static_cast<std::size_t>(i)] = rng.uniform(2.0 * std::numbers::pi);

    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
    double sin_running = 1.0;
    for (int i = 0; i <= n; ++i) {
        const double cos_term = (i < n) ? std::cos(theta[static_cast<std::size_t>(i)]) : 1.0;
        const double magnitude = sin_running * cos_term;
        coeffs[static_cast<std::size_t>(i)] =
            (i == 0) ? Complex(magnitude, 0.0)
                     : std::polar(magnitude, phi[static_cast<std::size_t>(i - 1)]);
        if (i < n) sin_running *= std::sin(theta[static_cast<std::size_t>(i)]);
    }
    return coeffs;
}

/// Seeded variant; deterministic in (dim_minus_one, seed).
inline std::vector<Complex> sample_product_state(int dim_minus_one, std::uint64_t seed) {
    Rng rng(seed);
    return sample_product_state(dim_minus_one, rng);
}

/// Average over the phase angles of c_i* c_j* c_k c_l with phi_0 fixed to 0:
/// (delta_ik delta_jl + delta_il delta_jk)(1 - delta_ij / 2).
inline double phase_average_tensor(int i, int j, int k, int l) {
    if (i < 0 || j < 0 || k < 0 || l < 0) {
        throw OutOfRange("phase_average_tensor: indices must be non-negative");
    }
    const double d_ik = (i == k) ? 1.0 : 0.0;
    const double d_jl = (j == l) ? 1.0 : 0.0;
    const double d_il = (i == l) ? 1.0 : 0.0;
    const double d_jk = (j == k) ? 1.0 : 0.0;
    const double d_ij = (i == j) ? 1.0 : 0.0;
    return (d_ik * d_jl + d_il * d_jk) * (1.0 - 0.5 * d_ij);
}

/// Sphere-surface moments of the coefficient magnitudes.
struct AmplitudeMoments {
    double quartic;  ///< E |c_i|^4   = 3 / ((N+1)(N+3))
    double cross;    ///< E |c_i|^2 |c_j|^2 = 1 / ((N+1)(N+3)),  i != j
};

inline AmplitudeMoments amplitude_moments(int dim_minus_one) {
    if (dim_minus_one < 1) throw OutOfRange("amplitude_moments: N must be >= 1");
    const double denom =
        static_cast<double>(dim_minus_one + 1) * static_cast<double>(dim_minus_one + 3);
    return AmplitudeMoments{3.0 / denom, 1.0 / denom};
}

/// Full group-averaged coefficient moment
///
///   E[c_i* c_j* c_k c_l] = (delta_ik delta_jl + delta_il delta_jk)
///                          (1 + delta_ij / 2) / ((N+1)(N+3)),
///
/// the product of the phase average and the sphere-surface magnitude moments.
inline double coefficient_moment(int i, int j, int k, int l, int dim_minus_one) {
    if (dim_minus_one < 1) throw OutOfRange("coefficient_moment: N must be >= 1");
    if (i < 0 || j < 0 || k < 0 || l < 0 || i > dim_minus_one || j > dim_minus_one ||
        k > dim_minus_one || l > dim_minus_one) {
        throw OutOfRange("coefficient_moment: indices must lie in 0..N");
    }
    const double d_ik = (i == k) ? 1.0 : 0.0;
    const double d_jl = (j == l) ? 1.0 : 0.0;
    const double d_il = (i == l) ? 1.0 : 0.0;
    const double d_jk = (j == k) ? 1.0 : 0.0;
    const double d_ij = (i == j) ? 1.0 : 0.0;
    const double denom =
        static_cast<double>(dim_minus_one + 1) * static_cast<double>(dim_minus_one + 3);
    return (d_ik * d_jl + d_il * d_jk) * (1.0 + 0.5 * d_ij) / denom;
}

/// Reduced-state purity Tr rho_1^2 of the beam-splitter output on a product
/// input, assembled entirely from permanent-form matrix elements
///
///   A(k1, k2) = sum_{n1 + n2 = k1 + k2} c_{n1} d_{n2}
///               (k1! k2! n1! n2!)^{-1/2}
///               per Lambda[(1^{k1}, 2^{k2}) | (1^{n1}, 2^{n2})],
///
/// then Tr rho_1^2 = sum |sum_{k2} A(k1, k2) A*(k1', k2)|^2. Photon-number
/// conservation restricts every sum exactly as the Kronecker deltas demand.
inline double purity_via_permanents(const ProductStateCoefficients& coeffs,
                                    const BeamSplitter& bs) {
    const int n = coeffs.dim_minus_one();
    const int max_total = 2 * n;
    if (static_cast<std::size_t>(max_total) > kExactDimCap) {
        throw DimensionTooLarge("purity_via_permanents: photon total exceeds permanent cap");
    }
    const ComplexMatrix lambda = bs.unitary().matrix();
    const std::vector<Complex>& c = coeffs.first_party();
    const std::vector<Complex>& d = coeffs.second_party();

    const std::size_t side = static_cast<std::size_t>(max_total) + 1;
    std::vector<Complex> table(side * side, Complex(0.0, 0.0));
    for (int k1 = 0; k1 <= max_total; ++k1) {
        for (int k2 = 0; k2 + k1 <= max_total; ++k2) {
            const int total = k1 + k2;
            Complex element(0.0, 0.0);
            for (int n1 = std::max(0, total - n); n1 <= std::min(n, total); ++n1) {
                const int n2 = total - n1;
                const Complex weight = c[static_cast<std::size_t>(n1)] *
                                       d[static_cast<std::size_t>(n2)];
                if (weight == Complex(0.0, 0.0)) continue;
                const Complex permanent = per_repeated(lambda, OccupationVector{k1, k2},
                                                       OccupationVector{n1, n2});
                const double normalization = std::sqrt(
                    factorial_as_double(k1) * factorial_as_double(k2) *
                    factorial_as_double(n1) * factorial_as_double(n2));
                element += weight * permanent / normalization;
            }
            table[static_cast<std::size_t>(k1) * side + static_cast<std::size_t>(k2)] = element;
        }
    }

    double purity = 0.0;
    for (int k1 = 0; k1 <= max_total; ++k1) {
        for (int k1p = 0; k1p <= max_total; ++k1p) {
            Complex rho(0.0, 0.0);
            const int k2_max = max_total - std::max(k1, k1p);
            for (int k2 = 0; k2 <= k2_max; ++k2) {
                rho += table[static_cast<std::size_t>(k1) * side + static_cast<std::size_t>(k2)] *
                       std::conj(table[static_cast<std::size_t>(k1p) * side +
                                       static_cast<std::size_t>(k2)]);
            }
            purity += std::norm(rho);
        }
    }
    return purity;
}

/// Monte Carlo estimate of an averaged quantity.
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long long samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
};

/// Single-draw linear entropy: transform the product input through the
/// network and measure the output's entanglement. The Monte Carlo estimator
/// averages exactly this quantity (via a linear-combination fast path).
inline double entanglement_power_sample(const UnitaryMatrix& u, const std::vector<Complex>& c,
                                        const std::vector<Complex>& d) {
    if (u.dim() != 2) {
        throw DimensionMismatch("entanglement_power_sample: expects a two-mode network");
    }
    if (c.size() != d.size() || c.size() < 2) {
        throw DimensionMismatch("entanglement_power_sample: parties must share a dimension >= 2");
    }
    FockStateVector input(2);
    for (std::size_t n1 = 0; n1 < c.size(); ++n1) {
        for (std::size_t n2 = 0; n2 < d.size(); ++n2) {
            input.add(OccupationVector{static_cast<int>(n1), static_cast<int>(n2)},
                      c[n1] * d[n2]);
        }
    }
    return linear_entropy(transform_superposition(u, input));
}

namespace detail {

/// Transforms of all (N+1)^2 product basis states |n1, n2>, flattened onto a
/// dense (2N+1) x (2N+1) output grid. Sampling then only linear-combines.
struct BasisTransforms {
    int dim_minus_one;
    std::size_t side;  // 2N + 1
    std::vector<std::vector<Complex>> amplitudes;  // [(n1*(N+1)+n2)][k1*side+k2]

    BasisTransforms(const UnitaryMatrix& u, int n) : dim_minus_one(n) {
        side = static_cast<std::size_t>(2 * n) + 1;
        const std::size_t parties = static_cast<std::size_t>(n) + 1;
        amplitudes.resize(parties * parties,
                          std::vector<Complex>(side * side, Complex(0.0, 0.0)));
        for (int n1 = 0; n1 <= n; ++n1) {
            for (int n2 = 0; n2 <= n; ++n2) {
                auto& grid = amplitudes[static_cast<std::size_t>(n1) * parties +
                                        static_cast<std::size_t>(n2)];
                const FockStateVector out = transform_state(u, OccupationVector{n1, n2});
                for (const auto& [occ, amp] : out.amplitudes()) {
                    grid[static_cast<std::size_t>(occ[0]) * side +
                         static_cast<std::size_t>(occ[1])] = amp;
                }
            }
        }
    }

    double sample_linear_entropy(const std::vector<Complex>& c, const std::vector<Complex>& d,
                                 std::vector<Complex>& scratch) const {
        const std::size_t parties = static_cast<std::size_t>(dim_minus_one) + 1;
        std::fill(scratch.begin(), scratch.end(), Complex(0.0, 0.0));
        for (std::size_t n1 = 0; n1 < parties; ++n1) {
            for (std::size_t n2 = 0; n2 < parties; ++n2) {
                const Complex weight = c[n1] * d[n2];
                const auto& grid = amplitudes[n1 * parties + n2];
                for (std::size_t k = 0; k < grid.size(); ++k) scratch[k] += weight * grid[k];
            }
        }
        double purity = 0.0;
        for (std::size_t k1 = 0; k1 < side; ++k1) {
            for (std::size_t k1p = 0; k1p < side; ++k1p) {
                Complex rho(0.0, 0.0);
                for (std::size_t k2 = 0; k2 < side; ++k2) {
                    rho += scratch[k1 * side + k2] * std::conj(scratch[k1p * side + k2]);
                }
                purity += std::norm(rho);
            }
        }
        return 2.0 * (1.0 - purity);
    }
};

}  // namespace detail

/// Monte Carlo entanglement power: the linear entropy of U|psi1, psi2>
/// averaged over hyperspherical draws of both parties. Samples are split
/// across `workers` threads, each with a sub-seed derived from (seed, worker
/// index), and partial sums are combined in worker order, so a given
/// (samples, seed, workers) triple always reproduces bit-identically.
inline McEstimate entanglement_power_mc(const UnitaryMatrix& u, int dim_minus_one,
                                        long long samples, std::uint64_t seed, int workers = 1) {
    if (u.dim() != 2) {
        throw DimensionMismatch("entanglement_power_mc: expects a two-mode network");
    }
    if (dim_minus_one < 1) throw OutOfRange("entanglement_power_mc: N must be >= 1");
    if (samples < 1000) throw OutOfRange("entanglement_power_mc: need at least 1000 samples");
    if (workers < 1) workers = 1;
    if (static_cast<long long>(workers) > samples) workers = static_cast<int>(samples);

    const detail::BasisTransforms basis(u, dim_minus_one);

    std::vector<double> sums(static_cast<std::size_t>(workers), 0.0);
    std::vector<double> square_sums(static_cast<std::size_t>(workers), 0.0);
    const long long base = samples / workers;
    const long long leftover = samples % workers;

    auto run_worker = [&](int worker) {
        const long long quota = base + (worker < leftover ? 1 : 0);
        Rng rng(derive_subseed(seed, static_cast<std::uint64_t>(worker)));
        std::vector<Complex> scratch(basis.side * basis.side);
        double sum = 0.0;
        double square_sum = 0.0;
        for (long long s = 0; s < quota; ++s) {
            const std::vector<Complex> c = sample_product_state(dim_minus_one, rng);
            const std::vector<Complex> d = sample_product_state(dim_minus_one, rng);
            const double value = basis.sample_linear_entropy(c, d, scratch);
            sum += value;
            square_sum += value * value;
        }
        sums[static_cast<std::size_t>(worker)] = sum;
        square_sums[static_cast<std::size_t>(worker)] = square_sum;
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
        for (auto& t : threads) t.join();
    }

    double total = 0.0;
    double total_squares = 0.0;
    for (int w = 0; w < workers; ++w) {
        total += sums[static_cast<std::size_t>(w)];
        total_squares += square_sums[static_cast<std::size_t>(w)];
    }
    const double mean = total / static_cast<double>(samples);
    const double variance =
        std::max(0.0, (total_squares - static_cast<double>(samples) * mean * mean) /
                          static_cast<double>(samples - 1));
    McEstimate estimate;
    estimate.mean = mean;
    estimate.std_error = std::sqrt(variance / static_cast<double>(samples));
    estimate.samples = samples;
    estimate.seed = seed;
    estimate.workers = workers;
    return estimate;
}

}  // namespace focknet
