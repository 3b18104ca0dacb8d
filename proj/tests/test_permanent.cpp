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

#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "focknet/oracle.hpp"
#include "focknet/permanent.hpp"
#include "test_helpers.hpp"

using namespace focknet;
using focknet::testing::close_rel;
using focknet::testing::random_complex_matrix;
using focknet::testing::random_diagonal_matrix;
using focknet::testing::random_permutation_matrix;

namespace {

ComplexMatrix beam_splitter_matrix(Complex t, Complex r) {
    return ComplexMatrix{{t, r}, {-std::conj(r), std::conj(t)}};
}

}  // namespace

TEST_CASE("per_naive on small fixed matrices", "[permanent]") {
    CHECK(per_naive(ComplexMatrix::identity(2)) == Complex(1.0, 0.0));

    const Complex t(0.6, 0.3);
    const Complex r = std::sqrt(1.0 - std::norm(t)) * std::polar(1.0, 0.4);
    const Complex per = per_naive(beam_splitter_matrix(t, r));
    CHECK(close_rel(per, Complex(std::norm(t) - std::norm(r), 0.0), 1e-14));

    ComplexMatrix ones(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1.0;
    CHECK(close_rel(per_naive(ones), Complex(6.0, 0.0), 1e-14));

    CHECK(per_naive(ComplexMatrix(0)) == Complex(1.0, 0.0));
    CHECK_THROWS_AS(per_naive(ComplexMatrix(11)), DimensionTooLarge);
}

TEST_CASE("per_ryser agrees with the defining sum", "[permanent]") {
    CHECK(per_ryser(ComplexMatrix::identity(2)) == Complex(1.0, 0.0));
    CHECK(per_ryser(ComplexMatrix(0)) == Complex(1.0, 0.0));

    Rng rng(11);
    const ComplexMatrix m = random_complex_matrix(5, rng);
    CHECK(close_rel(per_ryser(m), per_naive(m)));

    CHECK_THROWS_AS(per_ryser(ComplexMatrix(25)), DimensionTooLarge);
}

TEST_CASE("per_glynn agrees with per_ryser", "[permanent]") {
    const Complex z(0.3, -1.7);
    CHECK(per_glynn(ComplexMatrix{{z}}) == z);

    const Complex t(0.5, -0.5);
    const Complex r = std::sqrt(1.0 - std::norm(t)) * std::polar(1.0, -1.1);
    CHECK(close_rel(per_glynn(beam_splitter_matrix(t, r)),
                    Complex(std::norm(t) - std::norm(r), 0.0), 1e-14));

    Rng rng(12);
    const ComplexMatrix m = random_complex_matrix(6, rng);
    CHECK(close_rel(per_glynn(m), per_ryser(m)));

    CHECK_THROWS_AS(per_glynn(ComplexMatrix(25)), DimensionTooLarge);
}

TEST_CASE("per_repeated expands multiplicities", "[permanent]") {
    const Complex t(0.8, 0.1);
    const Complex r = std::sqrt(1.0 - std::norm(t)) * std::polar(1.0, 0.9);
    const ComplexMatrix bs = beam_splitter_matrix(t, r);

    SECTION("unit multiplicities reproduce the plain permanent") {
        const Complex value = per_repeated(bs, {1, 1}, {1, 1});
        CHECK(close_rel(value, per_ryser(bs), 1e-14));
    }

    SECTION("repeated row gives 2 T R") {
        // rows (1,1): two copies of (T, R); per = TR + RT
        const Complex value = per_repeated(bs, {2, 0}, {1, 1});
        CHECK(close_rel(value, 2.0 * t * r, 1e-14));
    }

    SECTION("all-zero multiplicities give the empty matrix") {
        CHECK(per_repeated(bs, {0, 0}, {0, 0}) == Complex(1.0, 0.0));
    }

    SECTION("mismatched totals are rejected") {
        CHECK_THROWS_AS(per_repeated(bs, {2, 0}, {1, 0}), MultiplicityMismatch);
        CHECK_THROWS_AS(per_repeated(bs, OccupationVector{1}, OccupationVector{1}),
                        MultiplicityMismatch);
    }

    SECTION("expanded order beyond the cap is rejected") {
        CHECK_THROWS_AS(per_repeated(bs, {13, 13}, {13, 13}), DimensionTooLarge);
    }
}

TEST_CASE("permanent algorithms agree on random matrices", "[permanent][property]") {
    Rng rng(101);
    for (std::size_t n = 0; n <= 8; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            const ComplexMatrix m = random_complex_matrix(n, rng);
            const Complex reference = per_naive(m);
            CAPTURE(n, rep);
            CHECK(close_rel(reference, per_ryser(m)));
            CHECK(close_rel(reference, per_glynn(m)));
        }
    }
}

TEST_CASE("permanent is invariant under transposition", "[permanent][property]") {
    Rng rng(102);
    for (std::size_t n = 1; n <= 8; ++n) {
        const ComplexMatrix m = random_complex_matrix(n, rng);
        CHECK(close_rel(per_ryser(m), per_ryser(m.transpose())));
    }
}

TEST_CASE("permutation/diagonal factorization", "[permanent][property]") {
    // per(P A D) = per(P) per(A) per(D) with per(P) = 1, per(D) = prod d_ii;
    // the only product rule the permanent admits.
    Rng rng(103);
    for (std::size_t n = 1; n <= 6; ++n) {
        const ComplexMatrix a = random_complex_matrix(n, rng);
        const ComplexMatrix p = random_permutation_matrix(n, rng);
        const ComplexMatrix d = random_diagonal_matrix(n, rng);

        Complex diagonal_product(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) diagonal_product *= d(i, i);

        CHECK(close_rel(per_ryser(p), Complex(1.0, 0.0)));
        CHECK(close_rel(per_ryser(d), diagonal_product));
        CHECK(close_rel(per_ryser(p * a * d), per_ryser(a) * diagonal_product));
    }
}

TEST_CASE("permanent is linear in each row", "[permanent][property]") {
    Rng rng(104);
    for (std::size_t n = 2; n <= 6; ++n) {
        ComplexMatrix m = random_complex_matrix(n, rng);
        const std::size_t row = static_cast<std::size_t>(rng.uniform(static_cast<double>(n)));

        ComplexMatrix first = m;
        ComplexMatrix second = m;
        for (std::size_t j = 0; j < n; ++j) {
            const Complex split = rng.gaussian_complex();
            first(row, j) = split;
            second(row, j) = m(row, j) - split;
        }
        CHECK(close_rel(per_ryser(m), per_ryser(first) + per_ryser(second)));
    }
}

TEST_CASE("permanents of unitaries stay inside the unit disk", "[permanent][property]") {
    Rng rng(105);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t dim = 2 + static_cast<std::size_t>(rep % 5);
        const UnitaryMatrix u = haar_random_unitary(dim, rng);
        CHECK(std::abs(per_ryser(u.matrix())) <= 1.0 + 1e-10);
    }
}
