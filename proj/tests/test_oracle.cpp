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

#include <cmath>
#include <complex>
#include <numbers>

#include "focknet/entanglement.hpp"
#include "focknet/oracle.hpp"
#include "focknet/permanent.hpp"
#include "focknet/transform.hpp"
#include "test_helpers.hpp"

using namespace focknet;
using focknet::testing::close_rel;
using focknet::testing::occupations_with_total;

TEST_CASE("enumerate_tables", "[oracle]") {
    SECTION("one photon in the first of two modes") {
        const auto tables = enumerate_tables(OccupationVector{1, 0});
        REQUIRE(tables.size() == 2);
        CHECK(tables[0].cells() == std::vector<int>{1, 0, 0, 0});
        CHECK(tables[1].cells() == std::vector<int>{0, 1, 0, 0});
    }

    SECTION("vacuum gives the single zero table") {
        const auto tables = enumerate_tables(OccupationVector{0, 0, 0});
        REQUIRE(tables.size() == 1);
        CHECK(tables[0].cells() == std::vector<int>(9, 0));
    }

    SECTION("|11> on two modes gives four tables") {
        CHECK(enumerate_tables(OccupationVector{1, 1}).size() == 4);
    }

    SECTION("counts match the product of row combinations") {
        const OccupationVector in{2, 1, 3};
        Uint128 expected = 1;
        for (std::size_t i = 0; i < in.size(); ++i) expected *= binomial(in[i] + 2, in[i]);
        CHECK(enumerate_tables(in).size() == static_cast<std::size_t>(expected));
    }

    SECTION("row sums are the input occupations") {
        const OccupationVector in{2, 0, 1};
        for (const ContingencyTable& table : enumerate_tables(in)) {
            for (std::size_t i = 0; i < in.size(); ++i) CHECK(table.row_sum(i) == in[i]);
        }
    }
}

TEST_CASE("oracle_transform on fixed networks", "[oracle]") {
    SECTION("identity network is the identity") {
        const FockStateVector out =
            oracle_transform(UnitaryMatrix::identity(2), OccupationVector{2, 1});
        REQUIRE(out.term_count() == 1);
        CHECK(close_rel(out.amplitude({2, 1}), Complex(1.0, 0.0), 1e-13));
    }

    SECTION("beam splitter |11> output") {
        const BeamSplitter bs = BeamSplitter::from_magnitude(0.77, 0.25, -1.3);
        const Complex t = bs.transmittivity();
        const Complex r = bs.reflectivity();
        const FockStateVector out = oracle_transform(bs.unitary(), OccupationVector{1, 1});
        CHECK(close_rel(out.amplitude({2, 0}), std::numbers::sqrt2 * t * r, 1e-13));
        CHECK(close_rel(out.amplitude({0, 2}),
                        -std::numbers::sqrt2 * std::conj(t) * std::conj(r), 1e-13));
        CHECK(close_rel(out.amplitude({1, 1}), Complex(std::norm(t) - std::norm(r), 0.0),
                        1e-13));
        CHECK(std::abs(out.norm_squared() - 1.0) <= 1e-12);
    }

    SECTION("single photons in every mode recover the permanent") {
        const UnitaryMatrix u = haar_random_unitary(3, std::uint64_t{41});
        const FockStateVector out = oracle_transform(u, OccupationVector{1, 1, 1});
        CHECK(std::abs(out.amplitude({1, 1, 1}) - per_ryser(u.matrix())) <= 1e-12);
    }

    SECTION("photon cap") {
        CHECK_THROWS_AS(oracle_transform(UnitaryMatrix::identity(2), OccupationVector{11, 0}),
                        EnumerationTooLarge);
    }
}

TEST_CASE("oracle_matrix_element", "[oracle]") {
    const UnitaryMatrix identity = UnitaryMatrix::identity(3);
    CHECK(oracle_matrix_element(identity, {1, 0, 2}, {1, 0, 2}) == Complex(1.0, 0.0));
    CHECK(oracle_matrix_element(identity, {1, 1, 0}, {1, 0, 2}) == Complex(0.0, 0.0));

    const BeamSplitter bs = BeamSplitter::from_magnitude(0.62, -0.8, 0.2);
    const UnitaryMatrix u = bs.unitary();
    CHECK(std::abs(oracle_matrix_element(u, {1, 1}, {2, 0}) -
                   matrix_element(u, {1, 1}, {2, 0})) <= 1e-12);
}

TEST_CASE("haar_random_unitary", "[oracle]") {
    SECTION("dim 1 is a phase") {
        const UnitaryMatrix u = haar_random_unitary(1, std::uint64_t{5});
        CHECK(std::abs(std::abs(u(0, 0)) - 1.0) <= 1e-12);
    }

    SECTION("deterministic in (dim, seed)") {
        const UnitaryMatrix a = haar_random_unitary(4, std::uint64_t{77});
        const UnitaryMatrix b = haar_random_unitary(4, std::uint64_t{77});
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(a(i, j) == b(i, j));
    }

    SECTION("passes the unitarity gate for a range of seeds") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const UnitaryMatrix u = haar_random_unitary(4, seed);
            CHECK(u.matrix().unitarity_defect() <= 1e-10);
        }
    }

    SECTION("rejects dim 0") {
        CHECK_THROWS_AS(haar_random_unitary(0, std::uint64_t{1}), OutOfRange);
    }
}

TEST_CASE("oracle and permanent paths coincide", "[oracle][property]") {
    Rng rng(50);
    for (int modes = 1; modes <= 3; ++modes) {
        for (int rep = 0; rep < 4; ++rep) {
            const UnitaryMatrix u = haar_random_unitary(static_cast<std::size_t>(modes), rng);
            for (int n = 0; n <= 4; ++n) {
                for (const OccupationVector& in : occupations_with_total(n, modes)) {
                    const FockStateVector fast = transform_state(u, in);
                    const FockStateVector slow = oracle_transform(u, in);
                    CHECK(std::abs(slow.norm_squared() - 1.0) <= 1e-10);
                    for (const auto& [occ, amp] : slow.amplitudes()) {
                        CHECK(std::abs(fast.amplitude(occ) - amp) <= 1e-10);
                    }
                    for (const auto& [occ, amp] : fast.amplitudes()) {
                        CHECK(std::abs(slow.amplitude(occ) - amp) <= 1e-10);
                    }
                }
            }
        }
    }
}
