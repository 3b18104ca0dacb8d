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

// JSON encoding used by the CLI and result documents. Complex scalars are
// two-element arrays [re, im]; matrices are row-major arrays of rows of such
// pairs; occupations are plain integer arrays. Values round-trip at full
// double precision.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "focknet/combinatorics.hpp"
#include "focknet/entanglement.hpp"
#include "focknet/errors.hpp"
#include "focknet/fock_state.hpp"
#include "focknet/matrix.hpp"

namespace focknet::io {

using json = nlohmann::ordered_json;

inline json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidInput("expected a complex number as [re, im]");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

inline json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("expected a matrix as an array of rows");
    const std::size_t dim = j.size();
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != dim) {
            throw InvalidInput("matrix rows must all have length equal to the matrix order");
        }
        for (const auto& cell : row) entries.push_back(complex_from_json(cell));
    }
    return ComplexMatrix(dim, std::move(entries));
}

inline json occupation_to_json(const OccupationVector& occ) {
    json j = json::array();
    for (std::size_t i = 0; i < occ.size(); ++i) j.push_back(occ[i]);
    return j;
}

inline OccupationVector occupation_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("expected an occupation as an integer array");
    std::vector<int> counts;
    counts.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidInput("occupation entries must be integers");
        const std::int64_t value = v.get<std::int64_t>();
        if (value < 0) throw InvalidInput("occupation entries must be non-negative");
        counts.push_back(static_cast<int>(value));
    }
    return OccupationVector(std::move(counts));
}

/// Terms in lexicographic occupation order, each {"occupation", "amplitude"}.
inline json state_to_json(const FockStateVector& state) {
    json terms = json::array();
    for (const auto& [occ, amp] : state.amplitudes()) {
        json term;
        term["occupation"] = occupation_to_json(occ);
        term["amplitude"] = complex_to_json(amp);
        terms.push_back(std::move(term));
    }
    return terms;
}

/// Beam splitter from either {"T": [re,im], "R": [re,im]} or
/// {"abs_t": t, "phase_t": a, "phase_r": b} (phases optional, radians).
inline BeamSplitter beam_splitter_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("beam_splitter must be an object");
    if (j.contains("T") || j.contains("R")) {
        for (const auto& [key, value] : j.items()) {
            if (key != "T" && key != "R") {
                throw InvalidInput("beam_splitter: unexpected field '" + key + "'");
            }
        }
        if (!j.contains("T") || !j.contains("R")) {
            throw InvalidInput("beam_splitter: both T and R are required");
        }
        return BeamSplitter(complex_from_json(j["T"]), complex_from_json(j["R"]));
    }
    for (const auto& [key, value] : j.items()) {
        if (key != "abs_t" && key != "phase_t" && key != "phase_r") {
            throw InvalidInput("beam_splitter: unexpected field '" + key + "'");
        }
    }
    if (!j.contains("abs_t")) {
        throw InvalidInput("beam_splitter: need either (T, R) or abs_t with optional phases");
    }
    const double abs_t = j["abs_t"].get<double>();
    const double phase_t = j.value("phase_t", 0.0);
    const double phase_r = j.value("phase_r", 0.0);
    return BeamSplitter::from_magnitude(abs_t, phase_t, phase_r);
}

/// FNV-1a 64-bit digest of a canonical serialization; used to echo a
/// fingerprint of the inputs into result documents.
inline std::string digest(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    char buffer[2 + 16 + 1];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + buffer;
}

}  // namespace focknet::io
