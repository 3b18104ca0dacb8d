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

// Command-line front end: permanents, Fock-basis matrix elements, full state
// transforms, Monte Carlo entanglement power, and the seeded verification
// suites, all with JSON input/output.
//
// Exit codes: 0 success, 1 internal failure (or failed verify checks),
// 2 malformed input, 3 a size guard (dimension/enumeration cap) was hit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "focknet/focknet.hpp"
#include "focknet/json_io.hpp"
#include "focknet/verify.hpp"

namespace {

using focknet::io::json;

constexpr int kExitSuccess = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;

json load_input(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw focknet::InvalidInput("cannot open input file: " + path);
    json parsed;
    stream >> parsed;
    return parsed;
}

void reject_unknown_fields(const json& doc, const std::vector<std::string>& allowed) {
    if (!doc.is_object()) throw focknet::InvalidInput("input document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw focknet::InvalidInput("unexpected field '" + key + "' in input document");
        }
    }
}

const json& require_field(const json& doc, const std::string& key) {
    if (!doc.contains(key)) throw focknet::InvalidInput("missing required field '" + key + "'");
    return doc.at(key);
}

/// Network given either as a full unitary or beam-splitter parameters.
focknet::UnitaryMatrix network_from_document(const json& doc) {
    const bool has_unitary = doc.contains("unitary");
    const bool has_bs = doc.contains("beam_splitter");
    if (has_unitary == has_bs) {
        throw focknet::InvalidInput("provide exactly one of 'unitary' or 'beam_splitter'");
    }
    if (has_unitary) {
        return focknet::UnitaryMatrix(focknet::io::matrix_from_json(doc.at("unitary")));
    }
    return focknet::io::beam_splitter_from_json(doc.at("beam_splitter")).unitary();
}

/// Result skeleton: command echo, canonical input echo, and its digest.
json make_result(const std::string& command, json inputs) {
    json result;
    result["command"] = command;
    result["input_digest"] = focknet::io::digest(inputs.dump());
    result["inputs"] = std::move(inputs);
    return result;
}

void emit(const json& result, const std::string& output_path) {
    const std::string text = result.dump(2) + "\n";
    if (output_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream stream(output_path, std::ios::binary);
    if (!stream) throw focknet::InvalidInput("cannot open output file: " + output_path);
    stream << text;
}

struct PerOptions {
    std::string input_path;
    std::string output_path;
    std::string algorithm = "ryser";
    std::size_t max_naive_dim = focknet::kNaiveDimCap;
    std::size_t max_exact_dim = focknet::kExactDimCap;
};

int run_per(const PerOptions& opt) {
    if (opt.max_naive_dim > focknet::kNaiveDimCap) {
        std::fprintf(stderr,
                     "warning: --max-naive-dim raised above the default %zu; "
                     "the naive sum grows factorially\n",
                     focknet::kNaiveDimCap);
    }
    if (opt.max_exact_dim > focknet::kExactDimCap) {
        std::fprintf(stderr,
                     "warning: --max-exact-dim raised above the default %zu; "
                     "run time doubles with every row\n",
                     focknet::kExactDimCap);
    }
    const json doc = load_input(opt.input_path);
    reject_unknown_fields(doc, {"matrix", "row_mult", "col_mult"});
    focknet::ComplexMatrix matrix = focknet::io::matrix_from_json(require_field(doc, "matrix"));
    if (doc.contains("row_mult") != doc.contains("col_mult")) {
        throw focknet::InvalidInput("row_mult and col_mult must be given together");
    }

    json inputs;
    inputs["matrix"] = focknet::io::matrix_to_json(matrix);
    if (doc.contains("row_mult")) {
        const auto row_mult = focknet::io::occupation_from_json(doc.at("row_mult"));
        const auto col_mult = focknet::io::occupation_from_json(doc.at("col_mult"));
        inputs["row_mult"] = focknet::io::occupation_to_json(row_mult);
        inputs["col_mult"] = focknet::io::occupation_to_json(col_mult);
        if (row_mult.size() != matrix.dim() || col_mult.size() != matrix.dim()) {
            throw focknet::MultiplicityMismatch("multiplicity length must equal matrix order");
        }
        if (row_mult.total() != col_mult.total()) {
            throw focknet::MultiplicityMismatch("row and column multiplicity totals differ");
        }
        matrix = focknet::build_submatrix(matrix, row_mult, col_mult);
    }
    inputs["algorithm"] = opt.algorithm;

    focknet::Complex value;
    if (opt.algorithm == "naive") {
        value = focknet::per_naive(matrix, opt.max_naive_dim);
    } else if (opt.algorithm == "ryser") {
        value = focknet::per_ryser(matrix, opt.max_exact_dim);
    } else if (opt.algorithm == "glynn") {
        value = focknet::per_glynn(matrix, opt.max_exact_dim);
    } else {
        throw focknet::InvalidInput("unknown algorithm '" + opt.algorithm + "'");
    }

    json result = make_result("per", std::move(inputs));
    result["results"]["order"] = matrix.dim();
    result["results"]["permanent"] = focknet::io::complex_to_json(value);
    emit(result, opt.output_path);
    return kExitSuccess;
}

struct MatelemOptions {
    std::string input_path;
    std::string output_path;
    std::size_t max_photons = focknet::kExactDimCap;
};

int run_matelem(const MatelemOptions& opt) {
    if (opt.max_photons > focknet::kExactDimCap) {
        std::fprintf(stderr,
                     "warning: --max-photons raised above the default %zu; "
                     "run time doubles with every photon\n",
                     focknet::kExactDimCap);
    }
    const json doc = load_input(opt.input_path);
    reject_unknown_fields(doc, {"unitary", "beam_splitter", "out", "in"});
    const focknet::UnitaryMatrix u = network_from_document(doc);
    const auto out = focknet::io::occupation_from_json(require_field(doc, "out"));
    const auto in = focknet::io::occupation_from_json(require_field(doc, "in"));

    json inputs;
    inputs["unitary"] = focknet::io::matrix_to_json(u.matrix());
    inputs["out"] = focknet::io::occupation_to_json(out);
    inputs["in"] = focknet::io::occupation_to_json(in);

    const focknet::Complex amplitude = focknet::matrix_element(u, out, in, opt.max_photons);
    json result = make_result("matelem", std::move(inputs));
    result["results"]["amplitude"] = focknet::io::complex_to_json(amplitude);
    emit(result, opt.output_path);
    return kExitSuccess;
}

struct TransformOptions {
    std::string input_path;
    std::string output_path;
    int max_photons = focknet::kTransformPhotonCap;
};

int run_transform(const TransformOptions& opt) {
    const json doc = load_input(opt.input_path);
    reject_unknown_fields(doc, {"unitary", "beam_splitter", "in"});
    const focknet::UnitaryMatrix u = network_from_document(doc);
    const auto in = focknet::io::occupation_from_json(require_field(doc, "in"));

    json inputs;
    inputs["unitary"] = focknet::io::matrix_to_json(u.matrix());
    inputs["in"] = focknet::io::occupation_to_json(in);

    if (opt.max_photons > focknet::kTransformPhotonCap) {
        std::fprintf(stderr,
                     "warning: --max-photons raised above the default %d; "
                     "run time grows with the configuration count\n",
                     focknet::kTransformPhotonCap);
    }
    const focknet::FockStateVector state = focknet::transform_state(u, in, opt.max_photons);
    json result = make_result("transform", std::move(inputs));
    result["results"]["state"] = focknet::io::state_to_json(state);
    result["results"]["norm_squared"] = state.norm_squared();
    emit(result, opt.output_path);
    return kExitSuccess;
}

struct EntpowerOptions {
    std::string input_path;
    std::string output_path;
    std::optional<double> per_value;
    std::optional<double> abs_t;
    double phase_t = 0.0;
    double phase_r = 0.0;
    int dim_minus_one = 1;
    long long samples = 100'000;
    std::uint64_t seed = 0;
    int workers = 0;  // 0: use available parallelism
};

int run_entpower(const EntpowerOptions& opt) {
    int sources = 0;
    if (!opt.input_path.empty()) ++sources;
    if (opt.per_value.has_value()) ++sources;
    if (opt.abs_t.has_value()) ++sources;
    if (sources != 1) {
        throw focknet::InvalidInput(
            "give the network exactly one way: --input, --per, or --abs-t");
    }

    focknet::UnitaryMatrix u = focknet::UnitaryMatrix::identity(2);
    if (!opt.input_path.empty()) {
        const json doc = load_input(opt.input_path);
        reject_unknown_fields(doc, {"unitary", "beam_splitter"});
        u = network_from_document(doc);
    } else if (opt.per_value.has_value()) {
        u = focknet::BeamSplitter::from_permanent(*opt.per_value).unitary();
    } else {
        u = focknet::BeamSplitter::from_magnitude(*opt.abs_t, opt.phase_t, opt.phase_r).unitary();
    }

    int workers = opt.workers;
    if (workers <= 0) {
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    if (workers > 1) {
        std::fprintf(stderr,
                     "note: running with %d workers; estimates are bit-reproducible "
                     "only for the same worker count\n",
                     workers);
    }

    json inputs;
    inputs["unitary"] = focknet::io::matrix_to_json(u.matrix());
    inputs["N"] = opt.dim_minus_one;
    inputs["samples"] = opt.samples;
    inputs["seed"] = opt.seed;
    inputs["workers"] = workers;

    const focknet::McEstimate estimate =
        focknet::entanglement_power_mc(u, opt.dim_minus_one, opt.samples, opt.seed, workers);

    json result = make_result("entpower", std::move(inputs));
    result["results"]["mean"] = estimate.mean;
    result["results"]["std_error"] = estimate.std_error;
    result["results"]["samples"] = estimate.samples;
    result["results"]["seed"] = estimate.seed;
    result["results"]["workers"] = estimate.workers;
    if (opt.dim_minus_one == 1) {
        // for qubit inputs the closed form is available for comparison; it
        // depends only on the magnitude of the network's permanent
        const focknet::Complex per_value =
            u.matrix()(0, 0) * u.matrix()(1, 1) + u.matrix()(0, 1) * u.matrix()(1, 0);
        const double magnitude = std::clamp(std::abs(per_value), 0.0, 1.0);
        result["results"]["permanent_magnitude"] = magnitude;
        result["results"]["analytic_qubit"] = focknet::qubit_power_analytic(magnitude);
    }
    emit(result, opt.output_path);
    return kExitSuccess;
}

struct VerifyOptions {
    std::string suite = "all";
    std::string output_path;
    std::uint64_t seed = 0;
    long long samples = 1'000'000;
    int workers = 1;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<focknet::VerifyReport> reports;
    if (opt.suite == "unit-disk" || opt.suite == "all") {
        reports.push_back(focknet::verify_unit_disk(opt.seed));
    }
    if (opt.suite == "oracle" || opt.suite == "all") {
        reports.push_back(focknet::verify_oracle(opt.seed));
    }
    if (opt.suite == "moments" || opt.suite == "all") {
        reports.push_back(focknet::verify_moments(opt.seed, opt.samples));
    }
    if (opt.suite == "power" || opt.suite == "all") {
        reports.push_back(focknet::verify_power(opt.seed, opt.samples, opt.workers));
    }
    if (reports.empty()) {
        throw focknet::InvalidInput("unknown suite '" + opt.suite +
                                    "' (expected unit-disk, oracle, moments, power, or all)");
    }

    bool all_passed = true;
    json suites = json::array();
    for (const focknet::VerifyReport& report : reports) {
        json checks = json::array();
        for (const focknet::CheckResult& check : report.checks) {
            std::printf("%s  %s/%s: %.3e (limit %.1e, %s)\n", check.passed ? "PASS" : "FAIL",
                        report.suite.c_str(), check.name.c_str(), check.deviation, check.limit,
                        check.unit.c_str());
            all_passed = all_passed && check.passed;
            json entry;
            entry["name"] = check.name;
            entry["passed"] = check.passed;
            entry["deviation"] = check.deviation;
            entry["limit"] = check.limit;
            entry["unit"] = check.unit;
            checks.push_back(std::move(entry));
        }
        json suite_doc;
        suite_doc["suite"] = report.suite;
        suite_doc["checks"] = std::move(checks);
        suites.push_back(std::move(suite_doc));
    }
    std::printf("%s\n", all_passed ? "all checks passed" : "some checks FAILED");

    if (!opt.output_path.empty()) {
        json inputs;
        inputs["suite"] = opt.suite;
        inputs["seed"] = opt.seed;
        inputs["samples"] = opt.samples;
        inputs["workers"] = opt.workers;
        json result = make_result("verify", std::move(inputs));
        result["results"]["suites"] = std::move(suites);
        result["results"]["all_passed"] = all_passed;
        emit(result, opt.output_path);
    }
    return all_passed ? kExitSuccess : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fock-basis calculator for passive linear optical networks"};
    app.require_subcommand(1);

    PerOptions per_opt;
    CLI::App* per = app.add_subcommand("per", "Permanent of a complex matrix");
    per->add_option("--input", per_opt.input_path, "JSON input file")->required();
    per->add_option("--output", per_opt.output_path, "result file (default: stdout)");
    per->add_option("--algorithm", per_opt.algorithm, "naive, ryser, or glynn")
        ->check(CLI::IsMember({"naive", "ryser", "glynn"}));
    per->add_option("--max-naive-dim", per_opt.max_naive_dim, "order cap for the naive sum");
    per->add_option("--max-exact-dim", per_opt.max_exact_dim, "order cap for Ryser/Glynn");

    MatelemOptions matelem_opt;
    CLI::App* matelem = app.add_subcommand("matelem", "Fock-basis matrix element <out|U|in>");
    matelem->add_option("--input", matelem_opt.input_path, "JSON input file")->required();
    matelem->add_option("--output", matelem_opt.output_path, "result file (default: stdout)");
    matelem->add_option("--max-photons", matelem_opt.max_photons, "total photon cap");

    TransformOptions transform_opt;
    CLI::App* transform = app.add_subcommand("transform", "Full transform of a Fock state");
    transform->add_option("--input", transform_opt.input_path, "JSON input file")->required();
    transform->add_option("--output", transform_opt.output_path, "result file (default: stdout)");
    transform->add_option("--max-photons", transform_opt.max_photons, "total photon cap");

    EntpowerOptions entpower_opt;
    CLI::App* entpower =
        app.add_subcommand("entpower", "Monte Carlo entanglement power of a two-mode network");
    entpower->add_option("--input", entpower_opt.input_path, "JSON network file");
    entpower->add_option("--per", entpower_opt.per_value,
                         "build a real beam splitter with this permanent");
    entpower->add_option("--abs-t", entpower_opt.abs_t, "beam splitter |T|");
    entpower->add_option("--phase-t", entpower_opt.phase_t, "phase of T (radians)");
    entpower->add_option("--phase-r", entpower_opt.phase_r, "phase of R (radians)");
    entpower->add_option("--N", entpower_opt.dim_minus_one, "input dimension minus one");
    entpower->add_option("--samples", entpower_opt.samples, "Monte Carlo samples");
    entpower->add_option("--seed", entpower_opt.seed, "random seed (flag > env > 0)")
        ->envname("FOCKNET_SEED");
    entpower->add_option("--workers", entpower_opt.workers,
                         "worker threads (default: available parallelism)");
    entpower->add_option("--output", entpower_opt.output_path, "result file (default: stdout)");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "Run a seeded verification suite");
    verify->add_option("suite", verify_opt.suite, "unit-disk, oracle, moments, power, or all");
    verify->add_option("--seed", verify_opt.seed, "random seed (flag > env > 0)")
        ->envname("FOCKNET_SEED");
    verify->add_option("--samples", verify_opt.samples, "Monte Carlo samples for MC suites");
    verify->add_option("--workers", verify_opt.workers, "worker threads for the power suite");
    verify->add_option("--output", verify_opt.output_path, "optional JSON report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitBadInput;
    }

    try {
        if (per->parsed()) return run_per(per_opt);
        if (matelem->parsed()) return run_matelem(matelem_opt);
        if (transform->parsed()) return run_transform(transform_opt);
        if (entpower->parsed()) return run_entpower(entpower_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        std::fprintf(stderr, "error: no subcommand selected\n");
        return kExitBadInput;
    } catch (const focknet::CapExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCapExceeded;
    } catch (const focknet::InvalidInput& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: malformed JSON: %s\n", e.what());
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
}
