// Copyright 2026 The qdcprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdcprep/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdcprep/errors.hpp"
#include "qdcprep/kernels.hpp"
#include "qdcprep/statevector.hpp"
#include "qdcprep/swap_stats.hpp"

namespace qdcprep::cli {

namespace {

using nlohmann::json;

// Decomposing the top-down circuit grows as 4^n gates.
constexpr std::size_t kMaxCnotBasisMottonen = 4096;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename Fn>
int guarded(std::ostream &err, Fn &&fn) {
    try {
        return fn();
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << "\n";
        return kResourceError;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

double max_marginal_deviation(const StateVector &state,
                              const std::vector<Qubit> &data,
                              const InputVector &x) {
    const auto probs = marginal(state, data);
    double worst = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        worst = std::max(worst, std::abs(probs[k] - std::norm(x[k])));
    }
    return worst;
}

std::vector<double> random_unit_vector(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<double> v(n);
    double sq = 0.0;
    for (auto &e : v) {
        e = normal(rng);
        sq += e * e;
    }
    for (auto &e : v) {
        e /= std::sqrt(sq);
    }
    return v;
}

} // namespace

Method Method::parse(std::string_view text) {
    if (text == "mottonen") {
        return {Kind::Mottonen, 0};
    }
    if (text == "dc") {
        return {Kind::Dc, 0};
    }
    if (text == "dc-labels") {
        return {Kind::DcLabels, 0};
    }
    constexpr std::string_view prefix = "hybrid:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string digits(text.substr(prefix.size()));
        if (!digits.empty() &&
            std::all_of(digits.begin(), digits.end(),
                        [](char c) { return c >= '0' && c <= '9'; })) {
            return {Kind::Hybrid, static_cast<std::size_t>(std::stoull(digits))};
        }
    }
    throw InputError("unknown method '" + std::string(text) +
                     "' (expected mottonen, dc, dc-labels or hybrid:k)");
}

std::string Method::name() const {
    switch (kind) {
    case Kind::Mottonen:
        return "mottonen";
    case Kind::Dc:
        return "dc";
    case Kind::DcLabels:
        return "dc-labels";
    case Kind::Hybrid:
        return "hybrid:" + std::to_string(block);
    }
    return "?";
}

PreparedRegister synthesize(const InputVector &x, const Method &method) {
    switch (method.kind) {
    case Method::Kind::Mottonen:
        return prepare_mottonen(x);
    case Method::Kind::Dc:
        return prepare_dc(x);
    case Method::Kind::DcLabels:
        return add_orthonormal_labels(prepare_dc(x));
    case Method::Kind::Hybrid:
        return hybrid_circuit(x, method.block);
    }
    throw InputError("unsupported method");
}

InputVector read_vector(const std::string &path, bool normalize) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::exception &e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_array()) {
        throw InputError("vector file must hold a JSON array");
    }
    std::vector<Complex> entries;
    entries.reserve(doc.size());
    for (const auto &e : doc) {
        if (e.is_number()) {
            entries.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() &&
                   e[1].is_number()) {
            entries.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw InputError("vector entries must be numbers or [re, im] pairs");
        }
    }
    return InputVector::from_complex(std::move(entries), normalize);
}

std::vector<double> read_distribution(const std::string &path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
        return doc.get<std::vector<double>>();
    } catch (const json::exception &e) {
        throw InputError("'" + path + "' is not a JSON array of numbers: " +
                         e.what());
    }
}

int cmd_synth(const SynthOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (options.format != "json" && options.format != "qasm") {
            throw InputError("unknown format '" + options.format + "'");
        }
        const Method method = Method::parse(options.method);
        const InputVector x = read_vector(options.input, options.normalize);
        PreparedRegister reg = synthesize(x, method);
        reg.circuit.metadata().name = options.input;

        std::string text;
        if (options.format == "qasm") {
            const bool needs_decomposition = reg.circuit.count(GateKind::PCRY) > 0;
            text = export_circuit(needs_decomposition ? decompose(reg.circuit)
                                                      : reg.circuit,
                                  ExportFormat::Qasm);
        } else {
            text = export_circuit(reg.circuit, ExportFormat::Json);
        }

        if (options.output.empty()) {
            out << text;
        } else {
            std::ofstream file(options.output, std::ios::binary);
            if (!file) {
                throw InputError("cannot write '" + options.output + "'");
            }
            file << text;
        }
        return static_cast<int>(kSuccess);
    });
}

int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const Method method = Method::parse(options.method);
        const InputVector x = read_vector(options.input, options.normalize);
        const PreparedRegister reg = synthesize(x, method);
        const SimulatorOptions sim{options.max_qubits, Backend::Parallel};
        const StateVector state = simulate(reg.circuit, sim);

        json report;
        report["method"] = method.name();
        report["dimension"] = x.size();
        report["width"] = reg.circuit.width();
        report["tolerance"] = options.tolerance;

        const double marginal_error = max_marginal_deviation(state, reg.data_qubits, x);
        report["max_marginal_error"] = marginal_error;
        bool pass = marginal_error <= options.tolerance;

        std::optional<double> fid;
        switch (method.kind) {
        case Method::Kind::Mottonen: {
            const StateVector target(std::vector<Complex>(x.entries()), sim);
            fid = fidelity(target, state);
            double amp_error = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k) {
                amp_error = std::max(amp_error, std::abs(state[k] - x[k]));
            }
            report["max_amplitude_error"] = amp_error;
            pass = pass && amp_error <= options.tolerance;
            break;
        }
        case Method::Kind::Dc:
        case Method::Kind::DcLabels:
            fid = fidelity(expected_entangled_state(
                               x, method.kind == Method::Kind::DcLabels, sim),
                           state);
            break;
        case Method::Kind::Hybrid:
            break;
        }
        if (fid) {
            report["fidelity"] = *fid;
            pass = pass && std::abs(1.0 - *fid) <= options.tolerance;
        } else {
            report["fidelity"] = nullptr;
        }
        report["pass"] = pass;
        out << report.dump(2) << "\n";
        return static_cast<int>(pass ? kSuccess : kVerificationFailure);
    });
}

int cmd_bench(const BenchOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (options.basis != "abstract" && options.basis != "cnot") {
            throw InputError("unknown basis '" + options.basis + "'");
        }
        const DepthBasis basis =
            options.basis == "cnot" ? DepthBasis::Cnot : DepthBasis::Abstract;
        std::vector<Method> methods;
        for (const auto &m : options.methods) {
            methods.push_back(Method::parse(m));
        }

        std::ostringstream table;
        table << "N,method,depth,width,cswap_count";
        if (options.timing) {
            table << ",synth_time_us";
        }
        table << "\n";

        for (std::size_t n : options.sizes) {
            std::mt19937_64 rng(options.seed + n);
            const auto values = random_unit_vector(n, rng);
            const InputVector x = InputVector::from_real(values);
            for (const Method &method : methods) {
                if (basis == DepthBasis::Cnot &&
                    method.kind == Method::Kind::Mottonen &&
                    n > kMaxCnotBasisMottonen) {
                    throw ResourceError(
                        "CNOT-basis depth of the top-down circuit is limited to N <= " +
                        std::to_string(kMaxCnotBasisMottonen));
                }
                const auto start = std::chrono::steady_clock::now();
                const PreparedRegister reg = synthesize(x, method);
                const auto stop = std::chrono::steady_clock::now();
                const DepthReport d = depth(reg.circuit, basis);
                table << n << ',' << method.name() << ',' << d.depth << ','
                      << reg.circuit.width() << ','
                      << reg.circuit.count(GateKind::CSWAP);
                if (options.timing) {
                    table << ','
                          << std::chrono::duration_cast<std::chrono::microseconds>(
                                 stop - start)
                                 .count();
                }
                table << "\n";
            }
        }
        out << table.str();
        return static_cast<int>(kSuccess);
    });
}

int cmd_swaptest(const SwapTestCliOptions &options, std::ostream &out,
                 std::ostream &err) {
    return guarded(err, [&] {
        SwapTestOptions st;
        st.sampling.shots = options.shots;
        st.sampling.seed = options.seed;
        const InputVector x = read_vector(options.x, options.normalize);
        const InputVector y = read_vector(options.y, options.normalize);

        StatReport report;
        const std::string &v = options.variant;
        if (v == "overlap") {
            report = swap_test_overlap(x, y, st);
        } else if (v == "expectation") {
            report = moment_statistics(x, y, MomentMode::Expectation, st);
        } else if (v == "second_moment") {
            report = moment_statistics(x, y, MomentMode::SecondMoment, st);
        } else if (v == "variance") {
            report = moment_statistics(x, y, MomentMode::Variance, st,
                                       options.expectation_squared);
        } else if (v == "covariance") {
            report = moment_statistics(x, y, MomentMode::CovarianceUniform, st);
        } else if (v == "cyclic") {
            if (options.px.empty() || options.py.empty()) {
                throw InputError("the cyclic variant needs --px and --py");
            }
            const auto px = read_distribution(options.px);
            const auto py = read_distribution(options.py);
            report = cyclic_exy(px, x, py, y, st);
        } else {
            throw InputError("unknown variant '" + v + "'");
        }
        out << to_json(report);
        return static_cast<int>(kSuccess);
    });
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum state-preparation circuit compiler and verifier"};
    app.require_subcommand(1);

    int threads = 0;
    if (const char *env = std::getenv("QDCPREP_THREADS")) {
        threads = std::atoi(env);
    }
    app.add_option("--threads", threads,
                   "Simulator worker threads (env QDCPREP_THREADS); results "
                   "do not depend on it");

    SynthOptions synth;
    auto *synth_cmd = app.add_subcommand("synth", "Synthesize a preparation circuit");
    synth_cmd->add_option("input", synth.input, "Vector JSON file")->required();
    synth_cmd->add_option("-m,--method", synth.method,
                          "mottonen | dc | dc-labels | hybrid:k");
    synth_cmd->add_option("-o,--output", synth.output, "Output file (default stdout)");
    synth_cmd->add_option("-f,--format", synth.format, "json | qasm");
    synth_cmd->add_flag("--normalize", synth.normalize, "Divide the input by its norm");

    VerifyOptions verify;
    auto *verify_cmd =
        app.add_subcommand("verify", "Simulate a circuit and check it against its oracle");
    verify_cmd->add_option("input", verify.input, "Vector JSON file")->required();
    verify_cmd->add_option("-m,--method", verify.method,
                           "mottonen | dc | dc-labels | hybrid:k");
    verify_cmd->add_option("-t,--tolerance", verify.tolerance, "Pass threshold");
    verify_cmd->add_option("--max-qubits", verify.max_qubits, "Simulator qubit cap");
    verify_cmd->add_flag("--normalize", verify.normalize, "Divide the input by its norm");

    BenchOptions bench;
    auto *bench_cmd = app.add_subcommand("bench", "Depth/width table without simulation");
    bench_cmd->add_option("-n,--sizes", bench.sizes, "Vector dimensions")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("-m,--methods", bench.methods, "Methods to compare")
        ->delimiter(',');
    bench_cmd->add_option("-b,--basis", bench.basis, "abstract | cnot");
    bench_cmd->add_option("--seed", bench.seed, "Seed of the random input vectors");
    bench_cmd->add_flag("--timing", bench.timing, "Add a synthesis time column");

    SwapTestCliOptions swap;
    auto *swap_cmd = app.add_subcommand("swaptest", "Swap-test statistics");
    swap_cmd->add_option("x", swap.x, "First vector file")->required();
    swap_cmd->add_option("y", swap.y, "Second vector file")->required();
    swap_cmd->add_option("-v,--variant", swap.variant,
                         "overlap | expectation | second_moment | variance | "
                         "covariance | cyclic");
    swap_cmd->add_option("--px", swap.px, "Distribution of X (cyclic)");
    swap_cmd->add_option("--py", swap.py, "Distribution of Y (cyclic)");
    swap_cmd->add_option("--shots", swap.shots, "Sample the test qubit");
    swap_cmd->add_option("--seed", swap.seed, "Sampling seed");
    swap_cmd->add_option("--exp-sq", swap.expectation_squared,
                         "E(X)^2 for the variance variant");
    swap_cmd->add_flag("--normalize", swap.normalize, "Divide inputs by their norm");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    kernels::set_num_threads(threads);

    if (*synth_cmd) {
        return cmd_synth(synth, out, err);
    }
    if (*verify_cmd) {
        return cmd_verify(verify, out, err);
    }
    if (*bench_cmd) {
        return cmd_bench(bench, out, err);
    }
    return cmd_swaptest(swap, out, err);
}

} // namespace qdcprep::cli
