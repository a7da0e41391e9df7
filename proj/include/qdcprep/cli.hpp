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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdcprep/angles.hpp"
#include "qdcprep/circuit.hpp"
#include "qdcprep/synthesis.hpp"

namespace qdcprep::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 2,
    kResourceError = 3,
    kVerificationFailure = 4,
};

/// Synthesis method named on the command line.
struct Method {
    enum class Kind { Mottonen, Dc, DcLabels, Hybrid } kind = Kind::Dc;
    std::size_t block = 0;

    /// "mottonen", "dc", "dc-labels" or "hybrid:k". Throws InputError.
    static Method parse(std::string_view text);
    [[nodiscard]] std::string name() const;
};

[[nodiscard]] PreparedRegister synthesize(const InputVector &x, const Method &method);

/// Reads a JSON array of numbers or of [re, im] pairs.
[[nodiscard]] InputVector read_vector(const std::string &path, bool normalize);
/// Reads a JSON array of probabilities.
[[nodiscard]] std::vector<double> read_distribution(const std::string &path);

struct SynthOptions {
    std::string input;
    std::string method = "dc";
    std::string output; // empty: stdout
    std::string format = "json";
    bool normalize = false;
};

struct VerifyOptions {
    std::string input;
    std::string method = "dc";
    double tolerance = 1e-9;
    bool normalize = false;
    std::size_t max_qubits = 24;
};

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::vector<std::string> methods{"mottonen", "dc"};
    std::string basis = "abstract";
    std::uint64_t seed = 1;
    bool timing = false;
};

struct SwapTestCliOptions {
    std::string x;
    std::string y;
    std::string px;
    std::string py;
    std::string variant = "overlap";
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
    std::optional<double> expectation_squared;
    bool normalize = false;
};

int cmd_synth(const SynthOptions &options, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err);
int cmd_bench(const BenchOptions &options, std::ostream &out, std::ostream &err);
int cmd_swaptest(const SwapTestCliOptions &options, std::ostream &out,
                 std::ostream &err);

/// Parses argv and dispatches to a command. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qdcprep::cli
