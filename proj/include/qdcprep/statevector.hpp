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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qdcprep/circuit.hpp"

namespace qdcprep {

using Complex = std::complex<double>;

/// Default simulator cap: 2^24 amplitudes, 256 MiB.
inline constexpr std::size_t kDefaultMaxQubits = 24;

enum class Backend { Parallel, Serial };

struct SimulatorOptions {
    std::size_t max_qubits = kDefaultMaxQubits;
    Backend backend = Backend::Parallel;
};

/**
 * Dense amplitude array over 2^Q basis states. Qubit 0 is the most
 * significant bit of the basis index (the leftmost bitstring character).
 */
class StateVector {
  public:
    /// |0...0> on `num_qubits` wires. Throws ResourceError above the cap.
    explicit StateVector(std::size_t num_qubits,
                         SimulatorOptions options = {});
    /// Takes ownership of explicit amplitudes; the length must be 2^Q.
    StateVector(std::vector<Complex> amplitudes, SimulatorOptions options = {});

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amps_[i];
    }
    [[nodiscard]] const SimulatorOptions &options() const noexcept {
        return options_;
    }

    void apply(const Gate &gate);
    void apply(const Circuit &circuit);

    /// Sum of squared magnitudes, accumulated in a fixed order.
    [[nodiscard]] double norm_squared() const;

  private:
    std::size_t num_qubits_;
    std::vector<Complex> amps_;
    SimulatorOptions options_;
};

/// Runs `circuit` from |0...0>.
[[nodiscard]] StateVector simulate(const Circuit &circuit,
                                   SimulatorOptions options = {});
/// Runs `circuit` from the given state (widths must match).
[[nodiscard]] StateVector simulate(const Circuit &circuit, StateVector initial);

/// Probabilities over the 2^|qubits| outcomes of the listed wires, first
/// listed wire most significant. Throws IRError on invalid subsets.
[[nodiscard]] std::vector<double> marginal(const StateVector &state,
                                           std::span<const Qubit> qubits);

/// P(0) - P(1) on one wire.
[[nodiscard]] double expect_z(const StateVector &state, Qubit qubit);

/// <a|b>.
[[nodiscard]] Complex inner_product(const StateVector &a, const StateVector &b);
/// |<a|b>|, insensitive to global phase.
[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);

/**
 * Gram matrix of the conditional blocks: entry (k, k') is
 * <phi_k|phi_k'> where |phi_k> is the (unnormalized) state of the remaining
 * wires given outcome k on `qubits`. Row-major, 2^|qubits| squared.
 */
[[nodiscard]] std::vector<Complex> block_gram(const StateVector &state,
                                              std::span<const Qubit> qubits);

struct ShotResult {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

/// Draws `shots` i.i.d. outcomes of `qubits`; identical seeds give
/// identical counts. Throws InputError for zero shots.
[[nodiscard]] ShotResult sample(const StateVector &state,
                                std::span<const Qubit> qubits,
                                std::uint64_t shots, std::uint64_t seed);

/// JSON document {counts, shots, seed}.
[[nodiscard]] std::string to_json(const ShotResult &result);

/// Matrix of a single-qubit gate or of the rotation carried by a PCRY.
[[nodiscard]] std::array<Complex, 4> single_qubit_matrix(GateKind kind,
                                                         double angle);

namespace reference {

/// Independent simulator over a sparse index -> amplitude map. Applies each
/// gate by its action on individual basis states; used to cross-check the
/// dense kernels. Returns dense amplitudes.
[[nodiscard]] std::vector<Complex>
simulate_amplitude_map(const Circuit &circuit,
                       std::span<const Complex> initial = {});

} // namespace reference

} // namespace qdcprep
