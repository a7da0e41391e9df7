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

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qdcprep {

using Qubit = std::size_t;

enum class GateKind { RY, RZ, X, H, CNOT, SWAP, CSWAP, PCRY };

[[nodiscard]] std::string_view to_string(GateKind kind) noexcept;
/// Throws IRError for unknown names.
[[nodiscard]] GateKind gate_kind_from_string(std::string_view name);

/**
 * One IR instruction.
 *
 * Qubit layout per kind: CNOT (control, target); SWAP (a, b);
 * CSWAP (control, a, b); PCRY (controls..., target) with `pattern[i]`
 * the required value of control i (false = open control).
 */
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<Qubit> qubits;
    double angle = 0.0;
    std::vector<bool> pattern;

    static Gate ry(Qubit q, double theta) { return {GateKind::RY, {q}, theta, {}}; }
    static Gate rz(Qubit q, double theta) { return {GateKind::RZ, {q}, theta, {}}; }
    static Gate x(Qubit q) { return {GateKind::X, {q}, 0.0, {}}; }
    static Gate h(Qubit q) { return {GateKind::H, {q}, 0.0, {}}; }
    static Gate cnot(Qubit control, Qubit target) {
        return {GateKind::CNOT, {control, target}, 0.0, {}};
    }
    static Gate swap(Qubit a, Qubit b) { return {GateKind::SWAP, {a, b}, 0.0, {}}; }
    static Gate cswap(Qubit control, Qubit a, Qubit b) {
        return {GateKind::CSWAP, {control, a, b}, 0.0, {}};
    }
    /// Rotation on `target` applied when `controls` match `pattern`.
    static Gate pcry(std::vector<Qubit> controls, std::vector<bool> pattern,
                     Qubit target, double theta);

    [[nodiscard]] bool has_angle() const noexcept {
        return kind == GateKind::RY || kind == GateKind::RZ ||
               kind == GateKind::PCRY;
    }
    [[nodiscard]] Qubit target() const { return qubits.back(); }
    /// Control wires of a PCRY (all but the last qubit).
    [[nodiscard]] std::vector<Qubit> controls() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

struct CircuitMetadata {
    std::string name;
    /// Synthesizer that produced the circuit ("mottonen", "dc", ...).
    std::string source;
    /// Register role map, e.g. "data" -> qubit indices.
    std::map<std::string, std::vector<Qubit>> roles;

    friend bool operator==(const CircuitMetadata &,
                           const CircuitMetadata &) = default;
};

/// Program-ordered gate list over a fixed number of wires. Qubit 0 is the
/// top wire and the most significant bit of a basis index.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t width, CircuitMetadata metadata = {})
        : width_(width), metadata_(std::move(metadata)) {}

    /// Throws IRError on out-of-range or repeated qubits, non-finite angles
    /// or a PCRY pattern that does not match its control count.
    Circuit &append(Gate gate);
    /// Appends every gate of `other` with its qubits shifted by `offset`.
    Circuit &append_circuit(const Circuit &other, std::size_t offset = 0);
    /// Grows the register; existing gates are untouched.
    void widen(std::size_t width);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
    [[nodiscard]] std::size_t count(GateKind kind) const noexcept;

    [[nodiscard]] const CircuitMetadata &metadata() const noexcept {
        return metadata_;
    }
    CircuitMetadata &metadata() noexcept { return metadata_; }

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t width_ = 0;
    std::vector<Gate> gates_;
    CircuitMetadata metadata_;
};

/// Throws IRError when `gate` is not valid on `width` wires.
void validate_gate(const Gate &gate, std::size_t width);

enum class DepthBasis { Abstract, Cnot };

struct DepthReport {
    std::size_t depth = 0;
    std::size_t width = 0;
    std::map<std::string, std::size_t> gate_counts;
    DepthBasis basis = DepthBasis::Abstract;
};

/// Greedy as-soon-as-possible layering: every gate lands one layer above
/// the latest gate sharing a wire with it. In the CNOT basis the circuit is
/// decomposed first.
[[nodiscard]] DepthReport depth(const Circuit &circuit,
                                DepthBasis basis = DepthBasis::Abstract);

/// Rewrites the circuit over {RY, RZ, X, H, CNOT}, equal to the input up to
/// a global phase.
[[nodiscard]] Circuit decompose(const Circuit &circuit);

enum class ExportFormat { Qasm, Json };

/// OpenQASM 2.0 (gates RY, RZ, X, H, CNOT, SWAP, CSWAP only; throws
/// ExportError otherwise) or the JSON circuit document.
[[nodiscard]] std::string export_circuit(const Circuit &circuit,
                                         ExportFormat format);

/// Parses the JSON circuit document. Throws IRError on malformed input.
[[nodiscard]] Circuit import_json(std::string_view text);

} // namespace qdcprep
