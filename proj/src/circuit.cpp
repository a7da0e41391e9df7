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

#include "qdcprep/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "qdcprep/errors.hpp"

namespace qdcprep {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 8> kGateNames{{
    {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},
    {GateKind::X, "X"},
    {GateKind::H, "H"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::CSWAP, "CSWAP"},
    {GateKind::PCRY, "PCRY"},
}};

std::size_t arity(GateKind kind) {
    switch (kind) {
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::X:
    case GateKind::H:
        return 1;
    case GateKind::CNOT:
    case GateKind::SWAP:
        return 2;
    case GateKind::CSWAP:
        return 3;
    case GateKind::PCRY:
        return 0; // variable
    }
    return 0;
}

} // namespace

std::string_view to_string(GateKind kind) noexcept {
    for (const auto &[k, name] : kGateNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
    for (const auto &[k, n] : kGateNames) {
        if (n == name) {
            return k;
        }
    }
    throw IRError("unknown gate kind '" + std::string(name) + "'");
}

Gate Gate::pcry(std::vector<Qubit> controls, std::vector<bool> pattern,
                Qubit target, double theta) {
    Gate g{GateKind::PCRY, std::move(controls), theta, std::move(pattern)};
    g.qubits.push_back(target);
    return g;
}

std::vector<Qubit> Gate::controls() const {
    if (kind != GateKind::PCRY || qubits.empty()) {
        return {};
    }
    return {qubits.begin(), qubits.end() - 1};
}

void validate_gate(const Gate &gate, std::size_t width) {
    const std::size_t expected = arity(gate.kind);
    if (gate.kind == GateKind::PCRY) {
        if (gate.qubits.empty()) {
            throw IRError("PCRY needs a target qubit");
        }
        if (gate.pattern.size() + 1 != gate.qubits.size()) {
            throw IRError("PCRY pattern length " +
                          std::to_string(gate.pattern.size()) +
                          " does not match " +
                          std::to_string(gate.qubits.size() - 1) + " controls");
        }
    } else {
        if (gate.qubits.size() != expected) {
            throw IRError(std::string(to_string(gate.kind)) + " expects " +
                          std::to_string(expected) + " qubits, got " +
                          std::to_string(gate.qubits.size()));
        }
        if (!gate.pattern.empty()) {
            throw IRError("only PCRY carries a control pattern");
        }
    }
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
        if (gate.qubits[i] >= width) {
            throw IRError("qubit " + std::to_string(gate.qubits[i]) +
                          " out of range for width " + std::to_string(width));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gate.qubits[i] == gate.qubits[j]) {
                throw IRError("duplicate qubit " + std::to_string(gate.qubits[i]) +
                              " in " + std::string(to_string(gate.kind)));
            }
        }
    }
    if (!std::isfinite(gate.angle)) {
        throw IRError("non-finite rotation angle");
    }
}

Circuit &Circuit::append(Gate gate) {
    validate_gate(gate, width_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append_circuit(const Circuit &other, std::size_t offset) {
    if (other.width() + offset > width_) {
        throw IRError("appended circuit does not fit: width " +
                      std::to_string(other.width()) + " at offset " +
                      std::to_string(offset) + " exceeds " +
                      std::to_string(width_));
    }
    gates_.reserve(gates_.size() + other.size());
    for (Gate g : other.gates()) {
        for (auto &q : g.qubits) {
            q += offset;
        }
        gates_.push_back(std::move(g));
    }
    return *this;
}

void Circuit::widen(std::size_t width) {
    if (width < width_) {
        throw IRError("cannot shrink a circuit");
    }
    width_ = width;
}

std::size_t Circuit::count(GateKind kind) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(),
        [kind](const Gate &g) { return g.kind == kind; }));
}

DepthReport depth(const Circuit &circuit, DepthBasis basis) {
    if (basis == DepthBasis::Cnot) {
        DepthReport report = depth(decompose(circuit), DepthBasis::Abstract);
        report.basis = DepthBasis::Cnot;
        return report;
    }

    DepthReport report;
    report.width = circuit.width();
    report.basis = basis;
    std::vector<std::size_t> frontier(circuit.width(), 0);
    for (const Gate &g : circuit.gates()) {
        std::size_t layer = 0;
        for (Qubit q : g.qubits) {
            layer = std::max(layer, frontier[q]);
        }
        ++layer;
        for (Qubit q : g.qubits) {
            frontier[q] = layer;
        }
        report.depth = std::max(report.depth, layer);
        ++report.gate_counts[std::string(to_string(g.kind))];
    }
    return report;
}

} // namespace qdcprep
