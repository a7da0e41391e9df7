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

#include <cstdint>
#include <map>

#include "qdcprep/angles.hpp"
#include "qdcprep/errors.hpp"
#include "qdcprep/statevector.hpp"

namespace qdcprep::reference {

namespace {

using Amplitudes = std::map<std::uint64_t, Complex>;

// Bit value of wire q in a basis index; wire 0 is the most significant.
struct Wires {
    std::size_t width;

    [[nodiscard]] std::uint64_t mask(Qubit q) const {
        return std::uint64_t{1} << (width - 1 - q);
    }
    [[nodiscard]] bool test(std::uint64_t index, Qubit q) const {
        return (index & mask(q)) != 0;
    }
    [[nodiscard]] std::uint64_t with(std::uint64_t index, Qubit q, bool v) const {
        return v ? (index | mask(q)) : (index & ~mask(q));
    }
};

void add(Amplitudes &out, std::uint64_t index, Complex amp) {
    out[index] += amp;
}

// Image of one basis state |index> under `gate`, weighted by `amp`.
void map_basis_state(const Gate &gate, const Wires &w, std::uint64_t index,
                     Complex amp, Amplitudes &out) {
    switch (gate.kind) {
    case GateKind::CNOT: {
        const bool flip = w.test(index, gate.qubits[0]);
        const Qubit t = gate.qubits[1];
        add(out, flip ? w.with(index, t, !w.test(index, t)) : index, amp);
        return;
    }
    case GateKind::SWAP:
    case GateKind::CSWAP: {
        const bool controlled = gate.kind == GateKind::CSWAP;
        const Qubit a = gate.qubits[controlled ? 1 : 0];
        const Qubit b = gate.qubits[controlled ? 2 : 1];
        if (controlled && !w.test(index, gate.qubits[0])) {
            add(out, index, amp);
            return;
        }
        const bool va = w.test(index, a);
        const bool vb = w.test(index, b);
        add(out, w.with(w.with(index, a, vb), b, va), amp);
        return;
    }
    case GateKind::PCRY:
        for (std::size_t i = 0; i < gate.pattern.size(); ++i) {
            if (w.test(index, gate.qubits[i]) != gate.pattern[i]) {
                add(out, index, amp);
                return;
            }
        }
        [[fallthrough]];
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::X:
    case GateKind::H: {
        const auto m = single_qubit_matrix(gate.kind, gate.angle);
        const Qubit t = gate.target();
        const int col = w.test(index, t) ? 1 : 0;
        add(out, w.with(index, t, false), m[static_cast<std::size_t>(col)] * amp);
        add(out, w.with(index, t, true), m[static_cast<std::size_t>(2 + col)] * amp);
        return;
    }
    }
}

} // namespace

std::vector<Complex> simulate_amplitude_map(const Circuit &circuit,
                                            std::span<const Complex> initial) {
    const std::size_t width = circuit.width();
    if (width > 30) {
        throw ResourceError("amplitude-map simulator limited to 30 qubits");
    }
    const std::size_t dim = std::size_t{1} << width;
    const Wires wires{width};

    Amplitudes state;
    if (initial.empty()) {
        state[0] = 1.0;
    } else {
        if (initial.size() != dim) {
            throw DimensionError("initial state length does not match width");
        }
        for (std::size_t i = 0; i < dim; ++i) {
            if (initial[i] != Complex{}) {
                state[i] = initial[i];
            }
        }
    }

    for (const Gate &gate : circuit.gates()) {
        validate_gate(gate, width);
        Amplitudes next;
        for (const auto &[index, amp] : state) {
            map_basis_state(gate, wires, index, amp, next);
        }
        state.swap(next);
    }

    std::vector<Complex> dense(dim);
    for (const auto &[index, amp] : state) {
        dense[index] = amp;
    }
    return dense;
}

} // namespace qdcprep::reference
