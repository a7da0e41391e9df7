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

#include <numbers>
#include <span>

#include "qdcprep/circuit.hpp"

namespace qdcprep {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

// T and T-dagger as Z rotations; they differ from the textbook gates by a
// global phase only.
void toffoli(Circuit &out, Qubit c1, Qubit c2, Qubit t) {
    out.append(Gate::h(t));
    out.append(Gate::cnot(c2, t));
    out.append(Gate::rz(t, -kQuarterPi));
    out.append(Gate::cnot(c1, t));
    out.append(Gate::rz(t, kQuarterPi));
    out.append(Gate::cnot(c2, t));
    out.append(Gate::rz(t, -kQuarterPi));
    out.append(Gate::cnot(c1, t));
    out.append(Gate::rz(c2, kQuarterPi));
    out.append(Gate::rz(t, kQuarterPi));
    out.append(Gate::h(t));
    out.append(Gate::cnot(c1, c2));
    out.append(Gate::rz(c1, kQuarterPi));
    out.append(Gate::rz(c2, -kQuarterPi));
    out.append(Gate::cnot(c1, c2));
}

// C^k RY(theta) = C^{k-1}RY(theta/2) . CNOT(c_k, t) . C^{k-1}RY(-theta/2)
// . CNOT(c_k, t), all closed controls.
void controlled_ry(Circuit &out, std::span<const Qubit> controls, Qubit target,
                   double theta) {
    if (controls.empty()) {
        out.append(Gate::ry(target, theta));
        return;
    }
    const Qubit last = controls.back();
    const auto rest = controls.first(controls.size() - 1);
    controlled_ry(out, rest, target, theta / 2.0);
    out.append(Gate::cnot(last, target));
    controlled_ry(out, rest, target, -theta / 2.0);
    out.append(Gate::cnot(last, target));
}

void flip_open_controls(Circuit &out, const Gate &g) {
    for (std::size_t i = 0; i < g.pattern.size(); ++i) {
        if (!g.pattern[i]) {
            out.append(Gate::x(g.qubits[i]));
        }
    }
}

} // namespace

Circuit decompose(const Circuit &circuit) {
    Circuit out(circuit.width(), circuit.metadata());
    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::X:
        case GateKind::H:
        case GateKind::CNOT:
            out.append(g);
            break;
        case GateKind::SWAP:
            out.append(Gate::cnot(g.qubits[0], g.qubits[1]));
            out.append(Gate::cnot(g.qubits[1], g.qubits[0]));
            out.append(Gate::cnot(g.qubits[0], g.qubits[1]));
            break;
        case GateKind::CSWAP: {
            const Qubit c = g.qubits[0];
            const Qubit a = g.qubits[1];
            const Qubit b = g.qubits[2];
            out.append(Gate::cnot(b, a));
            toffoli(out, c, a, b);
            out.append(Gate::cnot(b, a));
            break;
        }
        case GateKind::PCRY: {
            const auto controls = g.controls();
            flip_open_controls(out, g);
            controlled_ry(out, controls, g.target(), g.angle);
            flip_open_controls(out, g);
            break;
        }
        }
    }
    return out;
}

} // namespace qdcprep
