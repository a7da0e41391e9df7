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

#include <numeric>

#include "qdcprep/errors.hpp"
#include "qdcprep/synthesis.hpp"

namespace qdcprep {

void PreparedRegister::sync_metadata() {
    auto &roles = circuit.metadata().roles;
    roles["data"] = data_qubits;
    roles["ancilla"] = ancilla_qubits;
    roles["label"] = label_qubits;
}

PreparedRegister mottonen_circuit(const AngleTree &angles) {
    const std::size_t dim = angles.dimension();
    if (dim < 2 || !is_power_of_two(dim)) {
        throw DimensionError("angle tree of length " +
                             std::to_string(angles.size()) +
                             " is not N-1 for a power of two N");
    }
    if (angles.kind != AngleKind::RotationY) {
        throw InputError("top-down loader needs a rotation-y angle tree");
    }
    const std::size_t n = log2_exact(dim);

    PreparedRegister reg;
    reg.n = n;
    reg.circuit = Circuit(n, {"", "mottonen", {}});
    for (std::size_t k = 0; k < angles.size(); ++k) {
        const std::size_t level = heap::level(k);
        if (level == 0) {
            reg.circuit.append(Gate::ry(0, angles[k]));
            continue;
        }
        const std::size_t position = k - ((std::size_t{1} << level) - 1);
        std::vector<Qubit> controls(level);
        std::iota(controls.begin(), controls.end(), Qubit{0});
        std::vector<bool> pattern(level);
        for (std::size_t i = 0; i < level; ++i) {
            pattern[i] = ((position >> (level - 1 - i)) & 1U) != 0;
        }
        reg.circuit.append(
            Gate::pcry(std::move(controls), std::move(pattern), level, angles[k]));
    }
    reg.data_qubits.resize(n);
    std::iota(reg.data_qubits.begin(), reg.data_qubits.end(), Qubit{0});
    reg.sync_metadata();
    return reg;
}

PreparedRegister prepare_mottonen(const InputVector &x) {
    if (!x.is_real()) {
        throw InputError("the top-down loader supports real vectors only");
    }
    const auto values = x.real_parts();
    return mottonen_circuit(gen_angles(values));
}

} // namespace qdcprep
