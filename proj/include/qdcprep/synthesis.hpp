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
#include <optional>
#include <vector>

#include "qdcprep/angles.hpp"
#include "qdcprep/circuit.hpp"
#include "qdcprep/statevector.hpp"

namespace qdcprep {

/**
 * A synthesized preparation circuit together with its register roles.
 * `data_qubits` carry the encoded index (first entry most significant);
 * `ancilla_qubits` are the entangled work wires; `label_qubits` hold the
 * copy of the index added by add_orthonormal_labels.
 */
struct PreparedRegister {
    Circuit circuit;
    std::vector<Qubit> data_qubits;
    std::vector<Qubit> ancilla_qubits;
    std::vector<Qubit> label_qubits;
    /// Size of the data register, log2 of the encoded dimension.
    std::size_t n = 0;

    /// Writes the role map into the circuit metadata.
    void sync_metadata();
};

/**
 * Top-down loader on log2(N) qubits: node k of the angle tree becomes a
 * rotation on wire level(k), controlled by wires 0..level(k)-1 matching the
 * binary form of the node's position within its level. The root rotation
 * is a plain RY. Throws DimensionError for malformed trees.
 */
[[nodiscard]] PreparedRegister mottonen_circuit(const AngleTree &angles);

/**
 * Bottom-up divide-and-conquer loader on N-1 qubits. Wire k is rotated by
 * RY(angles_y[k]) (then RZ(angles_z[k]) when phases are given), after which
 * the subtrees are merged from the last internal node up to the root with
 * controlled swaps along the left spines. The data register is the left
 * spine {0, 1, 3, 7, ...}.
 */
[[nodiscard]] PreparedRegister
dc_circuit(const AngleTree &angles_y,
           const std::optional<AngleTree> &angles_z = std::nullopt);

/// Divide-and-conquer circuit for `x`: signed RY angles for real vectors,
/// magnitude RY angles plus RZ phase angles otherwise.
[[nodiscard]] PreparedRegister prepare_dc(const InputVector &x);

/// Top-down circuit for a real vector. Throws InputError for complex input.
[[nodiscard]] PreparedRegister prepare_mottonen(const InputVector &x);

/// Appends n label wires and copies each data wire onto its label with a
/// CNOT, making the ancilla blocks orthonormal. Throws IRError if labels
/// are already present.
[[nodiscard]] PreparedRegister add_orthonormal_labels(PreparedRegister reg);

/**
 * Hybrid loader: the N/k blocks of size `block` are each loaded top-down on
 * log2(block) wires, and the block registers are merged by the controlled
 * swap tree, one CSWAP per wire pair. `block == 2` reproduces dc_circuit.
 * Real input only. Throws DimensionError unless block is a power of two
 * with 2 <= block < N.
 */
[[nodiscard]] PreparedRegister hybrid_circuit(const InputVector &x,
                                              std::size_t block);

/**
 * Classical construction of the state prepare_dc(x) must produce, built by
 * recursion over the tree without gates: each wire starts in the single
 * qubit state given by the closed-form split parameters, and each merge
 * maps a|0>|l>|r> + b|1>|l>|r> to a|0>|l>|r> + b|1>|r'>|l'> with the spine
 * wires of the two subtrees exchanged. With `with_labels` the label
 * register of add_orthonormal_labels is appended.
 * Throws ResourceError beyond the simulator cap.
 */
[[nodiscard]] StateVector expected_entangled_state(const InputVector &x,
                                                   bool with_labels = false,
                                                   SimulatorOptions options = {});

} // namespace qdcprep
