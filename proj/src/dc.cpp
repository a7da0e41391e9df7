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

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "qdcprep/errors.hpp"
#include "qdcprep/synthesis.hpp"

namespace qdcprep {

namespace {

void require_tree(const AngleTree &tree, AngleKind kind, const char *what) {
    const std::size_t dim = tree.dimension();
    if (dim < 2 || !is_power_of_two(dim)) {
        throw DimensionError(std::string(what) + " tree of length " +
                             std::to_string(tree.size()) +
                             " is not N-1 for a power of two N");
    }
    if (tree.kind != kind) {
        throw InputError(std::string(what) + " tree has the wrong rotation kind");
    }
}

std::vector<Qubit> left_spine(std::size_t root, std::size_t nodes) {
    std::vector<Qubit> spine;
    for (std::size_t k = root; k < nodes; k = heap::left(k)) {
        spine.push_back(k);
    }
    return spine;
}

void fill_ancillas(PreparedRegister &reg) {
    std::vector<bool> used(reg.circuit.width(), false);
    for (Qubit q : reg.data_qubits) {
        used[q] = true;
    }
    for (Qubit q : reg.label_qubits) {
        used[q] = true;
    }
    reg.ancilla_qubits.clear();
    for (Qubit q = 0; q < used.size(); ++q) {
        if (!used[q]) {
            reg.ancilla_qubits.push_back(q);
        }
    }
}

} // namespace

PreparedRegister dc_circuit(const AngleTree &angles_y,
                            const std::optional<AngleTree> &angles_z) {
    require_tree(angles_y, AngleKind::RotationY, "rotation-y");
    if (angles_z) {
        require_tree(*angles_z, AngleKind::RotationZ, "rotation-z");
        if (angles_z->size() != angles_y.size()) {
            throw DimensionError("rotation-z tree length " +
                                 std::to_string(angles_z->size()) +
                                 " differs from rotation-y length " +
                                 std::to_string(angles_y.size()));
        }
    }
    const std::size_t dim = angles_y.dimension();
    const std::size_t width = dim - 1;

    PreparedRegister reg;
    reg.n = log2_exact(dim);
    reg.circuit = Circuit(width, {"", angles_z ? "dc-complex" : "dc", {}});
    for (std::size_t k = 0; k < width; ++k) {
        reg.circuit.append(Gate::ry(k, angles_y[k]));
    }
    if (angles_z) {
        for (std::size_t k = 0; k < width; ++k) {
            reg.circuit.append(Gate::rz(k, (*angles_z)[k]));
        }
    }

    // Merge subtrees bottom-up, starting at the last node with children.
    if (width >= 3) {
        for (auto actual = static_cast<std::int64_t>(heap::parent(width - 1));
             actual >= 0; --actual) {
            const auto node = static_cast<std::size_t>(actual);
            std::size_t left_index = heap::left(node);
            std::size_t right_index = heap::right(node);
            while (right_index < width) {
                reg.circuit.append(Gate::cswap(node, left_index, right_index));
                left_index = heap::left(left_index);
                right_index = heap::left(right_index);
            }
        }
    }

    reg.data_qubits = left_spine(0, width);
    fill_ancillas(reg);
    reg.sync_metadata();
    return reg;
}

PreparedRegister prepare_dc(const InputVector &x) {
    if (x.is_real()) {
        const auto values = x.real_parts();
        return dc_circuit(gen_angles(values));
    }
    const auto magnitudes = x.magnitudes();
    const auto phases = x.phases();
    return dc_circuit(gen_angles(magnitudes), gen_angles_z(phases));
}

PreparedRegister add_orthonormal_labels(PreparedRegister reg) {
    if (!reg.label_qubits.empty()) {
        throw IRError("register already carries label qubits");
    }
    const std::size_t base = reg.circuit.width();
    reg.circuit.widen(base + reg.data_qubits.size());
    for (std::size_t i = 0; i < reg.data_qubits.size(); ++i) {
        reg.label_qubits.push_back(base + i);
        reg.circuit.append(Gate::cnot(reg.data_qubits[i], base + i));
    }
    reg.circuit.metadata().source += "+labels";
    reg.sync_metadata();
    return reg;
}

PreparedRegister hybrid_circuit(const InputVector &x, std::size_t block) {
    const std::size_t dim = x.size();
    if (block < 2 || !is_power_of_two(block) || block >= dim) {
        throw DimensionError("block size " + std::to_string(block) +
                             " must be a power of two with 2 <= k < " +
                             std::to_string(dim));
    }
    if (!x.is_real()) {
        throw InputError("the hybrid loader supports real vectors only");
    }
    const std::size_t blocks = dim / block;
    const std::size_t internal = blocks - 1;
    const std::size_t block_width = log2_exact(block);
    const std::size_t width = internal + blocks * block_width;

    const auto values = x.real_parts();
    const AngleTree tree = gen_angles(values);

    // Virtual tree of 2*blocks - 1 nodes: internal nodes are single wires,
    // leaf b owns a register of block_width wires.
    const auto leaf_wires = [&](std::size_t leaf) {
        std::vector<Qubit> wires(block_width);
        std::iota(wires.begin(), wires.end(), internal + leaf * block_width);
        return wires;
    };
    const auto spine = [&](std::size_t node) {
        std::vector<Qubit> wires;
        while (node < internal) {
            wires.push_back(node);
            node = heap::left(node);
        }
        const auto tail = leaf_wires(node - internal);
        wires.insert(wires.end(), tail.begin(), tail.end());
        return wires;
    };

    PreparedRegister reg;
    reg.n = x.num_qubits();
    reg.circuit = Circuit(width, {"", "hybrid:" + std::to_string(block), {}});
    for (std::size_t k = 0; k < internal; ++k) {
        reg.circuit.append(Gate::ry(k, tree[k]));
    }
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto local = mottonen_circuit(subtree(tree, internal + b));
        reg.circuit.append_circuit(local.circuit, internal + b * block_width);
    }
    for (auto actual = static_cast<std::int64_t>(internal) - 1; actual >= 0;
         --actual) {
        const auto node = static_cast<std::size_t>(actual);
        const auto l = spine(heap::left(node));
        const auto r = spine(heap::right(node));
        for (std::size_t i = 0; i < l.size(); ++i) {
            reg.circuit.append(Gate::cswap(node, l[i], r[i]));
        }
    }

    reg.data_qubits = spine(0);
    fill_ancillas(reg);
    reg.sync_metadata();
    return reg;
}

} // namespace qdcprep
