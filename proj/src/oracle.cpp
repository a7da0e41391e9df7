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
#include <cmath>
#include <cstdint>
#include <utility>

#include "qdcprep/errors.hpp"
#include "qdcprep/synthesis.hpp"

namespace qdcprep {

namespace {

using Term = std::pair<std::uint64_t, Complex>;

struct NodeState {
    Complex zero;
    Complex one;
};

class OracleBuilder {
  public:
    OracleBuilder(const InputVector &x, std::size_t total_width)
        : x_(x), nodes_(x.size() - 1), n_(x.num_qubits()),
          total_width_(total_width) {}

    std::vector<Term> build(std::size_t k) const {
        const NodeState c = node_state(k);
        const std::uint64_t own = mask(k);
        if (heap::left(k) >= nodes_) {
            return {{0, c.zero}, {own, c.one}};
        }

        const auto left = build(heap::left(k));
        const auto right = build(heap::right(k));
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
        for (std::size_t l = heap::left(k), r = heap::right(k); r < nodes_;
             l = heap::left(l), r = heap::left(r)) {
            pairs.emplace_back(mask(l), mask(r));
        }

        std::vector<Term> out;
        out.reserve(2 * left.size() * right.size());
        for (const auto &[li, la] : left) {
            for (const auto &[ri, ra] : right) {
                const std::uint64_t base = li | ri;
                const Complex amp = la * ra;
                out.emplace_back(base, c.zero * amp);
                out.emplace_back(exchange(base, pairs) | own, c.one * amp);
            }
        }
        return out;
    }

    [[nodiscard]] std::uint64_t mask(Qubit q) const {
        return std::uint64_t{1} << (total_width_ - 1 - q);
    }

  private:
    static std::uint64_t
    exchange(std::uint64_t index,
             const std::vector<std::pair<std::uint64_t, std::uint64_t>> &pairs) {
        for (const auto &[a, b] : pairs) {
            const bool va = (index & a) != 0;
            const bool vb = (index & b) != 0;
            if (va != vb) {
                index ^= a | b;
            }
        }
        return index;
    }

    // Single-qubit state of wire k before any merge.
    [[nodiscard]] NodeState node_state(std::size_t k) const {
        const std::size_t level = heap::level(k);
        const std::size_t v = n_ - level;
        const std::size_t j = k - ((std::size_t{1} << level) - 1) + 1;

        if (x_.is_real() && v == 1) {
            // Leaf pairs keep the signs of the entries.
            const double a = x_[2 * (j - 1)].real();
            const double b = x_[2 * (j - 1) + 1].real();
            const double norm = std::sqrt(a * a + b * b);
            if (norm == 0.0) {
                return {1.0, 0.0};
            }
            return {a / norm, b / norm};
        }

        const TreeParams p = tree_params(x_, j, v);
        const double cos_half = std::sqrt(std::max(0.0, 1.0 - p.beta * p.beta));
        if (x_.is_real()) {
            return {cos_half, p.beta};
        }
        const Complex phase = std::polar(1.0, p.lambda / 2.0);
        return {std::conj(phase) * cos_half, phase * p.beta};
    }

    const InputVector &x_;
    std::size_t nodes_;
    std::size_t n_;
    std::size_t total_width_;
};

} // namespace

StateVector expected_entangled_state(const InputVector &x, bool with_labels,
                                     SimulatorOptions options) {
    const std::size_t nodes = x.size() - 1;
    const std::size_t n = x.num_qubits();
    const std::size_t width = nodes + (with_labels ? n : 0);
    if (width > options.max_qubits) {
        throw ResourceError("oracle state of " + std::to_string(width) +
                            " qubits exceeds the cap of " +
                            std::to_string(options.max_qubits));
    }

    const OracleBuilder builder(x, width);
    const auto terms = builder.build(0);

    std::vector<Qubit> data;
    for (std::size_t k = 0; k < nodes; k = heap::left(k)) {
        data.push_back(k);
    }

    std::vector<Complex> amps(std::size_t{1} << width);
    for (const auto &[index, amp] : terms) {
        std::uint64_t full = index;
        if (with_labels) {
            for (std::size_t i = 0; i < data.size(); ++i) {
                if (index & builder.mask(data[i])) {
                    full |= builder.mask(nodes + i);
                }
            }
        }
        amps[full] += amp;
    }
    return StateVector(std::move(amps), options);
}

} // namespace qdcprep
