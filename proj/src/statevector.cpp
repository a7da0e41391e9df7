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

#include "qdcprep/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <json.hpp>

#include "qdcprep/angles.hpp"
#include "qdcprep/errors.hpp"
#include "qdcprep/kernels.hpp"

namespace qdcprep {

namespace {

// Reductions split the index range into chunks of this fixed size and fold
// the chunk results pairwise, so the summation order never depends on the
// worker count.
constexpr std::size_t kChunk = std::size_t{1} << 14;

unsigned bit_of(std::size_t num_qubits, Qubit q) {
    return static_cast<unsigned>(num_qubits - 1 - q);
}

double pairwise_fold(std::vector<double> values) {
    if (values.empty()) {
        return 0.0;
    }
    while (values.size() > 1) {
        std::vector<double> next((values.size() + 1) / 2);
        for (std::size_t i = 0; i < next.size(); ++i) {
            const std::size_t a = 2 * i;
            next[i] = values[a] + (a + 1 < values.size() ? values[a + 1] : 0.0);
        }
        values.swap(next);
    }
    return values.front();
}

void validate_subset(const StateVector &state, std::span<const Qubit> qubits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= state.num_qubits()) {
            throw IRError("qubit " + std::to_string(qubits[i]) +
                          " out of range for " +
                          std::to_string(state.num_qubits()) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[i] == qubits[j]) {
                throw IRError("duplicate qubit " + std::to_string(qubits[i]));
            }
        }
    }
}

std::size_t outcome_of(std::uint64_t index, std::size_t num_qubits,
                       std::span<const Qubit> qubits) {
    std::size_t k = 0;
    for (Qubit q : qubits) {
        k = (k << 1) | ((index >> bit_of(num_qubits, q)) & 1U);
    }
    return k;
}

void check_width(std::size_t num_qubits, const SimulatorOptions &options) {
    if (num_qubits > options.max_qubits) {
        throw ResourceError(std::to_string(num_qubits) +
                            " qubits exceed the simulator cap of " +
                            std::to_string(options.max_qubits));
    }
}

} // namespace

std::array<Complex, 4> single_qubit_matrix(GateKind kind, double angle) {
    using namespace std::complex_literals;
    switch (kind) {
    case GateKind::RY:
    case GateKind::PCRY: {
        const double c = std::cos(angle / 2.0);
        const double s = std::sin(angle / 2.0);
        return {Complex{c}, Complex{-s}, Complex{s}, Complex{c}};
    }
    case GateKind::RZ:
        return {std::exp(-0.5i * angle), Complex{}, Complex{},
                std::exp(0.5i * angle)};
    case GateKind::X:
        return {Complex{}, Complex{1.0}, Complex{1.0}, Complex{}};
    case GateKind::H: {
        const double r = 1.0 / std::numbers::sqrt2;
        return {Complex{r}, Complex{r}, Complex{r}, Complex{-r}};
    }
    case GateKind::CNOT:
        return single_qubit_matrix(GateKind::X, 0.0);
    case GateKind::SWAP:
    case GateKind::CSWAP:
        break;
    }
    throw IRError(std::string(to_string(kind)) + " is not a single-qubit operator");
}

StateVector::StateVector(std::size_t num_qubits, SimulatorOptions options)
    : num_qubits_(num_qubits), options_(options) {
    check_width(num_qubits, options_);
    amps_.assign(std::size_t{1} << num_qubits, Complex{});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<Complex> amplitudes,
                         SimulatorOptions options)
    : num_qubits_(log2_exact(amplitudes.size())), amps_(std::move(amplitudes)),
      options_(options) {
    if (!is_power_of_two(amps_.size())) {
        throw DimensionError("state length " + std::to_string(amps_.size()) +
                             " is not a power of two");
    }
    check_width(num_qubits_, options_);
}

void StateVector::apply(const Gate &gate) {
    validate_gate(gate, num_qubits_);
    const bool parallel = options_.backend == Backend::Parallel;
    const auto apply_matrix = parallel ? kernels::omp::apply_matrix
                                       : kernels::serial::apply_matrix;
    const auto apply_swap =
        parallel ? kernels::omp::apply_swap : kernels::serial::apply_swap;
    const auto bit = [this](Qubit q) { return bit_of(num_qubits_, q); };
    const auto matrix = [](GateKind kind, double angle) {
        const auto m = single_qubit_matrix(kind, angle);
        return kernels::Matrix2{m[0], m[1], m[2], m[3]};
    };

    switch (gate.kind) {
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::X:
    case GateKind::H:
        apply_matrix(amps_, bit(gate.qubits[0]), matrix(gate.kind, gate.angle), {});
        break;
    case GateKind::CNOT: {
        const std::uint64_t c = std::uint64_t{1} << bit(gate.qubits[0]);
        apply_matrix(amps_, bit(gate.qubits[1]), matrix(GateKind::X, 0.0), {c, c});
        break;
    }
    case GateKind::SWAP:
        apply_swap(amps_, bit(gate.qubits[0]), bit(gate.qubits[1]), {});
        break;
    case GateKind::CSWAP: {
        const std::uint64_t c = std::uint64_t{1} << bit(gate.qubits[0]);
        apply_swap(amps_, bit(gate.qubits[1]), bit(gate.qubits[2]), {c, c});
        break;
    }
    case GateKind::PCRY: {
        kernels::ControlMask ctrl;
        for (std::size_t i = 0; i < gate.pattern.size(); ++i) {
            const std::uint64_t m = std::uint64_t{1} << bit(gate.qubits[i]);
            ctrl.mask |= m;
            if (gate.pattern[i]) {
                ctrl.value |= m;
            }
        }
        apply_matrix(amps_, bit(gate.target()), matrix(GateKind::RY, gate.angle),
                     ctrl);
        break;
    }
    }
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.width() != num_qubits_) {
        throw IRError("circuit width " + std::to_string(circuit.width()) +
                      " does not match state of " + std::to_string(num_qubits_) +
                      " qubits");
    }
    for (const Gate &g : circuit.gates()) {
        apply(g);
    }
}

double StateVector::norm_squared() const {
    const std::size_t chunks = (amps_.size() + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
    const auto n = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static) if (n > 1)
    for (std::int64_t c = 0; c < n; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
        const std::size_t end = std::min(begin + kChunk, amps_.size());
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            s += std::norm(amps_[i]);
        }
        partial[static_cast<std::size_t>(c)] = s;
    }
    return pairwise_fold(std::move(partial));
}

StateVector simulate(const Circuit &circuit, SimulatorOptions options) {
    check_width(circuit.width(), options);
    StateVector state(circuit.width(), options);
    state.apply(circuit);
    return state;
}

StateVector simulate(const Circuit &circuit, StateVector initial) {
    initial.apply(circuit);
    return initial;
}

std::vector<double> marginal(const StateVector &state,
                             std::span<const Qubit> qubits) {
    validate_subset(state, qubits);
    const std::size_t outcomes = std::size_t{1} << qubits.size();
    const std::size_t dim = state.dimension();
    const std::size_t nq = state.num_qubits();
    const std::size_t chunks = (dim + kChunk - 1) / kChunk;
    const auto amps = state.amplitudes();

    if (outcomes > 4096) {
        // Wide subsets: one in-order pass, no per-chunk histograms.
        std::vector<double> probs(outcomes, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            probs[outcome_of(i, nq, qubits)] += std::norm(amps[i]);
        }
        return probs;
    }

    // chunk-major partial histograms: partial[c * outcomes + k]
    std::vector<double> partial(chunks * outcomes, 0.0);
    const auto n = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static) if (n > 1)
    for (std::int64_t c = 0; c < n; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
        const std::size_t end = std::min(begin + kChunk, dim);
        double *hist = partial.data() + static_cast<std::size_t>(c) * outcomes;
        for (std::size_t i = begin; i < end; ++i) {
            hist[outcome_of(i, nq, qubits)] += std::norm(amps[i]);
        }
    }
    std::vector<double> probs(outcomes);
    std::vector<double> column(chunks);
    for (std::size_t k = 0; k < outcomes; ++k) {
        for (std::size_t c = 0; c < chunks; ++c) {
            column[c] = partial[c * outcomes + k];
        }
        probs[k] = pairwise_fold(column);
    }
    return probs;
}

double expect_z(const StateVector &state, Qubit qubit) {
    const Qubit q[] = {qubit};
    const auto p = marginal(state, q);
    return p[0] - p[1];
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionError("inner product of states with different widths");
    }
    const std::size_t chunks = (a.dimension() + kChunk - 1) / kChunk;
    std::vector<double> re(chunks, 0.0);
    std::vector<double> im(chunks, 0.0);
    const auto n = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static) if (n > 1)
    for (std::int64_t c = 0; c < n; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
        const std::size_t end = std::min(begin + kChunk, a.dimension());
        Complex s{};
        for (std::size_t i = begin; i < end; ++i) {
            s += std::conj(a[i]) * b[i];
        }
        re[static_cast<std::size_t>(c)] = s.real();
        im[static_cast<std::size_t>(c)] = s.imag();
    }
    return {pairwise_fold(std::move(re)), pairwise_fold(std::move(im))};
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::abs(inner_product(a, b));
}

std::vector<Complex> block_gram(const StateVector &state,
                                std::span<const Qubit> qubits) {
    validate_subset(state, qubits);
    const std::size_t nq = state.num_qubits();
    const std::size_t outcomes = std::size_t{1} << qubits.size();
    const std::size_t rest = state.dimension() / outcomes;

    std::uint64_t selected = 0;
    for (Qubit q : qubits) {
        selected |= std::uint64_t{1} << bit_of(nq, q);
    }
    // blocks[k * rest + r]: amplitude with outcome k and remaining wires r
    std::vector<Complex> blocks(state.dimension());
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
        std::uint64_t r = 0;
        for (std::size_t b = nq; b-- > 0;) {
            if ((selected >> b) & 1U) {
                continue;
            }
            r = (r << 1) | ((i >> b) & 1U);
        }
        blocks[outcome_of(i, nq, qubits) * rest + r] = state[i];
    }

    std::vector<Complex> gram(outcomes * outcomes);
    for (std::size_t k = 0; k < outcomes; ++k) {
        for (std::size_t l = 0; l < outcomes; ++l) {
            Complex s{};
            for (std::size_t r = 0; r < rest; ++r) {
                s += std::conj(blocks[k * rest + r]) * blocks[l * rest + r];
            }
            gram[k * outcomes + l] = s;
        }
    }
    return gram;
}

ShotResult sample(const StateVector &state, std::span<const Qubit> qubits,
                  std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw InputError("sampling needs at least one shot");
    }
    const auto probs = marginal(state, qubits);
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> dist(probs.begin(), probs.end());
    std::vector<std::uint64_t> hits(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++hits[dist(rng)];
    }

    ShotResult result;
    result.shots = shots;
    result.seed = seed;
    for (std::size_t k = 0; k < hits.size(); ++k) {
        if (hits[k] == 0) {
            continue;
        }
        std::string bits(qubits.size(), '0');
        for (std::size_t b = 0; b < qubits.size(); ++b) {
            if ((k >> (qubits.size() - 1 - b)) & 1U) {
                bits[b] = '1';
            }
        }
        result.counts.emplace(std::move(bits), hits[k]);
    }
    return result;
}

std::string to_json(const ShotResult &result) {
    nlohmann::json doc;
    doc["counts"] = result.counts;
    doc["shots"] = result.shots;
    doc["seed"] = result.seed;
    return doc.dump(2) + "\n";
}

} // namespace qdcprep
