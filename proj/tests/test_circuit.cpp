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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdcprep/circuit.hpp"
#include "qdcprep/errors.hpp"
#include "qdcprep/statevector.hpp"
#include "qdcprep/synthesis.hpp"
#include "test_support.hpp"

using namespace qdcprep;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

// Columns of the circuit unitary, one simulation per basis input.
std::vector<std::vector<Complex>> unitary_columns(const Circuit &c) {
    const std::size_t dim = std::size_t{1} << c.width();
    std::vector<std::vector<Complex>> cols;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Complex> basis(dim);
        basis[i] = 1.0;
        const StateVector out = simulate(c, StateVector(std::move(basis)));
        cols.emplace_back(out.amplitudes().begin(), out.amplitudes().end());
    }
    return cols;
}

// Largest entrywise deviation after removing one global phase.
double unitary_distance(const Circuit &a, const Circuit &b) {
    const auto ua = unitary_columns(a);
    const auto ub = unitary_columns(b);
    // Anchor the phase at the largest entry of the first column.
    std::size_t anchor = 0;
    for (std::size_t r = 0; r < ua[0].size(); ++r) {
        if (std::abs(ua[0][r]) > std::abs(ua[0][anchor])) {
            anchor = r;
        }
    }
    const Complex phase = ub[0][anchor] / ua[0][anchor];
    double worst = 0.0;
    for (std::size_t c = 0; c < ua.size(); ++c) {
        for (std::size_t r = 0; r < ua[c].size(); ++r) {
            worst = std::max(worst, std::abs(ua[c][r] * phase - ub[c][r]));
        }
    }
    return worst;
}

// Longest path in the gate dependency DAG, computed by scanning all earlier
// gates for shared wires.
std::size_t longest_chain(const Circuit &c) {
    const auto &gates = c.gates();
    std::vector<std::size_t> chain(gates.size(), 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const bool shares = std::any_of(
                gates[i].qubits.begin(), gates[i].qubits.end(), [&](Qubit q) {
                    return std::find(gates[j].qubits.begin(), gates[j].qubits.end(),
                                     q) != gates[j].qubits.end();
                });
            if (shares) {
                chain[i] = std::max(chain[i], chain[j] + 1);
            }
        }
        best = std::max(best, chain[i]);
    }
    return best;
}

} // namespace

TEST_CASE("append and layered depth", "[circuit]") {
    SECTION("single CNOT") {
        Circuit c(2);
        c.append(Gate::cnot(0, 1));
        CHECK(c.size() == 1);
        CHECK(depth(c).depth == 1);
    }
    SECTION("disjoint supports share a layer") {
        Circuit c(3);
        c.append(Gate::cnot(0, 1)).append(Gate::ry(2, 0.3));
        CHECK(depth(c).depth == 1);
    }
    SECTION("shared qubit serializes") {
        Circuit c(3);
        c.append(Gate::cnot(0, 1)).append(Gate::cnot(1, 2));
        const DepthReport r = depth(c);
        CHECK(r.depth == 2);
        CHECK(r.width == 3);
        CHECK(r.gate_counts.at("CNOT") == 2);
    }
    SECTION("empty circuit") { CHECK(depth(Circuit(4)).depth == 0); }
}

TEST_CASE("append rejects invalid gates", "[circuit]") {
    Circuit c(3);
    CHECK_THROWS_AS(c.append(Gate::cnot(0, 3)), IRError);
    CHECK_THROWS_AS(c.append(Gate::cnot(1, 1)), IRError);
    CHECK_THROWS_AS(c.append(Gate::cswap(0, 2, 2)), IRError);
    CHECK_THROWS_AS(c.append(Gate::ry(0, std::nan(""))), IRError);
    Gate bad = Gate::pcry({0, 1}, {true}, 2, 0.1);
    CHECK_THROWS_AS(c.append(bad), IRError);
    Gate wrong_arity{GateKind::CNOT, {0}, 0.0, {}};
    CHECK_THROWS_AS(c.append(wrong_arity), IRError);
    CHECK(c.empty());
}

TEST_CASE("dc circuit depth follows the layer sum", "[circuit][depth]") {
    std::mt19937_64 rng(3);
    SECTION("N = 8") {
        const auto x = testing::random_real_input(8, rng);
        CHECK(depth(prepare_dc(x).circuit).depth == 4);
    }
    SECTION("N = 2^n for n <= 10, cross-checked with the DAG longest path") {
        for (std::size_t n = 1; n <= 10; ++n) {
            const auto x = testing::random_real_input(std::size_t{1} << n, rng);
            const Circuit c = prepare_dc(x).circuit;
            const std::size_t d = depth(c).depth;
            CHECK(d == 1 + n * (n - 1) / 2);
            CHECK(d == longest_chain(c));
        }
    }
    SECTION("single gate") {
        Circuit c(1);
        c.append(Gate::h(0));
        CHECK(depth(c).depth == 1);
    }
}

TEST_CASE("depth is monotone under appends", "[circuit][property]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Circuit base = testing::random_circuit(5, 30, rng);
        Circuit grown = base;
        const Circuit extra = testing::random_circuit(5, 1, rng);
        grown.append(extra.gates().front());
        const std::size_t before = depth(base).depth;
        const std::size_t after = depth(grown).depth;
        REQUIRE(after >= before);
        REQUIRE(after <= before + 1);
        REQUIRE(depth(base).depth == before);
    }
}

TEST_CASE("decompose fixed points and counts", "[circuit][decompose]") {
    SECTION("X is untouched") {
        Circuit c(1);
        c.append(Gate::x(0));
        CHECK(decompose(c) == c);
    }
    SECTION("CSWAP becomes eight CNOTs") {
        Circuit c(3);
        c.append(Gate::cswap(0, 1, 2));
        const Circuit d = decompose(c);
        CHECK(d.count(GateKind::CNOT) == 8);
        CHECK(d.count(GateKind::CSWAP) == 0);
        for (const Gate &g : d.gates()) {
            CHECK(g.qubits.size() <= 2);
        }
        CHECK(unitary_distance(c, d) < 1e-12);
    }
    SECTION("singly controlled rotation: 2 RY + 2 CNOT") {
        Circuit c(2);
        c.append(Gate::pcry({0}, {true}, 1, 0.83));
        const Circuit d = decompose(c);
        CHECK(d.count(GateKind::RY) == 2);
        CHECK(d.count(GateKind::CNOT) == 2);
        CHECK(d.size() == 4);
        CHECK(unitary_distance(c, d) < 1e-12);
    }
    SECTION("open controls are conjugated with X") {
        Circuit c(3);
        c.append(Gate::pcry({0, 1}, {false, true}, 2, -1.2));
        const Circuit d = decompose(c);
        CHECK(d.count(GateKind::X) == 2);
        CHECK(unitary_distance(c, d) < 1e-12);
    }
}

TEST_CASE("decomposition preserves the unitary", "[circuit][decompose][property]") {
    std::mt19937_64 rng(5);
    for (std::size_t width = 1; width <= 6; ++width) {
        for (int trial = 0; trial < 10; ++trial) {
            const Circuit c = testing::random_circuit(width, 12, rng);
            REQUIRE(unitary_distance(c, decompose(c)) < 1e-10);
        }
    }
}

TEST_CASE("QASM export", "[circuit][export]") {
    SECTION("rotation") {
        Circuit c(1);
        c.append(Gate::ry(0, 0.5));
        const std::string text = export_circuit(c, ExportFormat::Qasm);
        CHECK_THAT(text, ContainsSubstring("OPENQASM 2.0;"));
        CHECK_THAT(text, ContainsSubstring("qreg q[1];"));
        CHECK_THAT(text, ContainsSubstring("ry(0.5) q[0];"));
    }
    SECTION("controlled swap") {
        Circuit c(3);
        c.append(Gate::cswap(0, 1, 2));
        CHECK_THAT(export_circuit(c, ExportFormat::Qasm),
                   ContainsSubstring("cswap q[0],q[1],q[2];"));
    }
    SECTION("pattern-controlled rotations need decomposition") {
        Circuit c(2);
        c.append(Gate::pcry({0}, {false}, 1, 0.1));
        CHECK_THROWS_AS(export_circuit(c, ExportFormat::Qasm), ExportError);
        CHECK_NOTHROW(export_circuit(decompose(c), ExportFormat::Qasm));
    }
}

TEST_CASE("JSON export round-trips", "[circuit][export][property]") {
    SECTION("proof-of-concept circuit") {
        const auto x = InputVector::from_real(std::vector<double>{
            std::sqrt(0.6), std::sqrt(0.2), std::sqrt(0.1), std::sqrt(0.1)});
        const PreparedRegister reg = prepare_dc(x);
        const Circuit back = import_json(export_circuit(reg.circuit, ExportFormat::Json));
        CHECK(back == reg.circuit);
        CHECK(back.metadata().roles.at("data") == std::vector<Qubit>{0, 1});
    }
    SECTION("random circuits") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 100; ++trial) {
            Circuit c = testing::random_circuit(1 + trial % 7, 25, rng);
            c.metadata().name = "trial-" + std::to_string(trial);
            c.metadata().roles["data"] = {0};
            REQUIRE(import_json(export_circuit(c, ExportFormat::Json)) == c);
        }
    }
    SECTION("malformed documents") {
        CHECK_THROWS_AS(import_json("{"), IRError);
        CHECK_THROWS_AS(import_json(R"({"width": 1, "gates": [{"kind": "FOO", "qubits": [0]}]})"),
                        IRError);
        CHECK_THROWS_AS(import_json(R"({"width": 1, "gates": [{"kind": "CNOT", "qubits": [0, 1]}]})"),
                        IRError);
    }
}
