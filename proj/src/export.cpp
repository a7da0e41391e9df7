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

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "qdcprep/circuit.hpp"
#include "qdcprep/errors.hpp"

namespace qdcprep {

namespace {

using nlohmann::json;

// Shortest text that parses back to the same double.
std::string format_angle(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return {buf, res.ptr};
}

std::string qasm_name(GateKind kind) {
    switch (kind) {
    case GateKind::RY:
        return "ry";
    case GateKind::RZ:
        return "rz";
    case GateKind::X:
        return "x";
    case GateKind::H:
        return "h";
    case GateKind::CNOT:
        return "cx";
    case GateKind::SWAP:
        return "swap";
    case GateKind::CSWAP:
        return "cswap";
    case GateKind::PCRY:
        break;
    }
    throw ExportError("gate " + std::string(to_string(kind)) +
                      " has no OpenQASM 2.0 form; decompose the circuit first");
}

std::string to_qasm(const Circuit &circuit) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    const auto &meta = circuit.metadata();
    if (!meta.name.empty()) {
        os << "// name: " << meta.name << "\n";
    }
    if (!meta.source.empty()) {
        os << "// source: " << meta.source << "\n";
    }
    for (const auto &[role, qubits] : meta.roles) {
        os << "// " << role << ":";
        for (Qubit q : qubits) {
            os << ' ' << q;
        }
        os << "\n";
    }
    os << "qreg q[" << circuit.width() << "];\n";
    for (const Gate &g : circuit.gates()) {
        os << qasm_name(g.kind);
        if (g.has_angle()) {
            os << '(' << format_angle(g.angle) << ')';
        }
        os << ' ';
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
            os << (i ? "," : "") << "q[" << g.qubits[i] << ']';
        }
        os << ";\n";
    }
    return os.str();
}

json gate_to_json(const Gate &g) {
    json j;
    j["kind"] = to_string(g.kind);
    j["qubits"] = g.qubits;
    if (g.has_angle()) {
        j["angle"] = g.angle;
    }
    if (g.kind == GateKind::PCRY) {
        std::string pattern;
        for (bool b : g.pattern) {
            pattern.push_back(b ? '1' : '0');
        }
        j["pattern"] = pattern;
    }
    return j;
}

std::string to_json(const Circuit &circuit) {
    json doc;
    doc["width"] = circuit.width();
    json gates = json::array();
    for (const Gate &g : circuit.gates()) {
        gates.push_back(gate_to_json(g));
    }
    doc["gates"] = std::move(gates);
    const auto &meta = circuit.metadata();
    doc["metadata"] = {{"name", meta.name},
                       {"source", meta.source},
                       {"roles", meta.roles}};
    return doc.dump(2) + "\n";
}

Gate gate_from_json(const json &j) {
    Gate g;
    g.kind = gate_kind_from_string(j.at("kind").get<std::string>());
    g.qubits = j.at("qubits").get<std::vector<Qubit>>();
    if (g.has_angle()) {
        g.angle = j.at("angle").get<double>();
    }
    if (g.kind == GateKind::PCRY) {
        for (char c : j.at("pattern").get<std::string>()) {
            if (c != '0' && c != '1') {
                throw IRError("PCRY pattern must be a bitstring");
            }
            g.pattern.push_back(c == '1');
        }
    }
    return g;
}

} // namespace

std::string export_circuit(const Circuit &circuit, ExportFormat format) {
    return format == ExportFormat::Qasm ? to_qasm(circuit) : to_json(circuit);
}

Circuit import_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        CircuitMetadata meta;
        if (doc.contains("metadata")) {
            const auto &m = doc.at("metadata");
            meta.name = m.value("name", "");
            meta.source = m.value("source", "");
            if (m.contains("roles")) {
                meta.roles =
                    m.at("roles").get<std::map<std::string, std::vector<Qubit>>>();
            }
        }
        Circuit circuit(doc.at("width").get<std::size_t>(), std::move(meta));
        for (const auto &g : doc.at("gates")) {
            circuit.append(gate_from_json(g));
        }
        return circuit;
    } catch (const json::exception &e) {
        throw IRError(std::string("malformed circuit JSON: ") + e.what());
    }
}

} // namespace qdcprep
