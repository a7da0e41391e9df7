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

#include "qdcprep/swap_stats.hpp"

#include <cmath>

#include <json.hpp>

#include "qdcprep/errors.hpp"
#include "qdcprep/synthesis.hpp"

namespace qdcprep {

namespace {

constexpr Qubit kTestQubit = 0;

PreparedRegister prepared(const InputVector &v, bool labels) {
    PreparedRegister reg = prepare_dc(v);
    return labels ? add_orthonormal_labels(std::move(reg)) : reg;
}

void require_same_length(const InputVector &a, const InputVector &b) {
    if (a.size() != b.size()) {
        throw DimensionError("vectors of length " + std::to_string(a.size()) +
                             " and " + std::to_string(b.size()) +
                             " cannot be compared");
    }
}

// Lays out the registers after the test qubit and returns each register's
// data wires in the combined circuit.
Circuit stack_registers(const std::vector<PreparedRegister> &regs,
                        std::vector<std::vector<Qubit>> &data) {
    std::size_t width = 1;
    for (const auto &r : regs) {
        width += r.circuit.width();
    }
    Circuit circuit(width, {"", "swap-test", {}});
    std::size_t offset = 1;
    for (const auto &r : regs) {
        circuit.append_circuit(r.circuit, offset);
        std::vector<Qubit> wires;
        for (Qubit q : r.data_qubits) {
            wires.push_back(q + offset);
        }
        data.push_back(std::move(wires));
        offset += r.circuit.width();
    }
    return circuit;
}

StatReport run_test(const Circuit &circuit, StatisticKind kind,
                    const SwapTestOptions &options) {
    const StateVector state = simulate(circuit, options.simulator);
    const Qubit wire[] = {kTestQubit};
    const auto probs = marginal(state, wire);

    StatReport report;
    report.kind = kind;
    report.probability_zero = probs[0];
    report.exact_value = probs[0] - probs[1];
    if (options.sampling.shots) {
        const auto shots = *options.sampling.shots;
        const ShotResult result = sample(state, wire, shots, options.sampling.seed);
        const auto it = result.counts.find("0");
        const double zeros =
            it == result.counts.end() ? 0.0 : static_cast<double>(it->second);
        report.sampled_value = (2.0 * zeros - static_cast<double>(shots)) /
                               static_cast<double>(shots);
        report.shots = shots;
        report.seed = options.sampling.seed;
    }
    return report;
}

// value -> scale * value - offset, applied to both exact and sampled values.
void rescale(StatReport &report, double scale, double offset) {
    report.exact_value = scale * report.exact_value - offset;
    if (report.sampled_value) {
        *report.sampled_value = scale * *report.sampled_value - offset;
    }
}

} // namespace

std::string_view to_string(StatisticKind kind) noexcept {
    switch (kind) {
    case StatisticKind::Overlap:
        return "overlap";
    case StatisticKind::Expectation:
        return "expectation";
    case StatisticKind::SecondMoment:
        return "second_moment";
    case StatisticKind::Variance:
        return "variance";
    case StatisticKind::Covariance:
        return "covariance";
    case StatisticKind::ExyCyclic:
        return "exy_cyclic";
    }
    return "?";
}

std::string to_json(const StatReport &report) {
    nlohmann::json doc;
    doc["statistic_kind"] = to_string(report.kind);
    doc["exact_value"] = report.exact_value;
    doc["probability_zero"] = report.probability_zero;
    doc["sampled_value"] = report.sampled_value ? nlohmann::json(*report.sampled_value)
                                                : nlohmann::json(nullptr);
    doc["shots"] = report.shots ? nlohmann::json(*report.shots) : nlohmann::json(nullptr);
    doc["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json(nullptr);
    return doc.dump(2) + "\n";
}

Circuit swap_test_circuit(const InputVector &x, const InputVector &y,
                          bool labels) {
    require_same_length(x, y);
    std::vector<std::vector<Qubit>> data;
    Circuit circuit = stack_registers({prepared(x, labels), prepared(y, labels)}, data);
    circuit.append(Gate::h(kTestQubit));
    for (std::size_t i = 0; i < data[0].size(); ++i) {
        circuit.append(Gate::cswap(kTestQubit, data[0][i], data[1][i]));
    }
    circuit.append(Gate::h(kTestQubit));
    return circuit;
}

StatReport swap_test_overlap(const InputVector &x, const InputVector &y,
                             const SwapTestOptions &options) {
    return run_test(swap_test_circuit(x, y, options.labels),
                    StatisticKind::Overlap, options);
}

StatReport moment_statistics(const InputVector &x, const InputVector &y,
                             MomentMode mode, const SwapTestOptions &options,
                             std::optional<double> expectation_squared) {
    if (mode == MomentMode::Variance && !expectation_squared) {
        throw InputError("variance needs E(X)^2 as input");
    }
    StatReport report = swap_test_overlap(x, y, options);
    switch (mode) {
    case MomentMode::Expectation:
        report.kind = StatisticKind::Expectation;
        break;
    case MomentMode::SecondMoment:
        report.kind = StatisticKind::SecondMoment;
        break;
    case MomentMode::Variance:
        report.kind = StatisticKind::Variance;
        rescale(report, 1.0, *expectation_squared);
        break;
    case MomentMode::CovarianceUniform: {
        report.kind = StatisticKind::Covariance;
        // Uniform weights: E(XY) = (1/N) sum_i |x_i|^2 |y_i|^2.
        const auto n = static_cast<double>(x.size());
        rescale(report, 1.0 / n, 1.0 / (n * n));
        break;
    }
    }
    return report;
}

InputVector distribution_amplitudes(std::span<const double> p) {
    double total = 0.0;
    std::vector<double> amps;
    amps.reserve(p.size());
    for (double v : p) {
        if (!(v >= 0.0)) {
            throw DistributionError("probability " + std::to_string(v) +
                                    " is negative or not a number");
        }
        total += v;
        amps.push_back(std::sqrt(v));
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw DistributionError("probabilities sum to " + std::to_string(total));
    }
    return InputVector::from_real(amps);
}

Circuit cyclic_test_circuit(const InputVector &px_amplitudes,
                            const InputVector &x,
                            const InputVector &py_amplitudes,
                            const InputVector &y) {
    require_same_length(px_amplitudes, x);
    require_same_length(x, py_amplitudes);
    require_same_length(py_amplitudes, y);
    std::vector<std::vector<Qubit>> data;
    Circuit circuit = stack_registers({prepared(px_amplitudes, true),
                                       prepared(x, true),
                                       prepared(py_amplitudes, true),
                                       prepared(y, true)},
                                      data);
    circuit.append(Gate::h(kTestQubit));
    // Three adjacent register swaps rotate (R1, R2, R3, R4) to (R2, R3, R4, R1).
    for (std::size_t stage = 0; stage < 3; ++stage) {
        for (std::size_t i = 0; i < data[stage].size(); ++i) {
            circuit.append(Gate::cswap(kTestQubit, data[stage][i], data[stage + 1][i]));
        }
    }
    circuit.append(Gate::h(kTestQubit));
    return circuit;
}

StatReport cyclic_exy(std::span<const double> px, const InputVector &x,
                      std::span<const double> py, const InputVector &y,
                      const SwapTestOptions &options) {
    const InputVector px_amps = distribution_amplitudes(px);
    const InputVector py_amps = distribution_amplitudes(py);
    return run_test(cyclic_test_circuit(px_amps, x, py_amps, y),
                    StatisticKind::ExyCyclic, options);
}

CovarianceResult covariance_matrix(std::span<const InputVector> xs,
                                   std::span<const InputVector> ys,
                                   std::span<const double> px,
                                   std::span<const double> py,
                                   const SwapTestOptions &options) {
    if (xs.empty() || xs.size() != ys.size()) {
        throw DimensionError("covariance needs m >= 1 variables on each side");
    }
    const std::size_t m = xs.size();
    const std::size_t dim = xs.front().size();
    const InputVector px_amps = distribution_amplitudes(px);
    const InputVector py_amps = distribution_amplitudes(py);

    SwapTestOptions exact = options;
    exact.sampling.shots.reset();

    std::vector<double> ex(m);
    std::vector<double> ey(m);
    for (std::size_t a = 0; a < m; ++a) {
        ex[a] = swap_test_overlap(xs[a], px_amps, exact).exact_value;
        ey[a] = swap_test_overlap(ys[a], py_amps, exact).exact_value;
    }

    CovarianceResult result;
    result.m = m;
    result.matrix.resize(m * m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            const double exy = cyclic_exy(px, xs[a], py, ys[b], exact).exact_value;
            result.matrix[a * m + b] = exy - ex[a] * ey[b];
        }
    }
    result.cost = {m, dim, m * m + 2 * m, dim * m * m};
    return result;
}

} // namespace qdcprep
