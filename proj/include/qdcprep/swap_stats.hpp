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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdcprep/angles.hpp"
#include "qdcprep/circuit.hpp"
#include "qdcprep/statevector.hpp"

namespace qdcprep {

enum class StatisticKind {
    Overlap,
    Expectation,
    SecondMoment,
    Variance,
    Covariance,
    ExyCyclic,
};

[[nodiscard]] std::string_view to_string(StatisticKind kind) noexcept;

struct StatReport {
    StatisticKind kind = StatisticKind::Overlap;
    double exact_value = 0.0;
    std::optional<double> sampled_value;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    /// P(ancilla = 0) of the underlying swap test.
    double probability_zero = 0.0;
};

[[nodiscard]] std::string to_json(const StatReport &report);

struct SamplingOptions {
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
};

struct SwapTestOptions {
    SamplingOptions sampling;
    /// Attach orthonormal label registers. Disabling them only serves to
    /// show the identity breaking when ancilla blocks overlap.
    bool labels = true;
    SimulatorOptions simulator;
};

/// Swap-test circuit over [test qubit | prep(x) | prep(y)] with one CSWAP
/// per data wire pair; the test qubit is wire 0.
[[nodiscard]] Circuit swap_test_circuit(const InputVector &x,
                                        const InputVector &y, bool labels);

/**
 * Loads x and y with the divide-and-conquer circuit (with labels), runs the
 * swap test and reports <sigma_z> of the test qubit, which equals
 * sum_i |x_i y_i|^2. Throws DimensionError on length mismatch and
 * ResourceError when the circuit is wider than the simulator cap.
 */
[[nodiscard]] StatReport swap_test_overlap(const InputVector &x,
                                           const InputVector &y,
                                           const SwapTestOptions &options = {});

enum class MomentMode { Expectation, SecondMoment, Variance, CovarianceUniform };

/**
 * Reads the swap-test value as a statistic: the expectation of X with
 * outcomes |x_i|^2 and probabilities |y_i|^2, the second moment of X with
 * outcomes x_i, the variance (needs `expectation_squared` = E(X)^2), or the
 * covariance of two uniform variables (value / N - 1/N^2).
 */
[[nodiscard]] StatReport
moment_statistics(const InputVector &x, const InputVector &y, MomentMode mode,
                  const SwapTestOptions &options = {},
                  std::optional<double> expectation_squared = std::nullopt);

/// Amplitude vector (sqrt(p_i)) of a probability distribution. Throws
/// DistributionError for negative entries or a total away from 1.
[[nodiscard]] InputVector distribution_amplitudes(std::span<const double> p);

/**
 * Four-register variant: loads sqrt(px), x, sqrt(py), y and, under the test
 * qubit, rotates the data registers by one position with 3n CSWAPs. The
 * reported value is sum_i px_i py_i |x_i|^2 |y_i|^2.
 */
[[nodiscard]] StatReport cyclic_exy(std::span<const double> px,
                                    const InputVector &x,
                                    std::span<const double> py,
                                    const InputVector &y,
                                    const SwapTestOptions &options = {});

[[nodiscard]] Circuit cyclic_test_circuit(const InputVector &px_amplitudes,
                                          const InputVector &x,
                                          const InputVector &py_amplitudes,
                                          const InputVector &y);

struct CovarianceCost {
    std::size_t m = 0;
    std::size_t dimension = 0;
    /// Circuit evaluations: m^2 cyclic tests plus 2m expectation tests.
    std::size_t quantum_runs = 0;
    /// Size of the classical double loop, N * m^2.
    std::size_t classical_term = 0;
};

struct CovarianceResult {
    /// Row-major m x m.
    std::vector<double> matrix;
    std::size_t m = 0;
    CovarianceCost cost;

    [[nodiscard]] double operator()(std::size_t a, std::size_t b) const {
        return matrix[a * m + b];
    }
};

/**
 * Entry (a, b) is E(X_a Y_b) from the cyclic test minus E(X_a) E(Y_b), the
 * latter two obtained from swap tests of X_a against sqrt(px) and of Y_b
 * against sqrt(py).
 */
[[nodiscard]] CovarianceResult
covariance_matrix(std::span<const InputVector> xs, std::span<const InputVector> ys,
                  std::span<const double> px, std::span<const double> py,
                  const SwapTestOptions &options = {});

} // namespace qdcprep
