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

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace qdcprep {

using Complex = std::complex<double>;

/// Accepted deviation of the Euclidean norm from one.
inline constexpr double kNormTolerance = 1e-8;

/**
 * A classical vector to be amplitude encoded. Length is a power of two
 * (N >= 2) and the entries have unit Euclidean norm.
 */
class InputVector {
  public:
    /// Validates length and norm. With `normalize` the entries are divided
    /// by their norm instead of rejecting a non-unit vector.
    static InputVector from_complex(std::vector<Complex> entries,
                                    bool normalize = false);
    static InputVector from_real(std::span<const double> entries,
                                 bool normalize = false);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    /// log2 of the length.
    [[nodiscard]] std::size_t num_qubits() const noexcept;
    [[nodiscard]] const std::vector<Complex> &entries() const noexcept {
        return entries_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t k) const {
        return entries_[k];
    }

    /// True when every imaginary part is exactly zero.
    [[nodiscard]] bool is_real() const noexcept;
    [[nodiscard]] std::vector<double> real_parts() const;
    [[nodiscard]] std::vector<double> magnitudes() const;
    /// Phases via std::arg; zero entries get phase 0.
    [[nodiscard]] std::vector<double> phases() const;

  private:
    explicit InputVector(std::vector<Complex> entries)
        : entries_(std::move(entries)) {}

    std::vector<Complex> entries_;
};

enum class AngleKind { RotationY, RotationZ };

/// Heap-ordered rotation angles: node k has children 2k+1 and 2k+2.
struct AngleTree {
    std::vector<double> angles;
    AngleKind kind = AngleKind::RotationY;

    [[nodiscard]] std::size_t size() const noexcept { return angles.size(); }
    [[nodiscard]] double operator[](std::size_t k) const { return angles[k]; }
    /// Number of encoded amplitudes, size() + 1.
    [[nodiscard]] std::size_t dimension() const noexcept {
        return angles.size() + 1;
    }
};

namespace heap {

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

[[nodiscard]] constexpr std::size_t left(std::size_t k) noexcept {
    return 2 * k + 1;
}
[[nodiscard]] constexpr std::size_t right(std::size_t k) noexcept {
    return 2 * k + 2;
}
[[nodiscard]] constexpr std::size_t parent(std::size_t k) noexcept {
    return k == 0 ? kNoParent : (k - 1) / 2;
}
/// floor(log2(k + 1)); the root is level 0.
[[nodiscard]] constexpr std::size_t level(std::size_t k) noexcept {
    std::size_t l = 0;
    for (std::size_t v = k + 1; v > 1; v >>= 1) {
        ++l;
    }
    return l;
}

} // namespace heap

[[nodiscard]] constexpr bool is_power_of_two(std::size_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

/// log2 of a power of two.
[[nodiscard]] constexpr std::size_t log2_exact(std::size_t n) noexcept {
    std::size_t l = 0;
    while ((std::size_t{1} << l) < n) {
        ++l;
    }
    return l;
}

/**
 * Rotation-y angle tree of a real vector. Each node stores the angle that
 * splits its subvector norm between the two children; the leaf level keeps
 * the signs of the entries, so angles may exceed pi for negative entries.
 * Zero-norm nodes get angle 0. The input does not need to be normalized.
 *
 * Throws DimensionError when the length is not a power of two >= 2.
 */
[[nodiscard]] AngleTree gen_angles(std::span<const double> x);

/**
 * Rotation-z angle tree of a phase vector: each node stores the difference
 * between the mean phase of its right and left halves. The overall mean
 * (a global phase) is dropped.
 */
[[nodiscard]] AngleTree gen_angles_z(std::span<const double> omega);

/// Closed-form split parameters of the subtree at reverse level `v`
/// (1 = leaf pairs, n = root) and 1-based position `j` within that level.
struct TreeParams {
    double beta = 0.0;
    double lambda = 0.0;
    std::size_t level = 0;
    std::size_t index = 0;
    /// The subtree has zero norm; beta is reported as 0.
    bool degenerate = false;
};

/// Evaluates beta (right-half norm over node norm) and lambda (mean phase
/// difference) by direct summation, without the recursion of gen_angles.
/// Throws DimensionError when (j, v) is outside the tree.
[[nodiscard]] TreeParams tree_params(const InputVector &x, std::size_t j,
                                     std::size_t v);

/// Heap index of the node addressed by reverse level `v` and position `j`.
[[nodiscard]] std::size_t heap_index(std::size_t n, std::size_t j,
                                     std::size_t v);

/// Heap-ordered copy of the subtree rooted at `root`.
[[nodiscard]] AngleTree subtree(const AngleTree &tree, std::size_t root);

} // namespace qdcprep
