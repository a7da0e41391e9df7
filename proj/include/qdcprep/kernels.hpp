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
#include <cstdint>
#include <span>

namespace qdcprep::kernels {

using Complex = std::complex<double>;

/// Row-major 2x2 operator.
struct Matrix2 {
    Complex m00, m01, m10, m11;
};

/// Control condition: an amplitude index takes part when
/// `(index & mask) == value`. An empty mask means no controls.
struct ControlMask {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;
};

// Both namespaces expose the same in-place dense kernels. Bit positions are
// positions in the amplitude index (bit 0 = least significant). Every
// amplitude pair is updated independently, so the two variants produce
// bit-identical results.

/// OpenMP-parallel kernels.
namespace omp {
void apply_matrix(std::span<Complex> amps, unsigned target_bit,
                  const Matrix2 &m, ControlMask ctrl = {});
void apply_swap(std::span<Complex> amps, unsigned bit_a, unsigned bit_b,
                ControlMask ctrl = {});
} // namespace omp

/// Single-threaded reference kernels.
namespace serial {
void apply_matrix(std::span<Complex> amps, unsigned target_bit,
                  const Matrix2 &m, ControlMask ctrl = {});
void apply_swap(std::span<Complex> amps, unsigned bit_a, unsigned bit_b,
                ControlMask ctrl = {});
} // namespace serial

/// Sets the worker count used by the parallel kernels (0 keeps the
/// OpenMP default).
void set_num_threads(int threads);
[[nodiscard]] int max_threads();

} // namespace qdcprep::kernels
