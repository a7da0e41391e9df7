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

#include <cstdint>
#include <utility>

#include "qdcprep/kernels.hpp"

namespace qdcprep::kernels::serial {

void apply_matrix(std::span<Complex> amps, unsigned target_bit,
                  const Matrix2 &m, ControlMask ctrl) {
    const std::uint64_t stride = std::uint64_t{1} << target_bit;
    for (std::uint64_t block = 0; block < amps.size(); block += 2 * stride) {
        for (std::uint64_t i0 = block; i0 < block + stride; ++i0) {
            if ((i0 & ctrl.mask) != ctrl.value) {
                continue;
            }
            const std::uint64_t i1 = i0 + stride;
            const Complex a0 = amps[i0];
            const Complex a1 = amps[i1];
            amps[i0] = m.m00 * a0 + m.m01 * a1;
            amps[i1] = m.m10 * a0 + m.m11 * a1;
        }
    }
}

void apply_swap(std::span<Complex> amps, unsigned bit_a, unsigned bit_b,
                ControlMask ctrl) {
    const std::uint64_t a = std::uint64_t{1} << bit_a;
    const std::uint64_t b = std::uint64_t{1} << bit_b;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & a) != 0 && (i & b) == 0 && (i & ctrl.mask) == ctrl.value) {
            std::swap(amps[i], amps[i ^ a ^ b]);
        }
    }
}

} // namespace qdcprep::kernels::serial
