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

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qdcprep/kernels.hpp"

namespace qdcprep::kernels {

namespace {

// Below this many amplitude pairs the fork/join overhead dominates.
constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 12;

inline std::uint64_t insert_zero(std::uint64_t i, unsigned bit) {
    const std::uint64_t low = i & ((std::uint64_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

} // namespace

namespace omp {

void apply_matrix(std::span<Complex> amps, unsigned target_bit,
                  const Matrix2 &m, ControlMask ctrl) {
    const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t stride = std::uint64_t{1} << target_bit;
    Complex *data = amps.data();

#pragma omp parallel for schedule(static) if (pairs >= kParallelThreshold)
    for (std::int64_t i = 0; i < pairs; ++i) {
        const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(i), target_bit);
        if ((i0 & ctrl.mask) != ctrl.value) {
            continue;
        }
        const std::uint64_t i1 = i0 | stride;
        const Complex a0 = data[i0];
        const Complex a1 = data[i1];
        data[i0] = m.m00 * a0 + m.m01 * a1;
        data[i1] = m.m10 * a0 + m.m11 * a1;
    }
}

void apply_swap(std::span<Complex> amps, unsigned bit_a, unsigned bit_b,
                ControlMask ctrl) {
    const auto size = static_cast<std::int64_t>(amps.size());
    const std::uint64_t a = std::uint64_t{1} << bit_a;
    const std::uint64_t b = std::uint64_t{1} << bit_b;
    Complex *data = amps.data();

#pragma omp parallel for schedule(static) if (size >= 2 * kParallelThreshold)
    for (std::int64_t s = 0; s < size; ++s) {
        const auto i = static_cast<std::uint64_t>(s);
        if ((i & a) == 0 || (i & b) != 0 || (i & ctrl.mask) != ctrl.value) {
            continue;
        }
        const std::uint64_t j = i ^ a ^ b;
        std::swap(data[i], data[j]);
    }
}

} // namespace omp

void set_num_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
#else
    (void)threads;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace qdcprep::kernels
