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

// Serial vs OpenMP dense kernels: wall time per gate sweep and a bitwise
// comparison of the resulting states.
//
// usage: bench_kernels [min_qubits] [max_qubits] [repeats]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "qdcprep/kernels.hpp"

using namespace qdcprep::kernels;

namespace {

std::vector<Complex> random_state(std::size_t qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<Complex> v(std::size_t{1} << qubits);
    double sq = 0.0;
    for (auto &e : v) {
        e = {normal(rng), normal(rng)};
        sq += std::norm(e);
    }
    for (auto &e : v) {
        e /= std::sqrt(sq);
    }
    return v;
}

// One sweep: RY on every wire, then a controlled swap on each adjacent
// triple of wires.
template <typename Matrix, typename Swap>
void sweep(std::vector<Complex> &amps, unsigned qubits, Matrix apply_matrix,
           Swap apply_swap) {
    const double c = std::cos(0.37);
    const double s = std::sin(0.37);
    const Matrix2 ry{c, -s, s, c};
    for (unsigned q = 0; q < qubits; ++q) {
        apply_matrix(amps, q, ry, ControlMask{});
    }
    for (unsigned q = 0; q + 2 < qubits; ++q) {
        const std::uint64_t control = std::uint64_t{1} << q;
        apply_swap(amps, q + 1, q + 2, ControlMask{control, control});
    }
}

template <typename F>
double best_of(int repeats, F &&body) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

} // namespace

int main(int argc, char **argv) {
    const unsigned lo = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 12;
    const unsigned hi = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 22;
    const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

    std::printf("threads=%d\n", max_threads());
    std::printf("qubits,serial_ms,omp_ms,speedup,identical\n");
    bool all_identical = true;
    for (unsigned n = lo; n <= hi; n += 2) {
        const auto initial = random_state(n, n);
        std::vector<Complex> a;
        std::vector<Complex> b;
        const double t_serial = best_of(repeats, [&] {
            a = initial;
            sweep(a, n, serial::apply_matrix, serial::apply_swap);
        });
        const double t_omp = best_of(repeats, [&] {
            b = initial;
            sweep(b, n, omp::apply_matrix, omp::apply_swap);
        });
        const bool identical = a == b;
        all_identical = all_identical && identical;
        std::printf("%u,%.3f,%.3f,%.2f,%s\n", n, t_serial, t_omp, t_serial / t_omp,
                    identical ? "yes" : "no");
    }
    return all_identical ? 0 : 1;
}
