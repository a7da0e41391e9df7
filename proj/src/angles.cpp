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

#include "qdcprep/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qdcprep/errors.hpp"

namespace qdcprep {

namespace {

void require_tree_length(std::size_t n) {
    if (n == 0) {
        throw DimensionError("empty input vector");
    }
    if (n < 2 || !is_power_of_two(n)) {
        throw DimensionError("length " + std::to_string(n) +
                             " is not a power of two >= 2");
    }
}

// Size-1 calls return the empty sequence so the concatenation yields N-1.
std::vector<double> angles_y_rec(const std::vector<double> &x) {
    if (x.size() <= 1) {
        return {};
    }
    const std::size_t half = x.size() / 2;
    std::vector<double> norms(half);
    for (std::size_t k = 0; k < half; ++k) {
        norms[k] = std::sqrt(x[2 * k] * x[2 * k] + x[2 * k + 1] * x[2 * k + 1]);
    }
    std::vector<double> result = angles_y_rec(norms);
    result.reserve(result.size() + half);
    for (std::size_t k = 0; k < half; ++k) {
        double angle = 0.0;
        if (norms[k] != 0.0) {
            // Clamp guards asin against rounding just above 1.
            const double s = std::clamp(x[2 * k + 1] / norms[k], -1.0, 1.0);
            angle = x[2 * k] > 0.0
                        ? 2.0 * std::asin(s)
                        : 2.0 * std::numbers::pi - 2.0 * std::asin(s);
        }
        result.push_back(angle);
    }
    return result;
}

std::vector<double> angles_z_rec(const std::vector<double> &omega) {
    if (omega.size() <= 1) {
        return {};
    }
    const std::size_t half = omega.size() / 2;
    std::vector<double> means(half);
    for (std::size_t k = 0; k < half; ++k) {
        means[k] = (omega[2 * k] + omega[2 * k + 1]) / 2.0;
    }
    std::vector<double> result = angles_z_rec(means);
    result.reserve(result.size() + half);
    for (std::size_t k = 0; k < half; ++k) {
        result.push_back(omega[2 * k + 1] - omega[2 * k]);
    }
    return result;
}

} // namespace

InputVector InputVector::from_complex(std::vector<Complex> entries,
                                      bool normalize) {
    require_tree_length(entries.size());
    double sq = 0.0;
    for (const auto &e : entries) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw InputError("non-finite vector entry");
        }
        sq += std::norm(e);
    }
    const double norm = std::sqrt(sq);
    if (normalize) {
        if (norm == 0.0) {
            throw NormalizationError("cannot normalize the zero vector");
        }
        for (auto &e : entries) {
            e /= norm;
        }
    } else if (std::abs(norm - 1.0) > kNormTolerance) {
        throw NormalizationError("vector norm " + std::to_string(norm) +
                                 " differs from 1");
    }
    return InputVector(std::move(entries));
}

InputVector InputVector::from_real(std::span<const double> entries,
                                   bool normalize) {
    std::vector<Complex> c(entries.begin(), entries.end());
    return from_complex(std::move(c), normalize);
}

std::size_t InputVector::num_qubits() const noexcept {
    return log2_exact(entries_.size());
}

bool InputVector::is_real() const noexcept {
    for (const auto &e : entries_) {
        if (e.imag() != 0.0) {
            return false;
        }
    }
    return true;
}

std::vector<double> InputVector::real_parts() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) {
        out.push_back(e.real());
    }
    return out;
}

std::vector<double> InputVector::magnitudes() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) {
        out.push_back(std::abs(e));
    }
    return out;
}

std::vector<double> InputVector::phases() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) {
        out.push_back(e == Complex{} ? 0.0 : std::arg(e));
    }
    return out;
}

AngleTree gen_angles(std::span<const double> x) {
    require_tree_length(x.size());
    return {angles_y_rec({x.begin(), x.end()}), AngleKind::RotationY};
}

AngleTree gen_angles_z(std::span<const double> omega) {
    require_tree_length(omega.size());
    return {angles_z_rec({omega.begin(), omega.end()}), AngleKind::RotationZ};
}

std::size_t heap_index(std::size_t n, std::size_t j, std::size_t v) {
    if (v < 1 || v > n) {
        throw DimensionError("tree level " + std::to_string(v) +
                             " outside 1.." + std::to_string(n));
    }
    const std::size_t width = std::size_t{1} << (n - v);
    if (j < 1 || j > width) {
        throw DimensionError("tree position " + std::to_string(j) +
                             " outside 1.." + std::to_string(width));
    }
    return (width - 1) + (j - 1);
}

TreeParams tree_params(const InputVector &x, std::size_t j, std::size_t v) {
    const std::size_t n = x.num_qubits();
    (void)heap_index(n, j, v);

    const std::size_t half = std::size_t{1} << (v - 1);
    const std::size_t left_start = (2 * j - 2) * half;
    const std::size_t right_start = (2 * j - 1) * half;

    double right_mass = 0.0;
    double total_mass = 0.0;
    double phase_diff = 0.0;
    for (std::size_t l = 0; l < half; ++l) {
        right_mass += std::norm(x[right_start + l]);
        total_mass += std::norm(x[left_start + l]) + std::norm(x[right_start + l]);
    }
    const auto phase = [&](std::size_t k) {
        return x[k] == Complex{} ? 0.0 : std::arg(x[k]);
    };
    for (std::size_t l = 0; l < half; ++l) {
        phase_diff += phase(right_start + l) - phase(left_start + l);
    }

    TreeParams p;
    p.level = v;
    p.index = j;
    p.lambda = phase_diff / static_cast<double>(half);
    if (total_mass == 0.0) {
        p.degenerate = true;
        p.beta = 0.0;
    } else {
        p.beta = std::sqrt(right_mass) / std::sqrt(total_mass);
    }
    return p;
}

AngleTree subtree(const AngleTree &tree, std::size_t root) {
    AngleTree out{{}, tree.kind};
    for (std::size_t width = 1, first = root; first < tree.size();
         width *= 2, first = heap::left(first)) {
        for (std::size_t i = 0; i < width && first + i < tree.size(); ++i) {
            out.angles.push_back(tree.angles[first + i]);
        }
    }
    return out;
}

} // namespace qdcprep
