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

#include <cmath>
#include <numbers>

#include "qdcprep/angles.hpp"
#include "qdcprep/errors.hpp"
#include "qdcprep/statevector.hpp"
#include "test_support.hpp"

using namespace qdcprep;
using Catch::Matchers::WithinAbs;
using std::numbers::pi;

namespace {

double round2(double v) { return std::round(v * 100.0) / 100.0; }

// Rebuilds the amplitudes from an angle tree by pushing cos/sin factors down
// the tree; independent of the simulator.
std::vector<double> reconstruct(const AngleTree &tree) {
    std::vector<double> level{1.0};
    std::size_t first = 0;
    while (first < tree.size()) {
        std::vector<double> next;
        for (std::size_t i = 0; i < level.size(); ++i) {
            const double half = tree[first + i] / 2.0;
            next.push_back(level[i] * std::cos(half));
            next.push_back(level[i] * std::sin(half));
        }
        first = heap::left(first);
        level.swap(next);
    }
    return level;
}

} // namespace

TEST_CASE("gen_angles reproduces the worked 8-dimensional example", "[angles]") {
    const std::vector<double> x{std::sqrt(0.03), std::sqrt(0.07), std::sqrt(0.15),
                                std::sqrt(0.05), std::sqrt(0.1),  std::sqrt(0.3),
                                std::sqrt(0.2),  std::sqrt(0.1)};
    const std::vector<double> expected{1.98, 1.91, 1.43, 1.98, 1.05, 2.09, 1.23};
    const AngleTree tree = gen_angles(x);
    REQUIRE(tree.size() == 7);
    REQUIRE(tree.kind == AngleKind::RotationY);
    for (std::size_t k = 0; k < 7; ++k) {
        CHECK(round2(tree[k]) == expected[k]);
    }
}

TEST_CASE("gen_angles on the four-dimensional proof-of-concept vector", "[angles]") {
    const std::vector<double> x{std::sqrt(0.6), std::sqrt(0.2), std::sqrt(0.1),
                                std::sqrt(0.1)};
    const AngleTree tree = gen_angles(x);
    REQUIRE(tree.size() == 3);
    CHECK_THAT(tree[0], WithinAbs(0.927, 1e-3));
    CHECK_THAT(tree[1], WithinAbs(pi / 3.0, 1e-12));
    CHECK_THAT(tree[2], WithinAbs(pi / 2.0, 1e-12));
}

TEST_CASE("gen_angles edge cases", "[angles]") {
    SECTION("basis state needs no rotation") {
        const std::vector<double> x{1.0, 0.0, 0.0, 0.0};
        const AngleTree tree = gen_angles(x);
        for (double a : tree.angles) {
            CHECK(a == 0.0);
        }
    }
    SECTION("negative entry takes the 2pi branch") {
        const std::vector<double> x{-1.0, 0.0};
        const AngleTree tree = gen_angles(x);
        REQUIRE(tree.size() == 1);
        CHECK_THAT(tree[0], WithinAbs(2.0 * pi, 1e-15));

        Circuit c(1);
        c.append(Gate::ry(0, tree[0]));
        const StateVector s = simulate(c);
        CHECK_THAT(s[0].real(), WithinAbs(-1.0, 1e-12));
        CHECK_THAT(std::abs(s[1]), WithinAbs(0.0, 1e-12));
    }
    SECTION("non power of two and empty inputs") {
        const std::vector<double> three{1.0, 0.0, 0.0};
        const std::vector<double> empty;
        const std::vector<double> one{1.0};
        CHECK_THROWS_AS(gen_angles(three), DimensionError);
        CHECK_THROWS_AS(gen_angles(empty), DimensionError);
        CHECK_THROWS_AS(gen_angles(one), DimensionError);
        CHECK_THROWS_AS(gen_angles_z(three), DimensionError);
    }
}

TEST_CASE("gen_angles_z differences and averages", "[angles]") {
    SECTION("constant phases") {
        const std::vector<double> omega(8, 0.0);
        const AngleTree tree = gen_angles_z(omega);
        REQUIRE(tree.size() == 7);
        CHECK(tree.kind == AngleKind::RotationZ);
        for (double a : tree.angles) {
            CHECK(a == 0.0);
        }
    }
    SECTION("single pair") {
        const std::vector<double> omega{0.0, pi};
        const AngleTree tree = gen_angles_z(omega);
        REQUIRE(tree.size() == 1);
        CHECK_THAT(tree[0], WithinAbs(pi, 1e-15));
    }
    SECTION("two pairs with equal means") {
        const std::vector<double> omega{0.0, pi, 0.0, pi};
        const AngleTree tree = gen_angles_z(omega);
        REQUIRE(tree.size() == 3);
        CHECK_THAT(tree[0], WithinAbs(0.0, 1e-15));
        CHECK_THAT(tree[1], WithinAbs(pi, 1e-15));
        CHECK_THAT(tree[2], WithinAbs(pi, 1e-15));
    }
}

TEST_CASE("heap navigation", "[angles]") {
    CHECK(heap::level(0) == 0);
    CHECK(heap::level(3) == 2);
    CHECK(heap::level(6) == 2);
    CHECK(heap::level(7) == 3);
    CHECK(heap::left(2) == 5);
    CHECK(heap::right(2) == 6);
    CHECK(heap::parent(6) == 2);
    CHECK(heap::parent(0) == heap::kNoParent);
    for (std::size_t k = 0; k < 4096; ++k) {
        REQUIRE(heap::parent(heap::left(k)) == k);
        REQUIRE(heap::parent(heap::right(k)) == k);
        REQUIRE(heap::level(k) == static_cast<std::size_t>(std::floor(std::log2(k + 1.0))));
    }
}

TEST_CASE("tree_params closed forms", "[angles]") {
    const auto x = InputVector::from_real(std::vector<double>{
        std::sqrt(0.6), std::sqrt(0.2), std::sqrt(0.1), std::sqrt(0.1)});
    SECTION("root of the four-dimensional example") {
        const TreeParams p = tree_params(x, 1, 2);
        CHECK_THAT(p.beta, WithinAbs(std::sqrt(0.2), 1e-12));
        CHECK_THAT(p.lambda, WithinAbs(0.0, 1e-15));
        CHECK_FALSE(p.degenerate);
    }
    SECTION("uniform phases give zero lambda") {
        std::vector<Complex> entries(8, std::polar(1.0 / std::sqrt(8.0), 0.7));
        const auto c = InputVector::from_complex(entries);
        for (std::size_t v = 1; v <= 3; ++v) {
            for (std::size_t j = 1; j <= (std::size_t{1} << (3 - v)); ++j) {
                CHECK_THAT(tree_params(c, j, v).lambda, WithinAbs(0.0, 1e-12));
            }
        }
    }
    SECTION("support on |0> only") {
        std::vector<double> e(8, 0.0);
        e[0] = 1.0;
        const auto basis = InputVector::from_real(e);
        for (std::size_t v = 1; v <= 3; ++v) {
            CHECK(tree_params(basis, 1, v).beta == 0.0);
        }
        CHECK(tree_params(basis, 2, 1).degenerate);
    }
    SECTION("out-of-range addresses") {
        CHECK_THROWS_AS(tree_params(x, 1, 3), DimensionError);
        CHECK_THROWS_AS(tree_params(x, 3, 1), DimensionError);
        CHECK_THROWS_AS(tree_params(x, 0, 1), DimensionError);
    }
}

TEST_CASE("InputVector validation", "[angles]") {
    CHECK_THROWS_AS(InputVector::from_real(std::vector<double>{1.0, 1.0}),
                    NormalizationError);
    const auto v = InputVector::from_real(std::vector<double>{3.0, 4.0}, true);
    CHECK_THAT(v[0].real(), WithinAbs(0.6, 1e-15));
    CHECK_THAT(v[1].real(), WithinAbs(0.8, 1e-15));
    CHECK_NOTHROW(InputVector::from_real(std::vector<double>{1.0 + 5e-9, 0.0}));
    CHECK_THROWS_AS(InputVector::from_real(std::vector<double>{1.0 + 5e-8, 0.0}),
                    NormalizationError);
    CHECK_THROWS_AS(InputVector::from_real(std::vector<double>{1.0, 0.0, 0.0}),
                    DimensionError);
    CHECK(v.is_real());
    CHECK_FALSE(InputVector::from_complex({Complex{0.0, 1.0}, Complex{}}).is_real());
}

TEST_CASE("angle tree properties on random inputs", "[angles][property]") {
    std::mt19937_64 rng(20240601);
    for (std::size_t n = 2; n <= 1024; n *= 2) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto x = testing::random_complex_unit(n, rng);
            const auto input = InputVector::from_complex(x);
            const AngleTree ty = gen_angles(input.magnitudes());
            const AngleTree tz = gen_angles_z(input.phases());
            REQUIRE(ty.size() == n - 1);
            REQUIRE(tz.size() == n - 1);

            // Magnitude trees stay in [0, pi] and rebuild |x|.
            const auto rebuilt = reconstruct(ty);
            for (std::size_t k = 0; k < n; ++k) {
                REQUIRE_THAT(rebuilt[k], WithinAbs(std::abs(x[k]), 1e-10));
            }
            for (double a : ty.angles) {
                REQUIRE(a >= 0.0);
                REQUIRE(a <= pi);
            }

            // Recursive trees agree with the direct sums at every node.
            const std::size_t levels = log2_exact(n);
            for (std::size_t k = 0; k < n - 1; ++k) {
                const std::size_t l = heap::level(k);
                const std::size_t v = levels - l;
                const std::size_t j = k - ((std::size_t{1} << l) - 1) + 1;
                REQUIRE(heap_index(levels, j, v) == k);
                const TreeParams p = tree_params(input, j, v);
                if (!p.degenerate) {
                    REQUIRE_THAT(std::sin(ty[k] / 2.0), WithinAbs(p.beta, 1e-10));
                }
                REQUIRE_THAT(tz[k], WithinAbs(p.lambda, 1e-10));
            }
        }
    }
}

TEST_CASE("signed real trees rebuild the input", "[angles][property]") {
    std::mt19937_64 rng(7);
    for (std::size_t n = 2; n <= 256; n *= 2) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = testing::random_real_unit(n, rng);
            const auto rebuilt = reconstruct(gen_angles(x));
            for (std::size_t k = 0; k < n; ++k) {
                REQUIRE_THAT(rebuilt[k], WithinAbs(x[k], 1e-10));
            }
        }
    }
}

TEST_CASE("zero-norm subtrees propagate zero angles", "[angles][property]") {
    std::mt19937_64 rng(99);
    const std::size_t n = 64;
    for (int trial = 0; trial < 20; ++trial) {
        auto x = testing::random_real_unit(n, rng);
        // Zero one aligned block of size 2^b.
        const std::size_t b = 1 + rng() % 4;
        const std::size_t size = std::size_t{1} << b;
        const std::size_t block = rng() % (n / size);
        for (std::size_t i = 0; i < size; ++i) {
            x[block * size + i] = 0.0;
        }
        const AngleTree tree = gen_angles(x);
        // Root of the zero block sits log2(n) - b levels deep.
        const std::size_t depth = log2_exact(n) - b;
        const std::size_t root = ((std::size_t{1} << depth) - 1) + block;
        const AngleTree sub = subtree(tree, root);
        REQUIRE(sub.size() == size - 1);
        for (double a : sub.angles) {
            REQUIRE(a == 0.0);
        }
    }
}

TEST_CASE("subtree extraction keeps heap order", "[angles]") {
    AngleTree tree{{0, 1, 2, 3, 4, 5, 6}, AngleKind::RotationY};
    const AngleTree left = subtree(tree, 1);
    CHECK(left.angles == std::vector<double>{1, 3, 4});
    const AngleTree right = subtree(tree, 2);
    CHECK(right.angles == std::vector<double>{2, 5, 6});
    CHECK(subtree(tree, 5).angles == std::vector<double>{5});
}
