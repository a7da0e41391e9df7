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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qdcprep/circuit.hpp"
#include "qdcprep/cli.hpp"
#include "test_support.hpp"

using namespace qdcprep;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qdcprep");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        std::mt19937_64 rng(std::random_device{}());
        path_ = std::filesystem::temp_directory_path() /
                ("qdcprep-cli-" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    std::string write(const std::string &name, const json &doc) const {
        const auto file = path_ / name;
        std::ofstream(file) << doc.dump();
        return file.string();
    }
    [[nodiscard]] std::string file(const std::string &name) const {
        return (path_ / name).string();
    }

private:
    std::filesystem::path path_;
};

json complex_json(const std::vector<Complex> &v) {
    json arr = json::array();
    for (const Complex &c : v) {
        arr.push_back({c.real(), c.imag()});
    }
    return arr;
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::istringstream cells_in(line);
        std::string cell;
        while (std::getline(cells_in, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("synth", "[cli]") {
    TempDir dir;
    SECTION("dc on the eight-dimensional example") {
        const auto in = dir.write("x.json", {std::sqrt(0.03), std::sqrt(0.07), std::sqrt(0.15),
                                             std::sqrt(0.05), std::sqrt(0.1), std::sqrt(0.3),
                                             std::sqrt(0.2), std::sqrt(0.1)});
        const Outcome r = run_cli({"synth", in, "--method", "dc"});
        REQUIRE(r.code == 0);
        const Circuit c = import_json(r.out);
        CHECK(c.width() == 7);
        CHECK(c.count(GateKind::CSWAP) == 4);
        CHECK(c.metadata().roles.at("data") == std::vector<Qubit>{0, 1, 3});
    }
    SECTION("basis vector with the top-down method") {
        const auto in = dir.write("e0.json", {1.0, 0.0});
        const Outcome r = run_cli({"synth", in, "-m", "mottonen"});
        REQUIRE(r.code == 0);
        const Circuit c = import_json(r.out);
        REQUIRE(c.size() == 1);
        CHECK(c.gates()[0] == Gate::ry(0, 0.0));
    }
    SECTION("qasm output goes to a file and is decomposed when needed") {
        const auto in = dir.write("x4.json", {0.5, 0.5, 0.5, -0.5});
        const auto outfile = dir.file("out.qasm");
        const Outcome r =
            run_cli({"synth", in, "-m", "mottonen", "-f", "qasm", "-o", outfile});
        REQUIRE(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream f(outfile);
        const std::string text((std::istreambuf_iterator<char>(f)), {});
        CHECK_THAT(text, ContainsSubstring("OPENQASM 2.0;"));
        CHECK_THAT(text, ContainsSubstring("cx "));
    }
    SECTION("labels and hybrid methods") {
        const auto in = dir.write("x8.json", std::vector<double>(8, 1.0 / std::sqrt(8.0)));
        CHECK(import_json(run_cli({"synth", in, "-m", "dc-labels"}).out).width() == 10);
        CHECK(import_json(run_cli({"synth", in, "-m", "hybrid:4"}).out).width() == 5);
    }
    SECTION("input errors") {
        const auto three = dir.write("three.json", {1.0, 0.0, 0.0});
        Outcome r = run_cli({"synth", three});
        CHECK(r.code == 2);
        CHECK_THAT(r.err, ContainsSubstring("DimensionError"));

        const auto ok = dir.write("ok.json", {1.0, 0.0});
        r = run_cli({"synth", ok, "-m", "quantum-magic"});
        CHECK(r.code == 2);

        const auto unnormalized = dir.write("big.json", {3.0, 4.0});
        CHECK(run_cli({"synth", unnormalized}).code == 2);
        CHECK(run_cli({"synth", unnormalized, "--normalize"}).code == 0);

        CHECK(run_cli({"synth", dir.file("missing.json")}).code == 2);
        CHECK(run_cli({"synth"}).code == 2);
    }
}

TEST_CASE("verify", "[cli]") {
    TempDir dir;
    std::mt19937_64 rng(51);
    SECTION("four-dimensional proof of concept") {
        const auto in = dir.write("x.json", {std::sqrt(0.6), std::sqrt(0.2), std::sqrt(0.1),
                                             std::sqrt(0.1)});
        const Outcome r = run_cli({"verify", in, "-m", "dc"});
        REQUIRE(r.code == 0);
        const json doc = json::parse(r.out);
        CHECK(doc.at("pass") == true);
        CHECK(doc.at("width") == 3);
        CHECK(doc.at("max_marginal_error").get<double>() <= 1e-9);
    }
    SECTION("complex sixteen-dimensional input") {
        const auto in = dir.write("z.json", complex_json(testing::random_complex_unit(16, rng)));
        const Outcome r = run_cli({"verify", in, "-m", "dc"});
        REQUIRE(r.code == 0);
        CHECK_THAT(json::parse(r.out).at("fidelity").get<double>(), WithinAbs(1.0, 1e-9));
        CHECK(run_cli({"verify", in, "-m", "dc-labels"}).code == 0);
    }
    SECTION("top-down method on 64 amplitudes") {
        const auto in = dir.write("r.json", testing::random_real_unit(64, rng));
        const Outcome r = run_cli({"verify", in, "-m", "mottonen", "-t", "1e-10"});
        REQUIRE(r.code == 0);
        const json doc = json::parse(r.out);
        CHECK(doc.at("max_amplitude_error").get<double>() <= 1e-10);
        CHECK(doc.at("tolerance").get<double>() == 1e-10);
    }
    SECTION("hybrid reports marginals only") {
        const auto in = dir.write("h.json", testing::random_real_unit(16, rng));
        const Outcome r = run_cli({"verify", in, "-m", "hybrid:4"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out).at("fidelity").is_null());
    }
    SECTION("over the simulator cap") {
        const auto in = dir.write("wide.json", testing::random_real_unit(64, rng));
        const Outcome r = run_cli({"verify", in, "-m", "dc"});
        CHECK(r.code == 3);
        CHECK_THAT(r.err, ContainsSubstring("ResourceError"));
    }
}

TEST_CASE("bench", "[cli]") {
    const Outcome r = run_cli({"bench", "-n", "4,8,16,32", "-m", "dc,mottonen"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == std::vector<std::string>{"N", "method", "depth", "width", "cswap_count"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const std::size_t n = std::stoul(rows[i][0]);
        const std::size_t levels = log2_exact(n);
        const std::size_t d = std::stoul(rows[i][2]);
        const std::size_t w = std::stoul(rows[i][3]);
        if (rows[i][1] == "dc") {
            CHECK(d == 1 + levels * (levels - 1) / 2);
            CHECK(w == n - 1);
        } else {
            CHECK(rows[i][1] == "mottonen");
            CHECK(d == n - 1);
            CHECK(w == levels);
            CHECK(rows[i][4] == "0");
        }
    }
    CHECK(run_cli({"bench", "-n", "4,8,16,32", "-m", "dc,mottonen"}).out == r.out);

    const Outcome timed = run_cli({"bench", "-n", "8", "-m", "dc", "--timing"});
    CHECK_THAT(timed.out, ContainsSubstring("synth_time_us"));
    CHECK(run_cli({"bench", "-n", "8192", "-m", "mottonen", "-b", "cnot"}).code == 3);
    CHECK(run_cli({"bench", "-n", "6"}).code == 2);
}

TEST_CASE("swaptest", "[cli]") {
    TempDir dir;
    const double r = 1.0 / std::sqrt(2.0);
    const auto u = dir.write("u.json", {r, r});
    const auto e0 = dir.write("e0.json", {1.0, 0.0});
    const auto e1 = dir.write("e1.json", {0.0, 1.0});

    SECTION("overlap values") {
        Outcome out = run_cli({"swaptest", u, u});
        REQUIRE(out.code == 0);
        json doc = json::parse(out.out);
        CHECK(doc.at("statistic_kind") == "overlap");
        CHECK_THAT(doc.at("exact_value").get<double>(), WithinAbs(0.5, 1e-12));

        out = run_cli({"swaptest", e0, e1});
        REQUIRE(out.code == 0);
        CHECK_THAT(json::parse(out.out).at("exact_value").get<double>(),
                   WithinAbs(0.0, 1e-12));
    }
    SECTION("sampled runs are reproducible") {
        const std::vector<std::string> args{"swaptest", u, e0, "--shots", "1024", "--seed", "5"};
        const Outcome a = run_cli(args);
        const Outcome b = run_cli(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        const json doc = json::parse(a.out);
        CHECK(doc.at("shots") == 1024);
        CHECK(doc.at("seed") == 5);
    }
    SECTION("statistic variants") {
        json doc = json::parse(run_cli({"swaptest", u, u, "-v", "covariance"}).out);
        CHECK(doc.at("statistic_kind") == "covariance");
        CHECK_THAT(doc.at("exact_value").get<double>(), WithinAbs(0.0, 1e-12));

        doc = json::parse(run_cli({"swaptest", u, u, "-v", "variance", "--exp-sq", "0.25"}).out);
        CHECK_THAT(doc.at("exact_value").get<double>(), WithinAbs(0.25, 1e-12));
        CHECK(run_cli({"swaptest", u, u, "-v", "variance"}).code == 2);

        const auto p = dir.write("p.json", {1.0, 0.0});
        doc = json::parse(
            run_cli({"swaptest", e0, e0, "-v", "cyclic", "--px", p, "--py", p}).out);
        CHECK(doc.at("statistic_kind") == "exy_cyclic");
        CHECK_THAT(doc.at("exact_value").get<double>(), WithinAbs(1.0, 1e-10));

        const auto bad = dir.write("bad.json", {0.9, 0.3});
        const Outcome o = run_cli({"swaptest", e0, e0, "-v", "cyclic", "--px", bad, "--py", p});
        CHECK(o.code == 2);
        CHECK_THAT(o.err, ContainsSubstring("DistributionError"));
        CHECK(run_cli({"swaptest", u, u, "-v", "nonsense"}).code == 2);
    }
}
