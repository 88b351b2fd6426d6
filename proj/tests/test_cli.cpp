// Copyright 2026 The lhred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "lhred/graph.hpp"
#include "lhred/oracles.hpp"
#include "support/cli_harness.hpp"
#include "support/test_oracles.hpp"

using namespace lhred;
using testing::run_cli;
using testing::TempDir;

namespace {
const std::string triangle_text = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n";
const std::string c5_text = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";
} // namespace

TEST_SUITE("cli") {

TEST_CASE("reduce maxcut on the triangle") {
    TempDir dir;
    const auto graph = dir.write("tri.graph", triangle_text);
    const auto out = dir.file("tri.lham");
    const auto run = run_cli({"reduce", "maxcut", graph, "--target", "2", "-o", out});
    CHECK(run.status == 0);
    CHECK(run.has("terms=3 n=3 a_quarters=6 b_quarters=7\n"));
    const auto doc = parse_lham(TempDir::read(out));
    CHECK(doc.hamiltonian.n_terms() == 3);
    CHECK(*doc.promise_line == "promise a_quarters=6 b_quarters=7 alpha=2 n=3 kind=maxcut target=2 offset=3");
}

TEST_CASE("reduce indset on the triangle") {
    TempDir dir;
    const auto graph = dir.write("tri.graph", triangle_text);
    const auto run = run_cli({"reduce", "indset", graph, "--target", "1", "-o", dir.file("is.lham")});
    CHECK(run.status == 0);
    CHECK(run.has("terms=6 n=3 a_quarters=10 b_quarters=11\n"));
}

TEST_CASE("reduce errors exit with status 2") {
    TempDir dir;
    const auto graph = dir.write("tri.graph", triangle_text);
    const auto zero = run_cli({"reduce", "maxcut", graph, "--target", "0", "-o", dir.file("x.lham")});
    CHECK(zero.status == 2);
    CHECK(zero.err.find("out of range") != std::string::npos);
    CHECK(run_cli({"reduce", "maxcut", dir.file("missing.graph"), "--target", "1", "-o", dir.file("x.lham")})
              .status == 2);
    const auto bad = dir.write("bad.graph", "p edge 2 1\ne 1 1\n");
    const auto parse = run_cli({"reduce", "maxcut", bad, "--target", "1", "-o", dir.file("x.lham")});
    CHECK(parse.status == 2);
    CHECK(parse.err.find("line 2") != std::string::npos);
    CHECK(run_cli({"reduce", "sat", graph, "--target", "1", "-o", dir.file("x.lham")}).status == 2);
    CHECK(run_cli({"reduce", "maxcut", graph, "--target", "1", "-o", dir.file("no/such/dir.lham")}).status == 2);
}

TEST_CASE("weighted reduce needs the flag") {
    TempDir dir;
    const auto graph = dir.write("w.graph", "p edge 2 1\ne 1 2 3\n");
    CHECK(run_cli({"reduce", "maxcut", graph, "--target", "2", "-o", dir.file("w.lham")}).status == 2);
    const auto run = run_cli({"reduce", "maxcut", graph, "--target", "2", "-o", dir.file("w.lham"), "--weighted"});
    CHECK(run.status == 0);
    CHECK(run.has("terms=3 n=2 a_quarters=6 b_quarters=7"));
}

TEST_CASE("solve enum and dense") {
    TempDir dir;
    const auto graph = dir.write("tri.graph", triangle_text);
    const auto lham = dir.file("tri.lham");
    REQUIRE(run_cli({"reduce", "maxcut", graph, "--target", "2", "-o", lham}).status == 0);
    const auto e = run_cli({"solve", lham, "--method", "enum"});
    CHECK(e.status == 0);
    CHECK(e.has("min_energy_quarters=4 argmin=001\n"));
    const auto d = run_cli({"solve", lham, "--method", "dense"});
    CHECK(d.status == 0);
    const auto pos = d.out.find("min_eigenvalue=");
    REQUIRE(pos != std::string::npos);
    CHECK(std::abs(std::stod(d.out.substr(pos + 15)) - 1.0) <= 1e-9);
}

TEST_CASE("solve on an empty hamiltonian") {
    TempDir dir;
    const auto lham = dir.write("empty.lham", "lham 1\nn 2\ns 2\n");
    const auto run = run_cli({"solve", lham});
    CHECK(run.status == 0);
    CHECK(run.has("min_energy_quarters=0 argmin=00\n"));
}

TEST_CASE("solve guard and parse failures") {
    TempDir dir;
    const auto lham = dir.write("empty.lham", "lham 1\nn 5\ns 2\n");
    CHECK(run_cli({"--max-enum-qubits", "4", "solve", lham}).status == 2);
    CHECK(run_cli({"solve", lham, "--max-dense-qubits", "4", "--method", "dense"}).status == 2);
    CHECK(run_cli({"solve", lham, "--method", "lanczos"}).status == 2);
    CHECK(run_cli({"solve", dir.write("bad.lham", "lham 1\nn x\n")}).status == 2);
}

TEST_CASE("decide outcomes and exit statuses") {
    TempDir dir;
    const auto graph = dir.write("tri.graph", triangle_text);
    const auto w2 = dir.file("w2.lham");
    const auto w3 = dir.file("w3.lham");
    REQUIRE(run_cli({"reduce", "maxcut", graph, "-t", "2", "-o", w2}).status == 0);
    REQUIRE(run_cli({"reduce", "maxcut", graph, "-t", "3", "-o", w3}).status == 0);

    const auto c1 = run_cli({"decide", w2});
    CHECK(c1.status == 0);
    CHECK(c1.has("outcome=case1 min_energy_quarters=4"));
    const auto c2 = run_cli({"decide", w3});
    CHECK(c2.status == 1);
    CHECK(c2.has("outcome=case2 min_energy_quarters=4"));

    const auto violation = dir.write("v.lham", "lham 1\nn 2\ns 2\nt 2 1 2\n"
                                               "0.65,0 0,0 0,0 0,0 0,0 1,0 0,0 0,0 0,0 0,0 1,0 0,0 0,0 0,0 0,0 1,0\n"
                                               "promise a_quarters=2 b_quarters=3 alpha=2 n=2\n");
    const auto v = run_cli({"decide", violation});
    CHECK(v.status == 3);
    CHECK(v.has("outcome=promise-violation min_energy=0.65000000000000002"));
    CHECK(v.has("gap=unverified-small-n"));

    const auto bare = dir.write("bare.lham", "lham 1\nn 2\ns 2\nd 1 1\n1 0\n");
    CHECK(run_cli({"decide", bare}).status == 2);
}

TEST_CASE("oracle on C5") {
    TempDir dir;
    const auto graph = dir.write("c5.graph", c5_text);
    const auto mc = run_cli({"oracle", "maxcut", graph});
    CHECK(mc.status == 0);
    CHECK(mc.has("optimum=4 witness=00101\n"));
    const auto is = run_cli({"oracle", "indset", graph});
    CHECK(is.status == 0);
    CHECK(is.has("optimum=2 witness=00101\n"));
}

TEST_CASE("gen writes canonical graphs") {
    TempDir dir;
    const auto out = dir.file("cyc.graph");
    const auto run = run_cli({"gen", "cycle", "3", "-o", out});
    CHECK(run.status == 0);
    CHECK(TempDir::read(out) == triangle_text);
    CHECK(run_cli({"gen", "cycle", "3"}).out == triangle_text);
    CHECK(run_cli({"gen", "random_regular", "5", "-d", "3"}).status == 2);
    const auto reg = run_cli({"gen", "random_regular", "10", "-d", "3", "--seed", "4"});
    CHECK(reg.status == 0);
    for (int deg : parse_graph(reg.out).degrees())
        CHECK(deg == 3);
    CHECK(run_cli({"gen", "random_gnm", "6", "-m", "7", "--seed", "9"}).out ==
          run_cli({"gen", "random_gnm", "6", "-m", "7", "--seed", "9"}).out);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).status == 2);
    CHECK(run_cli({"frobnicate"}).status == 2);
    CHECK(run_cli({"solve"}).status == 2);
    CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("reports are identical across worker counts") {
    TempDir dir;
    const auto graph = dir.write("g.graph", serialize_graph(generate_graph(GraphKind::random_gnm, 14, {30, 3, 7})));
    const auto lham = dir.file("g.lham");
    REQUIRE(run_cli({"reduce", "indset", graph, "-t", "3", "-o", lham}).status == 0);
    const auto one = run_cli({"--workers", "1", "solve", lham});
    const auto eight = run_cli({"solve", lham, "--workers", "8"});
    CHECK(one.status == 0);
    CHECK(one.out == eight.out);
    CHECK(run_cli({"decide", lham, "--workers", "3"}).out == run_cli({"decide", lham, "--workers", "1"}).out);
}

TEST_CASE("gen, reduce and decide agree with the oracle") {
    TempDir dir;
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 8);
        const std::int64_t pairs = n * (n - 1) / 2;
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(pairs));
        const auto graph = dir.file("g" + std::to_string(trial) + ".graph");
        REQUIRE(run_cli({"gen", "random_gnm", std::to_string(n), "-m", std::to_string(m), "--seed",
                         std::to_string(trial), "-o", graph})
                    .status == 0);
        const auto optimum = brute_force_max_cut(read_graph_file(graph)).optimum;
        for (std::int64_t w = 1; w <= m; ++w) {
            const auto lham = dir.file("r.lham");
            REQUIRE(run_cli({"reduce", "maxcut", graph, "-t", std::to_string(w), "-o", lham}).status == 0);
            CHECK(run_cli({"decide", lham}).status == (optimum >= w ? 0 : 1));
        }
    }
}

}
