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

#include "lhred/error.hpp"
#include "lhred/graph.hpp"
#include "support/test_oracles.hpp"

using namespace lhred;

namespace {

std::vector<Edge> edge_list(const Graph &g) { return {g.edges().begin(), g.edges().end()}; }

int error_line(std::string_view text) {
    try {
        parse_graph(text);
    } catch (const Error &e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("parse single edge") {
    const auto g = parse_graph("p edge 2 1\ne 1 2");
    CHECK(g.n_vertices() == 2);
    CHECK(edge_list(g) == std::vector<Edge>{{0, 1}});
    CHECK(g.weight(0) == 1);
}

TEST_CASE("parse normalizes orientation and order") {
    const auto g = parse_graph("p edge 3 3\ne 2 1\ne 1 3\ne 3 2");
    CHECK(edge_list(g) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("parse skips comments and blank lines") {
    const auto g = parse_graph("c triangle\n\np edge 3 3\nc edges follow\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g.n_edges() == 3);
}

TEST_CASE("parse errors report line numbers") {
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1"), Error);
    CHECK(error_line("p edge 2 1\ne 1 1") == 2);
    CHECK(error_line("p edge 3 2\ne 1 2\ne 2 1") == 3);
    CHECK(error_line("p edge 3 1\ne 1 4") == 2);
    CHECK(error_line("p edge 3 1\ne 0 1") == 2);
    CHECK(error_line("c x\np edges 3 1\ne 1 2") == 2);
    CHECK(error_line("p edge 3 2\ne 1 2") == 1);
    CHECK(error_line("e 1 2") == 1);
    CHECK(error_line("p edge 3 1\ne 1 2 x") == 2);
    CHECK(error_line("p edge 3 1\nq 1 2") == 2);
    CHECK(error_line("") == 1);
}

TEST_CASE("self-loop and duplicate errors have distinct messages") {
    try {
        parse_graph("p edge 2 1\ne 1 1");
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
        CHECK(e.code() == ErrorCode::parse);
    }
    try {
        parse_graph("p edge 2 2\ne 1 2\ne 2 1");
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
}

TEST_CASE("graph constructor enforces invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph(0, {}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}}, {0}), Error);
}

TEST_CASE("weighted edges round-trip") {
    const auto g = parse_graph("p edge 3 2\ne 2 3 5\ne 1 2");
    CHECK(g.weight(0) == 1);
    CHECK(g.weight(1) == 5);
    CHECK(g.total_weight() == 6);
    CHECK_FALSE(g.is_unweighted());
    CHECK(parse_graph(serialize_graph(g)) == g);
}

TEST_CASE("serialize emits canonical form") {
    const auto g = parse_graph("p edge 3 3\ne 3 2\ne 2 1\ne 1 3");
    CHECK(serialize_graph(g) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("parse(serialize(G)) == G on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const auto g = testing::random_graph(n, 0.3, rng);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
}

TEST_CASE("assignment index uses first position as most significant bit") {
    const auto x = Assignment::from_string("011");
    CHECK(x.index() == 3);
    CHECK(Assignment::from_index(4, 3).to_string() == "100");
    CHECK(x.count_ones() == 2);
    for (std::uint64_t i = 0; i < 64; ++i)
        CHECK(Assignment::from_index(i, 6).index() == i);
    CHECK_THROWS_AS(Assignment::from_string("012"), Error);
}

TEST_CASE("generate cycle 3 is the triangle") {
    const auto g = generate_graph(GraphKind::cycle, 3);
    CHECK(g == parse_graph("p edge 3 3\ne 1 2\ne 1 3\ne 2 3"));
    CHECK_THROWS_AS(generate_graph(GraphKind::cycle, 2), Error);
}

TEST_CASE("generate complete graph") {
    CHECK(generate_graph(GraphKind::complete, 4).n_edges() == 6);
    CHECK(generate_graph(GraphKind::complete, 1).n_edges() == 0);
}

TEST_CASE("random_regular on 4 vertices with degree 3 is K4") {
    GeneratorParams params;
    params.degree = 3;
    params.seed = 1;
    CHECK(generate_graph(GraphKind::random_regular, 4, params) == generate_graph(GraphKind::complete, 4));
}

TEST_CASE("random_regular degree census") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        for (int n : {4, 6, 10, 16, 24}) {
            GeneratorParams params;
            params.degree = 3;
            params.seed = seed;
            const auto g = generate_graph(GraphKind::random_regular, n, params);
            for (int d : g.degrees())
                CHECK(d == 3);
            CHECK(g.n_edges() == static_cast<std::size_t>(3 * n / 2));
        }
    }
}

TEST_CASE("random_regular rejects infeasible parameters") {
    GeneratorParams params;
    params.degree = 3;
    CHECK_THROWS_AS(generate_graph(GraphKind::random_regular, 5, params), Error);
    params.degree = 4;
    CHECK_THROWS_AS(generate_graph(GraphKind::random_regular, 4, params), Error);
    try {
        params.degree = 3;
        generate_graph(GraphKind::random_regular, 7, params);
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::invalid_parameter);
    }
}

TEST_CASE("random_gnm edge count and range") {
    GeneratorParams params;
    params.edges = 10;
    params.seed = 5;
    const auto g = generate_graph(GraphKind::random_gnm, 8, params);
    CHECK(g.n_edges() == 10);
    params.edges = 28;
    CHECK(generate_graph(GraphKind::random_gnm, 8, params) == generate_graph(GraphKind::complete, 8));
    params.edges = 29;
    CHECK_THROWS_AS(generate_graph(GraphKind::random_gnm, 8, params), Error);
    params.edges = 0;
    CHECK(generate_graph(GraphKind::random_gnm, 8, params).n_edges() == 0);
}

TEST_CASE("generators are pure functions of their arguments") {
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 0xdeadbeefULL}) {
        GeneratorParams params;
        params.edges = 17;
        params.seed = seed;
        CHECK(serialize_graph(generate_graph(GraphKind::random_gnm, 12, params)) ==
              serialize_graph(generate_graph(GraphKind::random_gnm, 12, params)));
        params.degree = 3;
        CHECK(serialize_graph(generate_graph(GraphKind::random_regular, 12, params)) ==
              serialize_graph(generate_graph(GraphKind::random_regular, 12, params)));
    }
    GeneratorParams a;
    a.edges = 17;
    a.seed = 1;
    GeneratorParams b = a;
    b.seed = 2;
    CHECK(generate_graph(GraphKind::random_gnm, 12, a) != generate_graph(GraphKind::random_gnm, 12, b));
}

TEST_CASE("graph kind names") {
    for (auto kind : {GraphKind::cycle, GraphKind::complete, GraphKind::random_gnm, GraphKind::random_regular})
        CHECK(parse_graph_kind(to_string(kind)) == kind);
    CHECK_THROWS_AS(parse_graph_kind("petersen"), Error);
}

}
