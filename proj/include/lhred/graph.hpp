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

#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lhred {

/// Undirected edge between two 0-based vertices, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph in canonical form: edges ordered lexicographically,
/// no self-loops, no duplicates, every edge carrying a positive integer
/// weight (1 unless a weighted instance was loaded).
///
/// Vertices are 0-based in memory. The file format and every printed value
/// use 1-based vertices.
class Graph {
public:
    Graph() = default;

    /// Builds a canonical graph. Edges may be given in either orientation and
    /// any order; \p weights is either empty (all weights 1) or parallel to
    /// \p edges. Throws Error on loops, duplicates or out-of-range vertices.
    Graph(int n_vertices, std::vector<Edge> edges, std::vector<std::int64_t> weights = {});

    int n_vertices() const noexcept { return n_vertices_; }
    std::size_t n_edges() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const std::int64_t> weights() const noexcept { return weights_; }
    std::int64_t weight(std::size_t edge_index) const { return weights_.at(edge_index); }

    /// Sum of all edge weights (equals n_edges() for simple graphs).
    std::int64_t total_weight() const noexcept;
    bool is_unweighted() const noexcept;

    std::vector<int> degrees() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    int n_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> weights_;
};

/// Bit vector X_1..X_n. Position k (0-based) holds the value of vertex or
/// qubit k.
///
/// The basis index of an assignment puts the first position in the most
/// significant bit: index = sum_k X_k * 2^(n-1-k).
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t n) : bits_(n, 0) {}
    explicit Assignment(std::vector<std::uint8_t> bits);

    static Assignment from_index(std::uint64_t index, int n);
    /// Parses a string of '0'/'1' characters, first character = position 0.
    static Assignment from_string(std::string_view bits);

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t k) const { return bits_[k] != 0; }
    void set(std::size_t k, bool value) { bits_.at(k) = value ? 1 : 0; }

    std::uint64_t index() const;
    std::size_t count_ones() const noexcept;
    std::string to_string() const;
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    friend bool operator==(const Assignment &, const Assignment &) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Reads a graph in the line-oriented DIMACS-like format:
///
///     c optional comment
///     p edge <n> <m>
///     e <u> <v> [<weight>]
///
/// Errors carry the line number of the offending line.
Graph parse_graph(std::istream &in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string &path);

void write_graph(std::ostream &out, const Graph &graph);
std::string serialize_graph(const Graph &graph);

enum class GraphKind { cycle, complete, random_gnm, random_regular };

GraphKind parse_graph_kind(std::string_view name);
const char *to_string(GraphKind kind);

struct GeneratorParams {
    /// Edge count for random_gnm.
    std::int64_t edges = 0;
    /// Vertex degree for random_regular.
    int degree = 3;
    std::uint64_t seed = 0;
};

/// Deterministic instance generator: equal arguments always produce
/// identical graphs. random_regular uses the pairing model and gives up with
/// invalid_parameter after max_pairing_attempts rejected pairings.
Graph generate_graph(GraphKind kind, int n, const GeneratorParams &params = {});

inline constexpr int max_pairing_attempts = 1000;

} // namespace lhred
