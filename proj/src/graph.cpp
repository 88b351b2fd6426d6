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

#include "lhred/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lhred/error.hpp"

namespace lhred {

Graph::Graph(int n_vertices, std::vector<Edge> edges, std::vector<std::int64_t> weights)
    : n_vertices_(n_vertices) {
    if (n_vertices < 1)
        throw Error(ErrorCode::invalid_parameter, "graph needs at least one vertex");
    if (weights.empty())
        weights.assign(edges.size(), 1);
    if (weights.size() != edges.size())
        throw Error(ErrorCode::length_mismatch, "edge weight list does not match edge list");

    struct Weighted {
        Edge edge;
        std::int64_t weight;
    };
    std::vector<Weighted> items;
    items.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
            throw Error(ErrorCode::out_of_range, "edge (" + std::to_string(u + 1) + ", " +
                                                     std::to_string(v + 1) + ") outside vertex range");
        if (u == v)
            throw Error(ErrorCode::invalid_parameter, "self-loop on vertex " + std::to_string(u + 1));
        if (weights[i] < 1)
            throw Error(ErrorCode::invalid_parameter, "edge weights must be positive");
        if (u > v)
            std::swap(u, v);
        items.push_back({{u, v}, weights[i]});
    }
    std::sort(items.begin(), items.end(),
              [](const Weighted &a, const Weighted &b) { return a.edge < b.edge; });
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (items[i].edge == items[i - 1].edge)
            throw Error(ErrorCode::invalid_parameter,
                        "duplicate edge (" + std::to_string(items[i].edge.u + 1) + ", " +
                            std::to_string(items[i].edge.v + 1) + ")");
    }
    edges_.reserve(items.size());
    weights_.reserve(items.size());
    for (const auto &item : items) {
        edges_.push_back(item.edge);
        weights_.push_back(item.weight);
    }
}

std::int64_t Graph::total_weight() const noexcept {
    return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

bool Graph::is_unweighted() const noexcept {
    return std::all_of(weights_.begin(), weights_.end(), [](std::int64_t w) { return w == 1; });
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_vertices_), 0);
    for (const auto &e : edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) {
        if (b > 1)
            throw Error(ErrorCode::invalid_parameter, "assignment entries must be 0 or 1");
    }
}

Assignment Assignment::from_index(std::uint64_t index, int n) {
    if (n < 0 || n > 63)
        throw Error(ErrorCode::size_limit, "assignment length must be in [0, 63] for index conversion");
    Assignment x(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        x.bits_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((index >> (n - 1 - k)) & 1U);
    return x;
}

Assignment Assignment::from_string(std::string_view bits) {
    std::vector<std::uint8_t> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw Error(ErrorCode::parse, "assignment string must contain only 0 and 1");
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Assignment(std::move(out));
}

std::uint64_t Assignment::index() const {
    if (bits_.size() > 63)
        throw Error(ErrorCode::size_limit, "assignment too long for a basis index");
    std::uint64_t idx = 0;
    for (auto b : bits_)
        idx = (idx << 1) | b;
    return idx;
}

std::size_t Assignment::count_ones() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string Assignment::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_)
        s.push_back(b ? '1' : '0');
    return s;
}

namespace {

// Reads a whole non-negative decimal token; rejects trailing junk.
bool parse_int(const std::string &token, std::int64_t &out) {
    if (token.empty())
        return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(token, &pos);
    } catch (const std::exception &) {
        return false;
    }
    return pos == token.size();
}

} // namespace

Graph parse_graph(std::istream &in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::int64_t n = 0;
    std::int64_t m = 0;
    int header_line = 0;
    std::vector<Edge> edges;
    std::vector<std::int64_t> weights;
    std::vector<int> edge_lines;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag))
            continue;
        if (tag == "c")
            continue;

        std::vector<std::string> rest;
        for (std::string tok; fields >> tok;)
            rest.push_back(tok);

        if (tag == "p") {
            if (have_header)
                throw Error(ErrorCode::parse, "second header line", line_no);
            if (rest.size() != 3 || rest[0] != "edge" || !parse_int(rest[1], n) || !parse_int(rest[2], m))
                throw Error(ErrorCode::parse, "malformed header, expected 'p edge <n> <m>'", line_no);
            if (n < 1 || m < 0)
                throw Error(ErrorCode::parse, "header needs n >= 1 and m >= 0", line_no);
            have_header = true;
            header_line = line_no;
        } else if (tag == "e") {
            if (!have_header)
                throw Error(ErrorCode::parse, "edge line before header", line_no);
            std::int64_t u = 0;
            std::int64_t v = 0;
            std::int64_t w = 1;
            if (rest.size() < 2 || rest.size() > 3 || !parse_int(rest[0], u) || !parse_int(rest[1], v) ||
                (rest.size() == 3 && !parse_int(rest[2], w)))
                throw Error(ErrorCode::parse, "malformed edge line, expected 'e <u> <v>'", line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw Error(ErrorCode::out_of_range, "vertex index outside [1, " + std::to_string(n) + "]",
                            line_no);
            if (u == v)
                throw Error(ErrorCode::parse, "self-loop on vertex " + std::to_string(u), line_no);
            if (w < 1)
                throw Error(ErrorCode::parse, "edge weight must be positive", line_no);
            edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
            weights.push_back(w);
            edge_lines.push_back(line_no);
        } else {
            throw Error(ErrorCode::parse, "unknown line type '" + tag + "'", line_no);
        }
    }
    if (!have_header)
        throw Error(ErrorCode::parse, "missing 'p edge' header", line_no > 0 ? line_no : 1);
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw Error(ErrorCode::parse,
                    "header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                        " were given",
                    header_line);

    // Duplicate detection here so the report points at the second occurrence.
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto key = [&](std::size_t i) {
        auto [u, v] = edges[i];
        return u < v ? Edge{u, v} : Edge{v, u};
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (key(order[i]) == key(order[i - 1])) {
            const auto later = std::max(edge_lines[order[i]], edge_lines[order[i - 1]]);
            throw Error(ErrorCode::parse, "duplicate edge", later);
        }
    }
    return Graph(static_cast<int>(n), std::move(edges), std::move(weights));
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

Graph read_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::io, "cannot open graph file '" + path + "'");
    return parse_graph(in);
}

void write_graph(std::ostream &out, const Graph &graph) {
    out << "p edge " << graph.n_vertices() << ' ' << graph.n_edges() << '\n';
    const auto edges = graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out << "e " << edges[i].u + 1 << ' ' << edges[i].v + 1;
        if (graph.weight(i) != 1)
            out << ' ' << graph.weight(i);
        out << '\n';
    }
}

std::string serialize_graph(const Graph &graph) {
    std::ostringstream out;
    write_graph(out, graph);
    return out.str();
}

} // namespace lhred
