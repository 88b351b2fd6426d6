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

#include <algorithm>
#include <random>
#include <set>

#include "lhred/error.hpp"
#include "lhred/graph.hpp"

namespace lhred {

namespace {

// std::uniform_int_distribution is implementation-defined; this keeps
// generated instances identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r = rng();
    while (r >= limit)
        r = rng();
    return r % bound;
}

template <class T>
void shuffle(std::vector<T> &items, std::mt19937_64 &rng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[uniform_below(rng, i)]);
}

Graph make_cycle(int n) {
    if (n < 3)
        throw Error(ErrorCode::invalid_parameter, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int k = 0; k < n; ++k)
        edges.push_back({k, (k + 1) % n});
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph make_gnm(int n, std::int64_t m, std::uint64_t seed) {
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m < 0 || m > pairs)
        throw Error(ErrorCode::invalid_parameter,
                    "random_gnm needs 0 <= m <= " + std::to_string(pairs));
    std::mt19937_64 rng(seed);
    // Floyd's sampling over the pair index space.
    std::set<std::int64_t> chosen;
    for (std::int64_t j = pairs - m; j < pairs; ++j) {
        const auto t = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(j + 1)));
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (auto idx : chosen) {
        int u = 0;
        std::int64_t row = n - 1;
        while (idx >= row) {
            idx -= row;
            ++u;
            --row;
        }
        edges.push_back({u, u + 1 + static_cast<int>(idx)});
    }
    return Graph(n, std::move(edges));
}

Graph make_regular(int n, int d, std::uint64_t seed) {
    if (d < 0 || d >= n || (static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw Error(ErrorCode::invalid_parameter,
                    "random_regular needs 0 <= d < n and n*d even (n=" + std::to_string(n) +
                        ", d=" + std::to_string(d) + ")");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i)
            stubs.push_back(v);

    for (int attempt = 0; attempt < max_pairing_attempts; ++attempt) {
        shuffle(stubs, rng);
        std::set<Edge> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i];
            int v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v)
                std::swap(u, v);
            if (!seen.insert({u, v}).second) {
                ok = false;
                break;
            }
        }
        if (ok)
            return Graph(n, std::vector<Edge>(seen.begin(), seen.end()));
    }
    throw Error(ErrorCode::invalid_parameter,
                "random_regular: no simple pairing found in " + std::to_string(max_pairing_attempts) +
                    " attempts");
}

} // namespace

GraphKind parse_graph_kind(std::string_view name) {
    if (name == "cycle")
        return GraphKind::cycle;
    if (name == "complete")
        return GraphKind::complete;
    if (name == "random_gnm")
        return GraphKind::random_gnm;
    if (name == "random_regular")
        return GraphKind::random_regular;
    throw Error(ErrorCode::invalid_parameter, "unknown graph kind '" + std::string(name) + "'");
}

const char *to_string(GraphKind kind) {
    switch (kind) {
    case GraphKind::cycle: return "cycle";
    case GraphKind::complete: return "complete";
    case GraphKind::random_gnm: return "random_gnm";
    case GraphKind::random_regular: return "random_regular";
    }
    return "?";
}

Graph generate_graph(GraphKind kind, int n, const GeneratorParams &params) {
    if (n < 1)
        throw Error(ErrorCode::invalid_parameter, "generator needs n >= 1");
    switch (kind) {
    case GraphKind::cycle: return make_cycle(n);
    case GraphKind::complete: return make_complete(n);
    case GraphKind::random_gnm: return make_gnm(n, params.edges, params.seed);
    case GraphKind::random_regular: return make_regular(n, params.degree, params.seed);
    }
    throw Error(ErrorCode::invalid_parameter, "unknown graph kind");
}

} // namespace lhred
