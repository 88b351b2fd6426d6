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

#include "lhred/reductions.hpp"

#include <map>
#include <sstream>

#include "lhred/error.hpp"

namespace lhred {

std::string GapExponent::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

const char *to_string(GapStatus status) {
    switch (status) {
    case GapStatus::holds: return "holds";
    case GapStatus::unverified_small_n: return "unverified-small-n";
    case GapStatus::violated: return "violated";
    }
    return "?";
}

PromiseInstance::PromiseInstance(std::int64_t a_quarters, std::int64_t b_quarters, int n_qubits,
                                 GapExponent alpha)
    : a_quarters_(a_quarters), b_quarters_(b_quarters), n_qubits_(n_qubits), alpha_(alpha) {
    if (b_quarters <= a_quarters)
        throw Error(ErrorCode::invalid_parameter, "promise needs b > a");
    if (a_quarters < 0)
        throw Error(ErrorCode::invalid_parameter, "promise thresholds must be nonnegative");
    if (n_qubits < 1)
        throw Error(ErrorCode::invalid_parameter, "promise needs n >= 1");
    if (alpha.num <= 0 || alpha.den <= 0)
        throw Error(ErrorCode::invalid_parameter, "gap exponent must be positive");
}

namespace {

__extension__ typedef unsigned __int128 Wide;
constexpr Wide wide_cap = static_cast<Wide>(1) << 120;

Wide saturating_pow(Wide base, std::int64_t exp) {
    Wide result = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > wide_cap / base)
            return wide_cap;
        result *= base;
    }
    return result;
}

Wide saturating_mul(Wide x, Wide y) {
    if (x != 0 && y > wide_cap / x)
        return wide_cap;
    return x * y;
}

} // namespace

bool PromiseInstance::gap_exceeds_bound() const noexcept {
    // (d/4) > n^(-p/q)  <=>  d^q * n^p > 4^q
    const auto d = static_cast<Wide>(b_quarters_ - a_quarters_);
    const Wide lhs = saturating_mul(saturating_pow(d, alpha_.den),
                                    saturating_pow(static_cast<Wide>(n_qubits_), alpha_.num));
    const Wide rhs = saturating_pow(4, alpha_.den);
    return lhs > rhs;
}

GapStatus PromiseInstance::gap_status() const noexcept {
    if (n_qubits_ < 3)
        return GapStatus::unverified_small_n;
    return gap_exceeds_bound() ? GapStatus::holds : GapStatus::violated;
}

const char *to_string(SourceKind kind) {
    return kind == SourceKind::maxcut ? "maxcut" : "indset";
}

SourceKind parse_source_kind(std::string_view name) {
    if (name == "maxcut")
        return SourceKind::maxcut;
    if (name == "indset")
        return SourceKind::indset;
    throw Error(ErrorCode::invalid_parameter, "unknown problem kind '" + std::string(name) + "'");
}

namespace {

void check_length(const Graph &graph, const Assignment &x) {
    if (static_cast<int>(x.size()) != graph.n_vertices())
        throw Error(ErrorCode::length_mismatch, "assignment has " + std::to_string(x.size()) +
                                                    " bits, graph has " + std::to_string(graph.n_vertices()) +
                                                    " vertices");
}

} // namespace

std::int64_t cut_weight(const Graph &graph, const Assignment &x) {
    check_length(graph, x);
    std::int64_t total = 0;
    const auto edges = graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (x[static_cast<std::size_t>(edges[i].u)] != x[static_cast<std::size_t>(edges[i].v)])
            total += graph.weight(i);
    return total;
}

std::int64_t even_edge_count(const Graph &graph, const Assignment &x) {
    check_length(graph, x);
    std::int64_t total = 0;
    const auto edges = graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (x[static_cast<std::size_t>(edges[i].u)] == x[static_cast<std::size_t>(edges[i].v)])
            total += graph.weight(i);
    return total;
}

std::int64_t independence_penalty(const Graph &graph, const Assignment &x) {
    check_length(graph, x);
    std::int64_t p = 0;
    for (const auto &e : graph.edges())
        if (x[static_cast<std::size_t>(e.u)] && x[static_cast<std::size_t>(e.v)])
            ++p;
    return p;
}

std::int64_t is_value(const Graph &graph, const Assignment &x) {
    return static_cast<std::int64_t>(x.count_ones()) - independence_penalty(graph, x);
}

bool is_independent(const Graph &graph, const Assignment &x) {
    return independence_penalty(graph, x) == 0;
}

ReductionOutput reduce_maxcut(const Graph &graph, std::int64_t w, const ReductionOptions &options) {
    if (!graph.is_unweighted() && !options.allow_weighted)
        throw Error(ErrorCode::invalid_parameter,
                    "weighted graph given; only unit weights are reduced unless the weighted extension is enabled");
    const std::int64_t total = graph.total_weight();
    if (w < 1 || w > total)
        throw Error(ErrorCode::out_of_range,
                    "cut target must lie in [1, " + std::to_string(total) + "], got " + std::to_string(w));

    LocalHamiltonian h(graph.n_vertices(), 2);
    const auto p_even = projector_even();
    const auto edges = graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::int64_t copy = 0; copy < graph.weight(i); ++copy)
            h.add_term(p_even.on({edges[i].u, edges[i].v}));

    const std::int64_t a_quarters = 4 * (total - w) + 2;
    return ReductionOutput{std::move(h), PromiseInstance(a_quarters, a_quarters + 1, graph.n_vertices()),
                           SourceKind::maxcut, w, total};
}

ReductionOutput reduce_independent_set(const Graph &graph, std::int64_t v) {
    const std::int64_t n = graph.n_vertices();
    if (v < 1 || v > n)
        throw Error(ErrorCode::out_of_range,
                    "independent set target must lie in [1, " + std::to_string(n) + "], got " + std::to_string(v));

    LocalHamiltonian h(graph.n_vertices(), 2);
    const auto p_zero = projector_zero();
    const auto p_one_one = projector_one_one();
    for (int k = 0; k < graph.n_vertices(); ++k)
        h.add_term(p_zero.on({k}));
    for (const auto &e : graph.edges())
        h.add_term(p_one_one.on({e.u, e.v}));

    const std::int64_t a_quarters = 4 * (n - v) + 2;
    return ReductionOutput{std::move(h), PromiseInstance(a_quarters, a_quarters + 1, graph.n_vertices()),
                           SourceKind::indset, v, n};
}

RepairTrace repair_independent_set_traced(const Graph &graph, const Assignment &x) {
    check_length(graph, x);
    RepairTrace trace{x, {is_value(graph, x)}};
    for (;;) {
        const Edge *violating = nullptr;
        for (const auto &e : graph.edges()) {
            if (trace.result[static_cast<std::size_t>(e.u)] && trace.result[static_cast<std::size_t>(e.v)]) {
                violating = &e;
                break;
            }
        }
        if (violating == nullptr)
            break;
        trace.result.set(static_cast<std::size_t>(violating->u), false);
        trace.values.push_back(is_value(graph, trace.result));
    }
    return trace;
}

Assignment repair_independent_set(const Graph &graph, const Assignment &x) {
    return repair_independent_set_traced(graph, x).result;
}

std::string format_promise_line(const PromiseRecord &record) {
    const auto &p = record.promise;
    std::ostringstream out;
    out << "promise a_quarters=" << p.a_quarters() << " b_quarters=" << p.b_quarters()
        << " alpha=" << p.alpha().to_string() << " n=" << p.n_qubits();
    if (record.kind)
        out << " kind=" << to_string(*record.kind);
    if (record.target)
        out << " target=" << *record.target;
    if (record.offset)
        out << " offset=" << *record.offset;
    return out.str();
}

namespace {

std::int64_t parse_field(const std::string &key, const std::string &value) {
    std::size_t pos = 0;
    std::int64_t out = 0;
    try {
        out = std::stoll(value, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (value.empty() || pos != value.size())
        throw Error(ErrorCode::parse, "promise field " + key + " is not an integer");
    return out;
}

} // namespace

PromiseRecord parse_promise_line(std::string_view line) {
    std::istringstream fields{std::string(line)};
    std::string tag;
    if (!(fields >> tag) || tag != "promise")
        throw Error(ErrorCode::parse, "promise line must start with 'promise'");
    std::map<std::string, std::string> kv;
    for (std::string tok; fields >> tok;) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorCode::parse, "malformed promise field '" + tok + "'");
        if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
            throw Error(ErrorCode::parse, "repeated promise field '" + tok.substr(0, eq) + "'");
    }
    for (const char *required : {"a_quarters", "b_quarters", "n"})
        if (!kv.count(required))
            throw Error(ErrorCode::parse, std::string("promise line lacks ") + required);

    GapExponent alpha;
    if (auto it = kv.find("alpha"); it != kv.end()) {
        const auto slash = it->second.find('/');
        if (slash == std::string::npos) {
            alpha = {parse_field("alpha", it->second), 1};
        } else {
            alpha = {parse_field("alpha", it->second.substr(0, slash)),
                     parse_field("alpha", it->second.substr(slash + 1))};
        }
    }
    const auto n = parse_field("n", kv.at("n"));
    if (n < 1 || n > 63)
        throw Error(ErrorCode::parse, "promise qubit count out of range");
    PromiseRecord record{PromiseInstance(parse_field("a_quarters", kv.at("a_quarters")),
                                         parse_field("b_quarters", kv.at("b_quarters")), static_cast<int>(n),
                                         alpha),
                         std::nullopt, std::nullopt, std::nullopt};
    if (auto it = kv.find("kind"); it != kv.end())
        record.kind = parse_source_kind(it->second);
    if (auto it = kv.find("target"); it != kv.end())
        record.target = parse_field("target", it->second);
    if (auto it = kv.find("offset"); it != kv.end())
        record.offset = parse_field("offset", it->second);
    return record;
}

void write_reduction(std::ostream &out, const ReductionOutput &reduction) {
    write_lham(out, reduction.hamiltonian);
    out << format_promise_line({reduction.promise, reduction.source_kind, reduction.target, reduction.offset})
        << '\n';
}

} // namespace lhred
