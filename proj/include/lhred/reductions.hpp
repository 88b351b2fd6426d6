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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lhred/graph.hpp"
#include "lhred/operator.hpp"

namespace lhred {

/// Positive rational gap exponent alpha = num / den.
struct GapExponent {
    std::int64_t num = 2;
    std::int64_t den = 1;

    std::string to_string() const;
    friend bool operator==(const GapExponent &, const GapExponent &) = default;
};

enum class GapStatus {
    holds,
    /// n < 3: the instance is emitted but the b - a > n^-alpha argument is
    /// not claimed for it.
    unverified_small_n,
    violated,
};

const char *to_string(GapStatus status);

/// Thresholds a < b of a local Hamiltonian promise problem, stored as
/// quarter-integers (a = a_quarters / 4) so every comparison is exact.
class PromiseInstance {
public:
    PromiseInstance(std::int64_t a_quarters, std::int64_t b_quarters, int n_qubits, GapExponent alpha = {});

    std::int64_t a_quarters() const noexcept { return a_quarters_; }
    std::int64_t b_quarters() const noexcept { return b_quarters_; }
    double a() const noexcept { return static_cast<double>(a_quarters_) / 4.0; }
    double b() const noexcept { return static_cast<double>(b_quarters_) / 4.0; }
    int n_qubits() const noexcept { return n_qubits_; }
    const GapExponent &alpha() const noexcept { return alpha_; }

    /// Exact test of (b - a) > n^-alpha.
    bool gap_exceeds_bound() const noexcept;
    GapStatus gap_status() const noexcept;

    friend bool operator==(const PromiseInstance &, const PromiseInstance &) = default;

private:
    std::int64_t a_quarters_;
    std::int64_t b_quarters_;
    int n_qubits_;
    GapExponent alpha_;
};

enum class SourceKind { maxcut, indset };

const char *to_string(SourceKind kind);
SourceKind parse_source_kind(std::string_view name);

struct ReductionOutput {
    LocalHamiltonian hamiltonian;
    PromiseInstance promise;
    SourceKind source_kind;
    /// w for MAX CUT, v for INDEPENDENT SET.
    std::int64_t target;
    /// |E| (total weight) for MAX CUT, |V| for INDEPENDENT SET.
    std::int64_t offset;
};

struct ReductionOptions {
    /// Accept weighted graphs in reduce_maxcut. An edge of weight c becomes c
    /// copies of the unit projector term so every term keeps norm <= 1.
    bool allow_weighted = false;
};

/// Total weight of edges whose endpoints take different values; on simple
/// graphs this is the number of cut edges |E_01| + |E_10|.
std::int64_t cut_weight(const Graph &graph, const Assignment &x);

/// Total weight of edges whose endpoints agree, |E_00| + |E_11|.
std::int64_t even_edge_count(const Graph &graph, const Assignment &x);

/// Number of selected vertices minus the number of edges with both ends
/// selected. Negative for sufficiently dense selections.
std::int64_t is_value(const Graph &graph, const Assignment &x);

/// Number of edges with both endpoints selected.
std::int64_t independence_penalty(const Graph &graph, const Assignment &x);

bool is_independent(const Graph &graph, const Assignment &x);

/// One P_even term per edge; a = |E| - w + 1/2, b = a + 1/4.
ReductionOutput reduce_maxcut(const Graph &graph, std::int64_t w, const ReductionOptions &options = {});

/// One P_0 term per vertex followed by one P_11 term per edge;
/// a = |V| - v + 1/2, b = a + 1/4.
ReductionOutput reduce_independent_set(const Graph &graph, std::int64_t v);

struct RepairTrace {
    Assignment result;
    /// is_value before the first step and after each step.
    std::vector<std::int64_t> values;

    std::size_t iterations() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

/// Turns any selection into an independent set without lowering is_value:
/// while an edge has both ends selected, take the lexicographically first
/// such edge and deselect its smaller endpoint.
Assignment repair_independent_set(const Graph &graph, const Assignment &x);
RepairTrace repair_independent_set_traced(const Graph &graph, const Assignment &x);

/// "promise a_quarters=<A> b_quarters=<B> alpha=<p[/q]> n=<n>" followed by
/// "kind=<k> target=<t> offset=<o>" when the instance came from a reduction.
struct PromiseRecord {
    PromiseInstance promise;
    std::optional<SourceKind> kind;
    std::optional<std::int64_t> target;
    std::optional<std::int64_t> offset;
};

std::string format_promise_line(const PromiseRecord &record);
PromiseRecord parse_promise_line(std::string_view line);

/// LHAM body followed by the promise line.
void write_reduction(std::ostream &out, const ReductionOutput &reduction);

} // namespace lhred
