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

#include "lhred/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <optional>

#include "lhred/error.hpp"
#include "parallel.hpp"

namespace lhred {

unsigned resolve_workers(unsigned requested) noexcept {
    if (requested > 0)
        return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

// Inner loops walk 2^low_bits consecutive states; blocks split the high bits.
constexpr int max_low_bits = 16;

void check_enum_size(int n, const SolverLimits &limits) {
    if (n < 1 || n > limits.max_enum_qubits || n > 62)
        throw Error(ErrorCode::size_limit, "exhaustive enumeration limited to " +
                                               std::to_string(limits.max_enum_qubits) + " bits, got " +
                                               std::to_string(n));
}

// Candidate optimum: value plus the basis index that attains it. The valid
// flag distinguishes the identity element.
template <class Value>
struct Best {
    Value value{};
    std::uint64_t index = 0;
    bool valid = false;
};

template <class Value, class Better>
Best<Value> pick(const Best<Value> &a, const Best<Value> &b, Better better) {
    if (!a.valid)
        return b;
    if (!b.valid)
        return a;
    if (better(b.value, a.value))
        return b;
    if (better(a.value, b.value))
        return a;
    return b.index < a.index ? b : a;
}

// Bit mask of an edge inside a basis index (vertex 0 is the MSB).
std::uint64_t edge_mask(const Edge &e, int n) {
    return (std::uint64_t{1} << (n - 1 - e.u)) | (std::uint64_t{1} << (n - 1 - e.v));
}

template <class Eval, class Better>
OracleResult enumerate_graph(const Graph &graph, const SolverLimits &limits, Eval eval, Better better) {
    const int n = graph.n_vertices();
    check_enum_size(n, limits);
    const int low = std::min(n, max_low_bits);
    const std::uint64_t n_blocks = std::uint64_t{1} << (n - low);
    const std::uint64_t block_size = std::uint64_t{1} << low;

    auto block = [&](std::uint64_t b) {
        Best<std::int64_t> best;
        const std::uint64_t base = b << low;
        for (std::uint64_t i = 0; i < block_size; ++i) {
            const std::uint64_t idx = base | i;
            const std::int64_t value = eval(idx);
            if (!best.valid || better(value, best.value)) {
                best = {value, idx, true};
            }
        }
        return best;
    };
    auto merge = [&](const Best<std::int64_t> &a, const Best<std::int64_t> &b) { return pick(a, b, better); };
    const auto best = detail::reduce_blocks(n_blocks, resolve_workers(limits.workers), Best<std::int64_t>{}, block, merge);
    return {best.value, Assignment::from_index(best.index, n), std::uint64_t{1} << n};
}

} // namespace

OracleResult brute_force_max_cut(const Graph &graph, const SolverLimits &limits) {
    const int n = graph.n_vertices();
    std::vector<std::uint64_t> masks;
    for (const auto &e : graph.edges())
        masks.push_back(edge_mask(e, n));
    const auto weights = graph.weights();
    auto eval = [&](std::uint64_t idx) {
        std::int64_t cut = 0;
        for (std::size_t i = 0; i < masks.size(); ++i)
            if (std::popcount(idx & masks[i]) == 1)
                cut += weights[i];
        return cut;
    };
    return enumerate_graph(graph, limits, eval, std::greater<>{});
}

OracleResult brute_force_max_independent_set(const Graph &graph, const SolverLimits &limits) {
    const int n = graph.n_vertices();
    std::vector<std::uint64_t> masks;
    for (const auto &e : graph.edges())
        masks.push_back(edge_mask(e, n));
    // Dependent subsets score -1 so they never beat the empty set.
    auto eval = [&](std::uint64_t idx) -> std::int64_t {
        for (auto m : masks)
            if ((idx & m) == m)
                return -1;
        return std::popcount(idx);
    };
    return enumerate_graph(graph, limits, eval, std::greater<>{});
}

namespace {

struct CompiledTerm {
    std::array<int, 3> shifts{};
    int arity = 0;
    std::vector<std::int64_t> quarters;
    std::vector<double> values;

    std::size_t local_index(std::uint64_t idx) const noexcept {
        std::size_t sub = 0;
        for (int j = 0; j < arity; ++j)
            sub = (sub << 1) | ((idx >> shifts[static_cast<std::size_t>(j)]) & 1U);
        return sub;
    }
};

std::vector<CompiledTerm> compile(const LocalHamiltonian &h, bool exact) {
    const int n = h.n_qubits();
    std::vector<CompiledTerm> out;
    out.reserve(h.n_terms());
    for (const auto &term : h.terms()) {
        CompiledTerm c;
        c.arity = term.arity();
        for (int j = 0; j < c.arity; ++j)
            c.shifts[static_cast<std::size_t>(j)] = n - 1 - term.qubits()[static_cast<std::size_t>(j)];
        if (exact)
            c.quarters = *term.diagonal_quarters();
        else
            c.values = term.diagonal_values();
        out.push_back(std::move(c));
    }
    return out;
}

GroundState min_energy_exact(const LocalHamiltonian &h, const SolverLimits &limits) {
    const int n = h.n_qubits();
    const auto terms = compile(h, true);
    // Terms touching each bit position, for incremental Gray-code updates.
    std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < terms.size(); ++t)
        for (int j = 0; j < terms[t].arity; ++j)
            incident[static_cast<std::size_t>(terms[t].shifts[static_cast<std::size_t>(j)])].push_back(t);

    const int low = std::min(n, max_low_bits);
    const std::uint64_t n_blocks = std::uint64_t{1} << (n - low);
    const std::uint64_t block_size = std::uint64_t{1} << low;

    auto block = [&](std::uint64_t b) {
        std::uint64_t idx = b << low;
        std::int64_t energy = 0;
        for (const auto &t : terms)
            energy += t.quarters[t.local_index(idx)];
        Best<std::int64_t> best{energy, idx, true};
        for (std::uint64_t step = 1; step < block_size; ++step) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(step));
            const auto &touching = incident[bit];
            for (auto t : touching)
                energy -= terms[t].quarters[terms[t].local_index(idx)];
            idx ^= std::uint64_t{1} << bit;
            for (auto t : touching)
                energy += terms[t].quarters[terms[t].local_index(idx)];
            if (energy < best.value || (energy == best.value && idx < best.index))
                best = {energy, idx, true};
        }
        return best;
    };
    auto merge = [](const Best<std::int64_t> &a, const Best<std::int64_t> &b) { return pick(a, b, std::less<>{}); };
    const auto best = detail::reduce_blocks(n_blocks, resolve_workers(limits.workers), Best<std::int64_t>{}, block, merge);
    return {EnergyValue::exact(best.value), Assignment::from_index(best.index, n), std::uint64_t{1} << n};
}

GroundState min_energy_float(const LocalHamiltonian &h, const SolverLimits &limits) {
    const int n = h.n_qubits();
    const auto terms = compile(h, false);
    const int low = std::min(n, max_low_bits);
    const std::uint64_t n_blocks = std::uint64_t{1} << (n - low);
    const std::uint64_t block_size = std::uint64_t{1} << low;

    // Summed from scratch per state, in term order, so every state's value is
    // bit-identical regardless of how the range is split.
    auto block = [&](std::uint64_t b) {
        Best<double> best;
        const std::uint64_t base = b << low;
        for (std::uint64_t i = 0; i < block_size; ++i) {
            const std::uint64_t idx = base | i;
            double energy = 0.0;
            for (const auto &t : terms)
                energy += t.values[t.local_index(idx)];
            if (!best.valid || energy < best.value)
                best = {energy, idx, true};
        }
        return best;
    };
    auto merge = [](const Best<double> &a, const Best<double> &b) { return pick(a, b, std::less<>{}); };
    const auto best = detail::reduce_blocks(n_blocks, resolve_workers(limits.workers), Best<double>{}, block, merge);
    return {EnergyValue::approximate(best.value), Assignment::from_index(best.index, n), std::uint64_t{1} << n};
}

} // namespace

GroundState min_energy(const LocalHamiltonian &hamiltonian, const SolverLimits &limits) {
    if (!hamiltonian.is_diagonal())
        throw Error(ErrorCode::unsupported_term, "min_energy needs diagonal terms; use the dense solver");
    check_enum_size(hamiltonian.n_qubits(), limits);
    if (hamiltonian.is_exact_diagonal())
        return min_energy_exact(hamiltonian, limits);
    return min_energy_float(hamiltonian, limits);
}

double dense_min_eigenvalue(const LocalHamiltonian &hamiltonian, const SolverLimits &limits) {
    const Matrix m = dense_matrix(hamiltonian, limits.max_dense_qubits);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::invalid_parameter, "dense eigensolve did not converge");
    return solver.eigenvalues()(0);
}

} // namespace lhred
