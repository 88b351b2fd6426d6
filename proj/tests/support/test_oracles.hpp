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

// Test-only ground truth. Nothing here calls into the embedding or the
// enumeration code paths it is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lhred/graph.hpp"
#include "lhred/operator.hpp"

namespace lhred::testing {

/// Left side of the even-edge inequality: sum over edges of
/// X_k X_l + (1 - X_k)(1 - X_l).
inline std::int64_t maxcut_energy_formula(const Graph &g, const Assignment &x) {
    std::int64_t total = 0;
    for (const auto &e : g.edges()) {
        const int xk = x[static_cast<std::size_t>(e.u)];
        const int xl = x[static_cast<std::size_t>(e.v)];
        total += xk * xl + (1 - xk) * (1 - xl);
    }
    return total;
}

/// sum_k (1 - X_k) + sum_edges X_k X_l
inline std::int64_t indset_energy_formula(const Graph &g, const Assignment &x) {
    std::int64_t total = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
        total += 1 - static_cast<int>(x[k]);
    for (const auto &e : g.edges())
        total += static_cast<int>(x[static_cast<std::size_t>(e.u)]) * static_cast<int>(x[static_cast<std::size_t>(e.v)]);
    return total;
}

/// Recursive max cut: tries both sides for every vertex.
inline std::int64_t recursive_max_cut(const Graph &g) {
    const int n = g.n_vertices();
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    std::int64_t best = 0;
    auto rec = [&](auto &&self, int k) -> void {
        if (k == n) {
            std::int64_t cut = 0;
            for (std::size_t i = 0; i < g.n_edges(); ++i)
                if (side[static_cast<std::size_t>(g.edges()[i].u)] != side[static_cast<std::size_t>(g.edges()[i].v)])
                    cut += g.weight(i);
            best = std::max(best, cut);
            return;
        }
        for (int s : {0, 1}) {
            side[static_cast<std::size_t>(k)] = s;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return best;
}

/// Maximum independent set by include/exclude branching on adjacency lists.
inline int recursive_independence_number(const Graph &g) {
    const int n = g.n_vertices();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto &e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> blocked(static_cast<std::size_t>(n), 0);
    int best = 0;
    auto rec = [&](auto &&self, int k, int size) -> void {
        if (k == n) {
            best = std::max(best, size);
            return;
        }
        self(self, k + 1, size);
        if (blocked[static_cast<std::size_t>(k)] == 0) {
            for (int v : adj[static_cast<std::size_t>(k)])
                ++blocked[static_cast<std::size_t>(v)];
            self(self, k + 1, size + 1);
            for (int v : adj[static_cast<std::size_t>(k)])
                --blocked[static_cast<std::size_t>(v)];
        }
    };
    rec(rec, 0, 0);
    return best;
}

/// Erdos-Renyi G(n, p) built with the test's own RNG.
inline Graph random_graph(int n, double density, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

inline Assignment random_assignment(std::size_t n, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<std::uint8_t> bits(n);
    for (auto &b : bits)
        b = coin(rng) ? 1 : 0;
    return Assignment(std::move(bits));
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// A[S] built as P^T (A kron I) P, where P reorders qubits so that S comes
/// first (in listed order) followed by the remaining qubits ascending.
inline Eigen::MatrixXcd tensor_product_embedding(const Eigen::MatrixXcd &a, const std::vector<int> &qubits,
                                                 int n) {
    std::vector<int> order = qubits;
    for (int q = 0; q < n; ++q)
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end())
            order.push_back(q);
    const int rest = n - static_cast<int>(qubits.size());
    const Eigen::MatrixXcd big =
        kron(a, Eigen::MatrixXcd::Identity(Eigen::Index{1} << rest, Eigen::Index{1} << rest));

    // perm(i, j) = 1 when reordered index i is the same basis state as
    // natural index j.
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd perm = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        Eigen::Index i = 0;
        for (int pos = 0; pos < n; ++pos) {
            const int q = order[static_cast<std::size_t>(pos)];
            const auto bit = (j >> (n - 1 - q)) & 1;
            i |= bit << (n - 1 - pos);
        }
        perm(i, j) = 1.0;
    }
    return perm.transpose() * big * perm;
}

/// Random Hermitian PSD matrix with operator norm in (0, 1].
inline Eigen::MatrixXcd random_psd(int arity, std::mt19937_64 &rng) {
    const Eigen::Index dim = Eigen::Index{1} << arity;
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd b(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            b(i, j) = {normal(rng), normal(rng)};
    Eigen::MatrixXcd a = b * b.adjoint();
    a = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    std::uniform_real_distribution<double> scale(0.1, 0.999);
    a *= scale(rng) / solver.eigenvalues().maxCoeff();
    // Restore exact Hermiticity after scaling.
    return (a + a.adjoint()) / 2.0;
}

/// Distinct qubits drawn uniformly, in random order.
inline std::vector<int> random_qubits(int arity, int n, std::mt19937_64 &rng) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        all[static_cast<std::size_t>(q)] = q;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(arity));
    return all;
}

} // namespace lhred::testing
