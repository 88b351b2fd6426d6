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

#include "lhred/decider.hpp"

#include "lhred/error.hpp"

namespace lhred {

const char *to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::case1: return "case1";
    case Outcome::case2: return "case2";
    case Outcome::promise_violation: return "promise-violation";
    }
    return "?";
}

namespace {

Outcome classify(double lambda, const PromiseInstance &promise) {
    if (lambda <= promise.a() + dense_guard_band)
        return Outcome::case1;
    if (lambda > promise.b() + dense_guard_band)
        return Outcome::case2;
    return Outcome::promise_violation;
}

} // namespace

Decision decide(const LocalHamiltonian &hamiltonian, const PromiseInstance &promise, const SolverLimits &limits) {
    if (promise.n_qubits() != hamiltonian.n_qubits())
        throw Error(ErrorCode::invalid_parameter,
                    "promise is for " + std::to_string(promise.n_qubits()) + " qubits, hamiltonian has " +
                        std::to_string(hamiltonian.n_qubits()));

    Decision decision;
    if (hamiltonian.is_diagonal() && hamiltonian.n_qubits() <= limits.max_enum_qubits) {
        auto ground = min_energy(hamiltonian, limits);
        decision.method = SolveMethod::enumeration;
        decision.min_energy = ground.energy;
        decision.witness = std::move(ground.witness);
        if (decision.min_energy.is_exact()) {
            const auto q = decision.min_energy.quarters();
            decision.outcome = q <= promise.a_quarters()   ? Outcome::case1
                               : q > promise.b_quarters() ? Outcome::case2
                                                          : Outcome::promise_violation;
        } else {
            decision.outcome = classify(decision.min_energy.value(), promise);
        }
        return decision;
    }
    if (hamiltonian.n_qubits() > limits.max_dense_qubits)
        throw Error(ErrorCode::size_limit,
                    hamiltonian.is_diagonal()
                        ? "hamiltonian exceeds the enumeration limit"
                        : "non-diagonal hamiltonian exceeds the dense limit of " +
                              std::to_string(limits.max_dense_qubits) + " qubits");
    const double lambda = dense_min_eigenvalue(hamiltonian, limits);
    decision.method = SolveMethod::dense;
    decision.min_energy = EnergyValue::approximate(lambda);
    decision.outcome = classify(lambda, promise);
    return decision;
}

} // namespace lhred
