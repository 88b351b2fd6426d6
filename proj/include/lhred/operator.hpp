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

#include <complex>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lhred/graph.hpp"

namespace lhred {

using Matrix = Eigen::MatrixXcd;

/// Absolute tolerance for the Hermiticity, PSD and norm checks on local terms.
inline constexpr double term_tolerance = 1e-12;

/// Largest number of qubits for which a dense 2^n x 2^n matrix is built.
inline constexpr int default_max_dense_qubits = 12;

/// One summand H_j acting on the qubit set S_j.
///
/// Qubits are 0-based and ordered; the first listed qubit is the most
/// significant bit of the term's local index. A term built by one of the
/// projector factories carries no qubits until bound with on().
class LocalTerm {
public:
    explicit LocalTerm(Matrix matrix, std::vector<int> qubits = {});

    static LocalTerm diagonal(std::span<const double> entries, std::vector<int> qubits = {});

    /// Copy of this operator bound to \p qubits.
    LocalTerm on(std::vector<int> qubits) const;

    int arity() const noexcept { return arity_; }
    const std::vector<int> &qubits() const noexcept { return qubits_; }
    bool is_bound() const noexcept { return !qubits_.empty(); }
    const Matrix &matrix() const noexcept { return matrix_; }
    bool is_diagonal() const noexcept { return diagonal_; }

    /// Diagonal entries times four, present iff the term is diagonal with
    /// real entries that are exact multiples of 1/4.
    const std::optional<std::vector<std::int64_t>> &diagonal_quarters() const noexcept {
        return quarters_;
    }
    bool has_integer_diagonal() const noexcept;
    std::vector<double> diagonal_values() const;

private:
    Matrix matrix_;
    std::vector<int> qubits_;
    int arity_ = 0;
    bool diagonal_ = false;
    std::optional<std::vector<std::int64_t>> quarters_;
};

/// |00><00| + |11><11|
LocalTerm projector_even();
/// |0><0|
LocalTerm projector_zero();
/// |11><11|
LocalTerm projector_one_one();

struct TermReport {
    bool hermitian = false;
    bool psd = false;
    bool norm_bounded = false;
    double min_eigenvalue = 0.0;
    double norm = 0.0;

    bool ok() const noexcept { return hermitian && psd && norm_bounded; }
    std::string describe() const;
};

/// Checks Hermiticity, positive semidefiniteness and operator norm <= 1.
/// Diagonal terms are checked by exact read-off of the diagonal.
TermReport validate_term(const LocalTerm &term);

/// H = sum_j H_j[S_j] on n qubits with every |S_j| <= locality.
class LocalHamiltonian {
public:
    explicit LocalHamiltonian(int n_qubits, int locality = 2);

    /// Appends a bound term. Rejects terms outside the qubit range, above the
    /// locality bound, or failing validate_term.
    void add_term(LocalTerm term);

    int n_qubits() const noexcept { return n_qubits_; }
    int locality() const noexcept { return locality_; }
    std::span<const LocalTerm> terms() const noexcept { return terms_; }
    std::size_t n_terms() const noexcept { return terms_.size(); }

    bool is_diagonal() const noexcept;
    /// All terms diagonal with quarter-integer entries.
    bool is_exact_diagonal() const noexcept;

private:
    int n_qubits_;
    int locality_;
    std::vector<LocalTerm> terms_;
};

/// An energy that is exact whenever it is a quarter-integer, with a double
/// fallback for arbitrary real spectra.
class EnergyValue {
public:
    static EnergyValue exact(std::int64_t quarters) noexcept;
    static EnergyValue approximate(double value) noexcept;

    bool is_exact() const noexcept { return exact_; }
    /// 4x the value; throws unless is_exact().
    std::int64_t quarters() const;
    double value() const noexcept;
    /// "<quarters>" style integer text when exact, %.17g otherwise.
    std::string to_string() const;

    friend bool operator==(const EnergyValue &, const EnergyValue &) = default;

private:
    bool exact_ = true;
    std::int64_t quarters_ = 0;
    double value_ = 0.0;
};

/// <x|H|x> for a Hamiltonian made of diagonal terms.
EnergyValue basis_energy(const LocalHamiltonian &hamiltonian, const Assignment &x);

/// A[S] on n qubits: the term's matrix on \p qubits, identity elsewhere.
Matrix embed_dense(const LocalTerm &term, std::span<const int> qubits, int n_qubits,
                   int max_qubits = default_max_dense_qubits);

/// Entrywise sum of the embedded terms.
Matrix dense_matrix(const LocalHamiltonian &hamiltonian, int max_qubits = default_max_dense_qubits);

/// Parsed LHAM document. Lines beginning with "promise" are kept verbatim
/// for the reduction layer.
struct LhamDocument {
    LocalHamiltonian hamiltonian{1};
    std::optional<std::string> promise_line;
};

LhamDocument parse_lham(std::istream &in);
LhamDocument parse_lham(std::string_view text);
LhamDocument read_lham_file(const std::string &path);

/// Writes the LHAM header and terms. Integer diagonal terms use the compact
/// "d" form; everything else is written as full complex matrices.
void write_lham(std::ostream &out, const LocalHamiltonian &hamiltonian);

} // namespace lhred
