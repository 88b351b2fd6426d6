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

#include "lhred/operator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "lhred/error.hpp"

namespace lhred {

namespace {

int arity_of(const Matrix &m) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::invalid_parameter, "term matrix must be square");
    switch (m.rows()) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default:
        throw Error(ErrorCode::invalid_parameter,
                    "term matrix dimension must be 2, 4 or 8, got " + std::to_string(m.rows()));
    }
}

void check_distinct(const std::vector<int> &qubits) {
    auto sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::invalid_parameter, "term qubits must be distinct");
}

std::optional<std::int64_t> as_quarters(std::complex<double> z) {
    if (z.imag() != 0.0)
        return std::nullopt;
    const double scaled = z.real() * 4.0;
    if (!std::isfinite(scaled) || std::abs(scaled) > 9.0e15 || scaled != std::round(scaled))
        return std::nullopt;
    return static_cast<std::int64_t>(scaled);
}

} // namespace

LocalTerm::LocalTerm(Matrix matrix, std::vector<int> qubits)
    : matrix_(std::move(matrix)), qubits_(std::move(qubits)) {
    arity_ = arity_of(matrix_);
    if (!qubits_.empty()) {
        if (static_cast<int>(qubits_.size()) != arity_)
            throw Error(ErrorCode::length_mismatch, "term acts on " + std::to_string(arity_) +
                                                        " qubits but " + std::to_string(qubits_.size()) +
                                                        " were listed");
        check_distinct(qubits_);
    }
    diagonal_ = true;
    for (Eigen::Index r = 0; r < matrix_.rows() && diagonal_; ++r)
        for (Eigen::Index c = 0; c < matrix_.cols(); ++c)
            if (r != c && matrix_(r, c) != std::complex<double>{}) {
                diagonal_ = false;
                break;
            }
    if (diagonal_) {
        std::vector<std::int64_t> q;
        q.reserve(static_cast<std::size_t>(matrix_.rows()));
        for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
            auto v = as_quarters(matrix_(i, i));
            if (!v)
                break;
            q.push_back(*v);
        }
        if (static_cast<Eigen::Index>(q.size()) == matrix_.rows())
            quarters_ = std::move(q);
    }
}

LocalTerm LocalTerm::diagonal(std::span<const double> entries, std::vector<int> qubits) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(entries.size()), static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
    return LocalTerm(std::move(m), std::move(qubits));
}

LocalTerm LocalTerm::on(std::vector<int> qubits) const {
    return LocalTerm(matrix_, std::move(qubits));
}

bool LocalTerm::has_integer_diagonal() const noexcept {
    if (!quarters_)
        return false;
    return std::all_of(quarters_->begin(), quarters_->end(), [](std::int64_t q) { return q % 4 == 0; });
}

std::vector<double> LocalTerm::diagonal_values() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(matrix_.rows()));
    for (Eigen::Index i = 0; i < matrix_.rows(); ++i)
        out.push_back(matrix_(i, i).real());
    return out;
}

LocalTerm projector_even() {
    const double d[] = {1, 0, 0, 1};
    return LocalTerm::diagonal(d);
}

LocalTerm projector_zero() {
    const double d[] = {1, 0};
    return LocalTerm::diagonal(d);
}

LocalTerm projector_one_one() {
    const double d[] = {0, 0, 0, 1};
    return LocalTerm::diagonal(d);
}

std::string TermReport::describe() const {
    std::ostringstream out;
    out << "hermitian=" << (hermitian ? "yes" : "no") << " psd=" << (psd ? "yes" : "no")
        << " norm_bounded=" << (norm_bounded ? "yes" : "no") << " min_eigenvalue=" << min_eigenvalue
        << " norm=" << norm;
    return out.str();
}

TermReport validate_term(const LocalTerm &term) {
    TermReport report;
    const Matrix &m = term.matrix();
    if (term.is_diagonal()) {
        bool real = true;
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            real = real && m(i, i).imag() == 0.0;
            lo = std::min(lo, m(i, i).real());
            hi = std::max(hi, std::abs(m(i, i)));
        }
        report.hermitian = real;
        report.min_eigenvalue = lo;
        report.norm = hi;
    } else {
        double asym = 0.0;
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                asym = std::max(asym, std::abs(m(r, c) - std::conj(m(c, r))));
        report.hermitian = asym <= term_tolerance;
        const Matrix herm = (m + m.adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
        report.min_eigenvalue = solver.eigenvalues().minCoeff();
        Eigen::JacobiSVD<Matrix> svd(m);
        report.norm = svd.singularValues()(0);
    }
    report.psd = report.hermitian && report.min_eigenvalue >= -term_tolerance;
    report.norm_bounded = report.norm <= 1.0 + term_tolerance;
    return report;
}

LocalHamiltonian::LocalHamiltonian(int n_qubits, int locality) : n_qubits_(n_qubits), locality_(locality) {
    if (n_qubits < 1)
        throw Error(ErrorCode::invalid_parameter, "hamiltonian needs at least one qubit");
    if (locality < 1 || locality > 3)
        throw Error(ErrorCode::invalid_parameter, "locality must be 1, 2 or 3");
}

void LocalHamiltonian::add_term(LocalTerm term) {
    if (!term.is_bound())
        throw Error(ErrorCode::invalid_parameter, "term is not bound to qubits");
    if (term.arity() > locality_)
        throw Error(ErrorCode::invalid_parameter, "term acts on " + std::to_string(term.arity()) +
                                                      " qubits, locality is " + std::to_string(locality_));
    for (int q : term.qubits())
        if (q < 0 || q >= n_qubits_)
            throw Error(ErrorCode::out_of_range, "qubit " + std::to_string(q + 1) + " outside [1, " +
                                                     std::to_string(n_qubits_) + "]");
    const auto report = validate_term(term);
    if (!report.ok())
        throw Error(ErrorCode::invalid_parameter, "term is not a bounded PSD operator (" + report.describe() + ")");
    terms_.push_back(std::move(term));
}

bool LocalHamiltonian::is_diagonal() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const LocalTerm &t) { return t.is_diagonal(); });
}

bool LocalHamiltonian::is_exact_diagonal() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const LocalTerm &t) { return t.diagonal_quarters().has_value(); });
}

EnergyValue EnergyValue::exact(std::int64_t quarters) noexcept {
    EnergyValue e;
    e.exact_ = true;
    e.quarters_ = quarters;
    e.value_ = static_cast<double>(quarters) / 4.0;
    return e;
}

EnergyValue EnergyValue::approximate(double value) noexcept {
    EnergyValue e;
    e.exact_ = false;
    e.value_ = value;
    return e;
}

std::int64_t EnergyValue::quarters() const {
    if (!exact_)
        throw Error(ErrorCode::unsupported_term, "energy is not an exact quarter-integer");
    return quarters_;
}

double EnergyValue::value() const noexcept { return value_; }

std::string EnergyValue::to_string() const {
    if (exact_) {
        const std::uint64_t mag = quarters_ < 0 ? 0 - static_cast<std::uint64_t>(quarters_)
                                                : static_cast<std::uint64_t>(quarters_);
        std::string s = quarters_ < 0 ? "-" : "";
        s += std::to_string(mag / 4);
        static constexpr const char *fraction[] = {"", ".25", ".5", ".75"};
        s += fraction[mag % 4];
        return s;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value_);
    return buf;
}

namespace {

// Local index of the term's qubits inside basis state x; first listed qubit
// is the most significant bit.
std::size_t local_index(const std::vector<int> &qubits, const Assignment &x) {
    std::size_t sub = 0;
    for (int q : qubits)
        sub = (sub << 1) | (x[static_cast<std::size_t>(q)] ? 1U : 0U);
    return sub;
}

} // namespace

EnergyValue basis_energy(const LocalHamiltonian &hamiltonian, const Assignment &x) {
    if (static_cast<int>(x.size()) != hamiltonian.n_qubits())
        throw Error(ErrorCode::length_mismatch, "assignment has " + std::to_string(x.size()) +
                                                    " bits, hamiltonian has " +
                                                    std::to_string(hamiltonian.n_qubits()) + " qubits");
    if (!hamiltonian.is_diagonal())
        throw Error(ErrorCode::unsupported_term, "basis_energy needs diagonal terms");
    if (hamiltonian.is_exact_diagonal()) {
        std::int64_t total = 0;
        for (const auto &term : hamiltonian.terms())
            total += (*term.diagonal_quarters())[local_index(term.qubits(), x)];
        return EnergyValue::exact(total);
    }
    double total = 0.0;
    for (const auto &term : hamiltonian.terms()) {
        const auto sub = static_cast<Eigen::Index>(local_index(term.qubits(), x));
        total += term.matrix()(sub, sub).real();
    }
    return EnergyValue::approximate(total);
}

namespace {

void check_dense_size(int n_qubits, int max_qubits) {
    if (n_qubits < 1 || n_qubits > max_qubits)
        throw Error(ErrorCode::size_limit, "dense matrices limited to " + std::to_string(max_qubits) +
                                               " qubits, got " + std::to_string(n_qubits));
}

// out += term[qubits]
void accumulate_embedded(Matrix &out, const LocalTerm &term, std::span<const int> qubits, int n_qubits) {
    if (static_cast<int>(qubits.size()) != term.arity())
        throw Error(ErrorCode::length_mismatch, "qubit list does not match term arity");
    check_distinct(std::vector<int>(qubits.begin(), qubits.end()));
    for (int q : qubits)
        if (q < 0 || q >= n_qubits)
            throw Error(ErrorCode::out_of_range, "qubit " + std::to_string(q + 1) + " outside [1, " +
                                                     std::to_string(n_qubits) + "]");

    // Bit position of each term qubit inside the global index (qubit 0 is MSB).
    std::vector<int> shift;
    std::size_t support = 0;
    for (int q : qubits) {
        shift.push_back(n_qubits - 1 - q);
        support |= std::size_t{1} << (n_qubits - 1 - q);
    }
    auto gather = [&](std::size_t idx) {
        std::size_t sub = 0;
        for (int s : shift)
            sub = (sub << 1) | ((idx >> s) & 1U);
        return sub;
    };
    auto scatter = [&](std::size_t sub) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < shift.size(); ++j)
            if ((sub >> (shift.size() - 1 - j)) & 1U)
                idx |= std::size_t{1} << shift[j];
        return idx;
    };

    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t local_dim = std::size_t{1} << qubits.size();
    for (std::size_t row = 0; row < dim; ++row) {
        const std::size_t rest = row & ~support;
        const auto r = static_cast<Eigen::Index>(gather(row));
        for (std::size_t c = 0; c < local_dim; ++c) {
            const auto &entry = term.matrix()(r, static_cast<Eigen::Index>(c));
            if (entry != std::complex<double>{})
                out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(rest | scatter(c))) += entry;
        }
    }
}

} // namespace

Matrix embed_dense(const LocalTerm &term, std::span<const int> qubits, int n_qubits, int max_qubits) {
    check_dense_size(n_qubits, max_qubits);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    Matrix out = Matrix::Zero(dim, dim);
    accumulate_embedded(out, term, qubits, n_qubits);
    return out;
}

Matrix dense_matrix(const LocalHamiltonian &hamiltonian, int max_qubits) {
    const int n = hamiltonian.n_qubits();
    check_dense_size(n, max_qubits);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Matrix out = Matrix::Zero(dim, dim);
    for (const auto &term : hamiltonian.terms())
        accumulate_embedded(out, term, term.qubits(), n);
    return out;
}

} // namespace lhred
