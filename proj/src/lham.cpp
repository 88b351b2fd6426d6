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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lhred/error.hpp"
#include "lhred/operator.hpp"

namespace lhred {

namespace {

struct LineReader {
    std::istream &in;
    int line_no = 0;

    // Next non-blank, non-comment line split into tokens.
    bool next(std::vector<std::string> &tokens, std::string &raw) {
        while (std::getline(in, raw)) {
            ++line_no;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            std::istringstream fields(raw);
            tokens.clear();
            for (std::string tok; fields >> tok;)
                tokens.push_back(tok);
            if (tokens.empty() || tokens[0] == "c")
                continue;
            return true;
        }
        return false;
    }
};

std::int64_t to_int(const std::string &token, int line) {
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(token, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos != token.size() || token.empty())
        throw Error(ErrorCode::parse, "expected an integer, got '" + token + "'", line);
    return value;
}

double to_double(const std::string &token, int line) {
    std::size_t pos = 0;
    double value = 0;
    try {
        value = std::stod(token, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos != token.size() || token.empty())
        throw Error(ErrorCode::parse, "expected a number, got '" + token + "'", line);
    return value;
}

std::int64_t keyed(const std::vector<std::string> &tokens, const char *key, int line) {
    if (tokens.size() != 2 || tokens[0] != key)
        throw Error(ErrorCode::parse, std::string("expected '") + key + " <value>'", line);
    return to_int(tokens[1], line);
}

} // namespace

LhamDocument parse_lham(std::istream &in) {
    LineReader reader{in};
    std::vector<std::string> tokens;
    std::string raw;

    if (!reader.next(tokens, raw) || tokens.size() != 2 || tokens[0] != "lham" || tokens[1] != "1")
        throw Error(ErrorCode::parse, "expected header 'lham 1'", std::max(reader.line_no, 1));
    if (!reader.next(tokens, raw))
        throw Error(ErrorCode::parse, "missing 'n <qubits>' line", reader.line_no);
    const auto n = keyed(tokens, "n", reader.line_no);
    if (!reader.next(tokens, raw))
        throw Error(ErrorCode::parse, "missing 's <locality>' line", reader.line_no);
    const auto s = keyed(tokens, "s", reader.line_no);
    if (n < 1 || n > 63)
        throw Error(ErrorCode::parse, "qubit count must be in [1, 63]", reader.line_no - 1);
    if (s < 1 || s > 3)
        throw Error(ErrorCode::parse, "locality must be 1, 2 or 3", reader.line_no);

    LhamDocument doc{LocalHamiltonian(static_cast<int>(n), static_cast<int>(s)), std::nullopt};
    while (reader.next(tokens, raw)) {
        const int head_line = reader.line_no;
        if (tokens[0] == "promise") {
            if (doc.promise_line)
                throw Error(ErrorCode::parse, "more than one promise line", head_line);
            doc.promise_line = raw.substr(raw.find("promise"));
            continue;
        }
        if (tokens[0] != "t" && tokens[0] != "d")
            throw Error(ErrorCode::parse, "unknown line type '" + tokens[0] + "'", head_line);
        if (doc.promise_line)
            throw Error(ErrorCode::parse, "term after promise line", head_line);
        const bool compact = tokens[0] == "d";
        if (tokens.size() < 2)
            throw Error(ErrorCode::parse, "term line needs an arity", head_line);
        const auto arity = to_int(tokens[1], head_line);
        if (arity < 1 || arity > 3)
            throw Error(ErrorCode::parse, "term arity must be 1, 2 or 3", head_line);
        if (static_cast<std::int64_t>(tokens.size()) != 2 + arity)
            throw Error(ErrorCode::parse, "term line lists the wrong number of qubits", head_line);
        std::vector<int> qubits;
        for (std::int64_t j = 0; j < arity; ++j) {
            const auto q = to_int(tokens[static_cast<std::size_t>(2 + j)], head_line);
            if (q < 1 || q > n)
                throw Error(ErrorCode::out_of_range, "qubit index outside [1, " + std::to_string(n) + "]",
                            head_line);
            qubits.push_back(static_cast<int>(q - 1));
        }

        if (!reader.next(tokens, raw))
            throw Error(ErrorCode::parse, "term line without entries", head_line);
        const int entry_line = reader.line_no;
        const auto dim = std::int64_t{1} << arity;
        Matrix m = Matrix::Zero(dim, dim);
        if (compact) {
            if (static_cast<std::int64_t>(tokens.size()) != dim)
                throw Error(ErrorCode::parse, "compact term needs " + std::to_string(dim) + " integers",
                            entry_line);
            for (std::int64_t i = 0; i < dim; ++i)
                m(i, i) = static_cast<double>(to_int(tokens[static_cast<std::size_t>(i)], entry_line));
        } else {
            if (static_cast<std::int64_t>(tokens.size()) != dim * dim)
                throw Error(ErrorCode::parse, "term needs " + std::to_string(dim * dim) + " complex entries",
                            entry_line);
            for (std::int64_t i = 0; i < dim * dim; ++i) {
                const auto &tok = tokens[static_cast<std::size_t>(i)];
                const auto comma = tok.find(',');
                if (comma == std::string::npos)
                    throw Error(ErrorCode::parse, "complex entry must be 're,im'", entry_line);
                m(i / dim, i % dim) = {to_double(tok.substr(0, comma), entry_line),
                                       to_double(tok.substr(comma + 1), entry_line)};
            }
        }
        try {
            doc.hamiltonian.add_term(LocalTerm(std::move(m), std::move(qubits)));
        } catch (const Error &e) {
            throw Error(ErrorCode::parse, e.what(), head_line);
        }
    }
    return doc;
}

LhamDocument parse_lham(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_lham(in);
}

LhamDocument read_lham_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::io, "cannot open hamiltonian file '" + path + "'");
    return parse_lham(in);
}

void write_lham(std::ostream &out, const LocalHamiltonian &hamiltonian) {
    out << "lham 1\n";
    out << "n " << hamiltonian.n_qubits() << '\n';
    out << "s " << hamiltonian.locality() << '\n';
    for (const auto &term : hamiltonian.terms()) {
        const bool compact = term.has_integer_diagonal();
        out << (compact ? 'd' : 't') << ' ' << term.arity();
        for (int q : term.qubits())
            out << ' ' << q + 1;
        out << '\n';
        const auto &m = term.matrix();
        if (compact) {
            const auto &q = *term.diagonal_quarters();
            for (std::size_t i = 0; i < q.size(); ++i)
                out << (i ? " " : "") << q[i] / 4;
        } else {
            char buf[96];
            for (Eigen::Index r = 0; r < m.rows(); ++r)
                for (Eigen::Index c = 0; c < m.cols(); ++c) {
                    std::snprintf(buf, sizeof buf, "%.17g,%.17g", m(r, c).real(), m(r, c).imag());
                    out << ((r || c) ? " " : "") << buf;
                }
        }
        out << '\n';
    }
}

} // namespace lhred
