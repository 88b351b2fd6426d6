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

#include "lhred/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "lhred/decider.hpp"
#include "lhred/error.hpp"
#include "lhred/graph.hpp"
#include "lhred/operator.hpp"
#include "lhred/oracles.hpp"
#include "lhred/reductions.hpp"

namespace lhred::cli {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::io, "cannot write '" + path + "'");
    out << content;
    out.flush();
    if (!out)
        throw Error(ErrorCode::io, "write to '" + path + "' failed");
}

// FNV-1a, 64 bit.
std::string digest(const std::string &bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string float17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void echo_input(std::ostream &out, const std::string &path, const std::string &bytes) {
    out << "input=" << path << " fnv1a64=" << digest(bytes) << '\n';
}

// Energy as printed by solve/decide: exact quarters when available.
std::string energy_field(const EnergyValue &e) {
    if (e.is_exact())
        return "min_energy_quarters=" + std::to_string(e.quarters());
    return "min_energy=" + float17(e.value());
}

struct Options {
    unsigned workers = 0;
    int max_enum_qubits = default_max_enum_qubits;
    int max_dense_qubits = default_max_dense_qubits;

    std::string gen_kind;
    int gen_n = 0;
    std::int64_t gen_edges = 0;
    int gen_degree = 3;
    std::uint64_t gen_seed = 0;
    std::string gen_out;

    std::string reduce_kind;
    std::string reduce_input;
    std::int64_t reduce_target = 0;
    std::string reduce_out;
    bool reduce_weighted = false;

    std::string solve_input;
    std::string solve_method = "enum";

    std::string decide_input;

    std::string oracle_kind;
    std::string oracle_input;

    SolverLimits limits() const { return {max_enum_qubits, max_dense_qubits, workers}; }
};

int cmd_gen(const Options &o, std::ostream &out) {
    GeneratorParams params;
    params.edges = o.gen_edges;
    params.degree = o.gen_degree;
    params.seed = o.gen_seed;
    const auto graph = generate_graph(parse_graph_kind(o.gen_kind), o.gen_n, params);
    const auto text = serialize_graph(graph);
    if (o.gen_out.empty() || o.gen_out == "-") {
        out << text;
        return ok;
    }
    write_file(o.gen_out, text);
    out << "command=gen kind=" << o.gen_kind << " n=" << o.gen_n << " seed=" << o.gen_seed << '\n';
    out << "output=" << o.gen_out << " fnv1a64=" << digest(text) << '\n';
    out << "n=" << graph.n_vertices() << " m=" << graph.n_edges() << '\n';
    return ok;
}

int cmd_reduce(const Options &o, std::ostream &out) {
    const auto kind = parse_source_kind(o.reduce_kind);
    const auto bytes = read_file(o.reduce_input);
    const auto graph = parse_graph(bytes);
    const auto reduction = kind == SourceKind::maxcut
                               ? reduce_maxcut(graph, o.reduce_target, {o.reduce_weighted})
                               : reduce_independent_set(graph, o.reduce_target);
    std::ostringstream body;
    write_reduction(body, reduction);
    write_file(o.reduce_out, body.str());

    const auto &p = reduction.promise;
    out << "command=reduce kind=" << to_string(kind) << " target=" << o.reduce_target << '\n';
    echo_input(out, o.reduce_input, bytes);
    out << "output=" << o.reduce_out << " fnv1a64=" << digest(body.str()) << '\n';
    out << "terms=" << reduction.hamiltonian.n_terms() << " n=" << reduction.hamiltonian.n_qubits()
        << " a_quarters=" << p.a_quarters() << " b_quarters=" << p.b_quarters() << '\n';
    out << "offset=" << reduction.offset << " gap=" << to_string(p.gap_status()) << '\n';
    return ok;
}

int cmd_solve(const Options &o, std::ostream &out) {
    if (o.solve_method != "enum" && o.solve_method != "dense")
        throw Error(ErrorCode::invalid_parameter, "method must be enum or dense");
    const auto bytes = read_file(o.solve_input);
    const auto doc = parse_lham(bytes);
    out << "command=solve method=" << o.solve_method << '\n';
    echo_input(out, o.solve_input, bytes);
    if (o.solve_method == "enum") {
        const auto ground = min_energy(doc.hamiltonian, o.limits());
        out << energy_field(ground.energy) << " argmin=" << ground.witness.to_string() << '\n';
    } else {
        out << "min_eigenvalue=" << float17(dense_min_eigenvalue(doc.hamiltonian, o.limits())) << '\n';
    }
    return ok;
}

int cmd_decide(const Options &o, std::ostream &out, std::ostream &err) {
    const auto bytes = read_file(o.decide_input);
    const auto doc = parse_lham(bytes);
    if (!doc.promise_line) {
        err << "error: '" << o.decide_input << "' has no promise line\n";
        return failure;
    }
    const auto record = parse_promise_line(*doc.promise_line);
    const auto decision = decide(doc.hamiltonian, record.promise, o.limits());

    out << "command=decide\n";
    echo_input(out, o.decide_input, bytes);
    out << "a_quarters=" << record.promise.a_quarters() << " b_quarters=" << record.promise.b_quarters()
        << " gap=" << to_string(record.promise.gap_status()) << '\n';
    out << "outcome=" << to_string(decision.outcome) << ' ';
    if (decision.method == SolveMethod::dense)
        out << "min_eigenvalue=" << float17(decision.min_energy.value());
    else
        out << energy_field(decision.min_energy) << " argmin=" << decision.witness->to_string();
    out << '\n';
    switch (decision.outcome) {
    case Outcome::case1: return ok;
    case Outcome::case2: return case2;
    case Outcome::promise_violation: return promise_violation;
    }
    return failure;
}

int cmd_oracle(const Options &o, std::ostream &out) {
    const auto kind = parse_source_kind(o.oracle_kind);
    const auto bytes = read_file(o.oracle_input);
    const auto graph = parse_graph(bytes);
    const auto result = kind == SourceKind::maxcut ? brute_force_max_cut(graph, o.limits())
                                                   : brute_force_max_independent_set(graph, o.limits());
    out << "command=oracle kind=" << to_string(kind) << '\n';
    echo_input(out, o.oracle_input, bytes);
    out << "optimum=" << result.optimum << " witness=" << result.witness.to_string() << '\n';
    out << "states_examined=" << result.states_examined << '\n';
    return ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Reduce MAX CUT and INDEPENDENT SET to 2-local Hamiltonians and verify the reductions", "lhred"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)");
    app.add_option("--max-enum-qubits", o.max_enum_qubits, "Largest qubit/vertex count for enumeration")
        ->check(CLI::Range(1, 62));
    app.add_option("--max-dense-qubits", o.max_dense_qubits, "Largest qubit count for dense matrices")
        ->check(CLI::Range(1, 16));

    auto *gen = app.add_subcommand("gen", "Generate a graph");
    gen->fallthrough();
    gen->add_option("kind", o.gen_kind, "cycle | complete | random_gnm | random_regular")->required();
    gen->add_option("n", o.gen_n, "Vertex count")->required();
    gen->add_option("--edges,-m", o.gen_edges, "Edge count (random_gnm)");
    gen->add_option("--degree,-d", o.gen_degree, "Vertex degree (random_regular)");
    gen->add_option("--seed", o.gen_seed, "Random seed");
    gen->add_option("--out,-o", o.gen_out, "Output graph file (stdout when omitted)");

    auto *reduce = app.add_subcommand("reduce", "Reduce a graph problem to a 2-local Hamiltonian");
    reduce->fallthrough();
    reduce->add_option("kind", o.reduce_kind, "maxcut | indset")->required();
    reduce->add_option("input", o.reduce_input, "Graph file")->required();
    reduce->add_option("--target,-t", o.reduce_target, "Cut weight w or independent set size v")->required();
    reduce->add_option("--out,-o", o.reduce_out, "Output LHAM file")->required();
    reduce->add_flag("--weighted", o.reduce_weighted, "Allow weighted MAX CUT instances");

    auto *solve = app.add_subcommand("solve", "Compute the ground-state energy of an LHAM file");
    solve->fallthrough();
    solve->add_option("input", o.solve_input, "LHAM file")->required();
    solve->add_option("--method", o.solve_method, "enum | dense");

    auto *decide_cmd = app.add_subcommand("decide", "Resolve the promise problem stored in an LHAM file");
    decide_cmd->fallthrough();
    decide_cmd->add_option("input", o.decide_input, "LHAM file with promise line")->required();

    auto *oracle = app.add_subcommand("oracle", "Brute-force MAX CUT or maximum independent set");
    oracle->fallthrough();
    oracle->add_option("kind", o.oracle_kind, "maxcut | indset")->required();
    oracle->add_option("input", o.oracle_input, "Graph file")->required();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }

    const auto start = std::chrono::steady_clock::now();
    int status = failure;
    try {
        if (*gen)
            status = cmd_gen(o, out);
        else if (*reduce)
            status = cmd_reduce(o, out);
        else if (*solve)
            status = cmd_solve(o, out);
        else if (*decide_cmd)
            status = cmd_decide(o, out, err);
        else if (*oracle)
            status = cmd_oracle(o, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return failure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    err << "wall_time_ms=" << elapsed.count() << '\n';
    return status;
}

} // namespace lhred::cli
