// Copyright 2026 The NQA Authors
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

#include "nqa/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <utility>

#include "nqa/algorithms.h"
#include "nqa/chsh.h"
#include "nqa/checks.h"
#include "nqa/clifford22.h"
#include "nqa/errors.h"
#include "nqa/gates.h"
#include "nqa/parser.h"
#include "nqa/serialize.h"

namespace nqa {

namespace {

using nlohmann::json;

std::string fixed(double x, int digits = 12) {
    if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) {
        x = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    return buf;
}

void print_terms(const NqaOperator &op, std::ostream &out) {
    if (op.is_zero()) {
        out << "(zero operator on " << op.num_slots() << " slots)\n";
        return;
    }
    for (const auto &[w, c] : op.sorted_terms()) {
        out << w.literal() << "  " << format_double(c) << "\n";
    }
}

void print_dense(const DenseMatrix &m, std::ostream &out) {
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            out << (c ? " " : "") << format_double(m(r, c) == 0.0 ? 0.0 : m(r, c));
        }
        out << "\n";
    }
}

std::vector<size_t> parse_list(const std::string &text) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size()) {
            throw ParseError("'" + item + "' is not a wire index", 0);
        }
        out.push_back(v);
    }
    return out;
}

// (expression, expansion) rows of the gate lookup table.
std::vector<std::pair<std::string, NqaOperator>> gate_table() {
    using namespace gates;
    return {
        {"H(1,1)", hadamard(1, 1)},
        {"H(1,2)", hadamard(1, 2)},
        {"H(1,2)*H(2,2)", op_mul(hadamard(1, 2), hadamard(2, 2))},
        {"CZ(1,2)", cz(1, 2, 2)},
        {"CNOT(1,2)", cnot(1, 2, 2)},
        {"CNOT(2,1)", cnot(2, 1, 2)},
        {"SWAP(1,2)", swap(1, 2, 2)},
        {"PIEVEN(1,2)", parity_even(1, 2, 2)},
        {"PIODD(1,2)", parity_odd(1, 2, 2)},
        {"P00(1,2)", basis_projector(false, false, 1, 2, 2)},
        {"P11(1,2)", basis_projector(true, true, 1, 2, 2)},
        {"CNOT(1,2)*H(1,2)", bell_transform()},
        {"S(1,2)", phi(s_gate(1, 2))},
        {"T(1,2)", phi(t_gate(1, 2))},
        {"ISWAP(1,2)", lifted_iswap()},
        {"SQRTSWAP(1,2)", lifted_sqrt_swap()},
    };
}

int run_eval(const std::string &expr, bool dense, bool as_json, std::ostream &out) {
    NqaOperator op = evaluate(expr);
    if (dense) {
        DenseMatrix m = to_dense(op);
        if (as_json) {
            out << matrix_to_json(m) << "\n";
        } else {
            print_dense(m, out);
        }
        return 0;
    }
    if (as_json) {
        out << operator_to_json(op) << "\n";
    } else {
        print_terms(op, out);
    }
    return 0;
}

int run_decompose(const std::string &path, bool as_json, std::ostream &out) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    NqaOperator op = from_dense(matrix_from_json(buf.str()));
    if (as_json) {
        out << operator_to_json(op) << "\n";
    } else {
        print_terms(op, out);
    }
    return 0;
}

int run_bv(size_t m, const std::string &support, const std::string &factors, bool as_json, std::ostream &out) {
    BvOracleSpec spec;
    if (!factors.empty()) {
        std::vector<size_t> f = parse_list(factors);
        size_t mm = m ? m : (f.empty() ? 0 : *std::max_element(f.begin(), f.end()));
        spec = BvOracleSpec::from_factors(mm, f);
    } else {
        std::vector<size_t> s = parse_list(support);
        size_t mm = m ? m : (s.empty() ? 0 : *std::max_element(s.begin(), s.end()));
        spec = BvOracleSpec::from_support(mm, {s.begin(), s.end()});
    }
    BvRecovery r = bv_recover(spec);
    size_t length = spec.wires().size();
    if (as_json) {
        out << json{{"s", r.bits}, {"steps", r.steps}, {"m", spec.num_slots}, {"factors", length}}.dump() << "\n";
    } else {
        out << "s=" << r.bits << "\n";
        out << "steps=" << r.steps << " (m=" << spec.num_slots << ", factors=" << length << ")\n";
    }
    return 0;
}

int run_grover(size_t m, const std::string &marked, const std::string &iters, bool trace, bool as_json,
               std::ostream &out) {
    GroverSpec spec = GroverSpec::from_bits(marked);
    if (m && m != spec.num_slots) {
        throw DimensionError("--m " + std::to_string(m) + " but the marked string has " +
                             std::to_string(spec.num_slots) + " bits");
    }
    size_t n = 0;
    if (iters == "auto") {
        n = grover_auto_iterations(spec.num_slots);
    } else {
        std::vector<size_t> v = parse_list(iters);
        if (v.size() != 1) {
            throw ParseError("--iters takes a count or 'auto'", 0);
        }
        n = v[0];
    }
    std::vector<double> probs = grover_run(spec, n);
    if (as_json) {
        json j{{"m", spec.num_slots}, {"marked", spec.marked}, {"iterations", n}, {"probability", probs.back()}};
        if (trace) j["trace"] = probs;
        out << j.dump() << "\n";
        return 0;
    }
    if (trace) {
        for (double p : probs) {
            out << fixed(p) << "\n";
        }
    } else {
        out << "iterations=" << n << "\n";
        out << "probability=" << fixed(probs.back()) << "\n";
    }
    return 0;
}

int run_chsh(const std::string &mode, size_t n, uint64_t seed, bool as_json, std::ostream &out) {
    if (mode == "quantum") {
        std::vector<double> ev = sym_eigenvalues(chsh_quantum_matrix());
        if (as_json) {
            out << json(ev).dump() << "\n";
        } else {
            for (double e : ev) out << fixed(e) << "\n";
        }
        return 0;
    }
    if (mode == "classical") {
        std::vector<int> values = chsh_classical(ClassicalModel::random(n, seed));
        std::map<int, size_t> hist;
        for (int v : values) ++hist[v];
        if (as_json) {
            json j = json::object();
            for (auto [v, c] : hist) j[std::to_string(v)] = c;
            out << j.dump() << "\n";
        } else {
            for (auto [v, c] : hist) out << (v > 0 ? "+" : "") << v << ": " << c << "\n";
        }
        return 0;
    }
    NonembeddabilityReport r = nonembeddability_report();
    if (as_json) {
        out << json{{"quantum_spectrum", r.quantum_spectrum},
                    {"quantum_norm", r.quantum_norm},
                    {"classical_max", r.classical_max},
                    {"gap", r.gap}}
                   .dump()
            << "\n";
        return 0;
    }
    out << "quantum spectrum:";
    for (double e : r.quantum_spectrum) out << " " << fixed(e);
    out << "\nquantum norm: " << fixed(r.quantum_norm) << "\n";
    out << "classical max |value| over 16 assignments: " << r.classical_max << "\n";
    out << "gap: " << fixed(r.gap) << "\n";
    return 0;
}

int run_table(const std::string &which, bool as_json, std::ostream &out) {
    if (which == "cl22") {
        json rows = json::array();
        for (const auto &row : cl22::dictionary()) {
            cl22::CliffordMonomial unsigned_mono{Sign::plus(), row.monomial.mask};
            std::string mono = cl22::monomial_string(unsigned_mono);
            std::string sign = row.monomial.sign.negative() ? "-" : "+";
            if (as_json) {
                rows.push_back({{"word", std::string(row.word)},
                                {"pauli", std::string(row.pauli)},
                                {"monomial", mono},
                                {"sign", sign}});
            } else {
                char line[128];
                std::snprintf(line, sizeof(line), "B_%-3s  %-14s  %-9s  %s\n", std::string(row.word).c_str(),
                              std::string(row.pauli).c_str(), mono.c_str(), sign.c_str());
                out << line;
            }
        }
        if (as_json) out << rows.dump() << "\n";
        return 0;
    }
    json rows = json::array();
    for (const auto &[label, op] : gate_table()) {
        if (as_json) {
            rows.push_back({{"gate", label}, {"terms", json::parse(operator_to_json(op))}});
        } else {
            out << label << " = " << print_operator(op) << "\n";
        }
    }
    if (as_json) {
        out << rows.dump() << "\n";
    } else {
        out << "RY(t,1) = cos(t/2)*I + sin(t/2)*W\n";
        out << "RZ(t,1,2) = cos(t/2)*III - sin(t/2)*ZIW\n";
    }
    return 0;
}

int run_check(const std::string &which, const checks::CheckOptions &opts, bool as_json, std::ostream &out) {
    std::vector<checks::CheckResult> results;
    if (which == "all") {
        results = checks::check_all(opts);
    } else if (which == "jacobi") {
        results = {checks::check_jacobi(opts)};
    } else if (which == "phi") {
        results = {checks::check_phi(opts)};
    } else {
        results = {checks::check_dict(opts)};
    }
    bool ok = true;
    json arr = json::array();
    for (const auto &r : results) {
        ok = ok && r.passed;
        if (as_json) {
            arr.push_back({{"name", r.name},
                           {"passed", r.passed},
                           {"worst_error", r.worst_error},
                           {"tolerance", r.tolerance},
                           {"detail", r.detail}});
        } else {
            char line[256];
            std::snprintf(line, sizeof(line), "%s %-7s worst=%.3g tol=%.3g  %s\n", r.passed ? "PASS" : "FAIL",
                          r.name.c_str(), r.worst_error, r.tolerance, r.detail.c_str());
            out << line;
        }
    }
    if (as_json) out << arr.dump() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Symbolic calculus for real operators in the I/X/Z/W block basis", "nqa"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of text");

    std::string expr;
    bool dense = false;
    auto *eval_cmd = app.add_subcommand("eval", "Evaluate an operator expression");
    eval_cmd->add_option("expr", expr, "Expression, e.g. \"1/sqrt(2)*(X+Z)\"")->required();
    eval_cmd->add_flag("--dense", dense, "Print the dense matrix");
    eval_cmd->add_flag("--json", as_json, "Emit JSON");

    std::string matrix_path;
    auto *dec_cmd = app.add_subcommand("decompose", "Expand a dense 2^m x 2^m matrix in the block basis");
    dec_cmd->add_option("--matrix", matrix_path, "JSON array of rows")->required()->check(CLI::ExistingFile);
    dec_cmd->add_flag("--json", as_json, "Emit JSON");

    size_t m = 0;
    std::string support, factors;
    auto *bv_cmd = app.add_subcommand("bv", "Recover s from a structured phase oracle");
    bv_cmd->add_option("--m", m, "Number of qubits (default: largest wire)");
    auto *sup_opt = bv_cmd->add_option("--support", support, "Comma-separated wires of S");
    auto *fac_opt = bv_cmd->add_option("--factors", factors, "Comma-separated Z-factor wires, in order");
    sup_opt->excludes(fac_opt);
    bv_cmd->add_flag("--json", as_json, "Emit JSON");

    std::string marked, iters = "auto";
    bool trace = false;
    auto *gr_cmd = app.add_subcommand("grover", "Success probability of Grover search");
    gr_cmd->add_option("--m", m, "Number of qubits (must match --marked)");
    gr_cmd->add_option("--marked", marked, "Marked bit string, slot 1 first")->required();
    gr_cmd->add_option("--iters", iters, "Iteration count or 'auto'");
    gr_cmd->add_flag("--trace", trace, "Print the probability after every iteration");
    gr_cmd->add_flag("--json", as_json, "Emit JSON");

    std::string chsh_mode;
    size_t n_hidden = 16;
    uint64_t seed = 1;
    auto *chsh_cmd = app.add_subcommand("chsh", "CHSH spectra");
    chsh_cmd->add_option("mode", chsh_mode, "quantum | classical | report")
        ->required()
        ->check(CLI::IsMember({"quantum", "classical", "report"}));
    chsh_cmd->add_option("--n", n_hidden, "Hidden states for the classical model");
    chsh_cmd->add_option("--seed", seed, "Seed for the classical model");
    chsh_cmd->add_flag("--json", as_json, "Emit JSON");

    std::string table_name;
    auto *table_cmd = app.add_subcommand("table", "Print a reference table");
    table_cmd->add_option("name", table_name, "cl22 | gates")->required()->check(CLI::IsMember({"cl22", "gates"}));
    table_cmd->add_flag("--json", as_json, "Emit JSON");

    std::string check_name;
    checks::CheckOptions copts;
    auto *check_cmd = app.add_subcommand("check", "Differential self-checks against the dense oracle");
    check_cmd->add_option("name", check_name, "all | jacobi | phi | dict")
        ->required()
        ->check(CLI::IsMember({"all", "jacobi", "phi", "dict"}));
    check_cmd->add_option("--m", copts.num_slots, "Slot count");
    check_cmd->add_option("--trials", copts.trials, "Random trials");
    check_cmd->add_option("--seed", copts.seed, "RNG seed");
    check_cmd->add_flag("--json", as_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(expr, dense, as_json, out);
        if (dec_cmd->parsed()) return run_decompose(matrix_path, as_json, out);
        if (bv_cmd->parsed()) return run_bv(m, support, factors, as_json, out);
        if (gr_cmd->parsed()) return run_grover(m, marked, iters, trace, as_json, out);
        if (chsh_cmd->parsed()) return run_chsh(chsh_mode, n_hidden, seed, as_json, out);
        if (table_cmd->parsed()) return run_table(table_name, as_json, out);
        if (check_cmd->parsed()) return run_check(check_name, copts, as_json, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace nqa
