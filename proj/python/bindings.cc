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

#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nqa/algorithms.h"
#include "nqa/chsh.h"
#include "nqa/clifford22.h"
#include "nqa/errors.h"
#include "nqa/gates.h"
#include "nqa/parser.h"
#include "nqa/realify.h"
#include "nqa/serialize.h"

namespace py = pybind11;
using namespace nqa;

namespace {

py::array_t<double> to_numpy(const DenseMatrix &m) {
    py::array_t<double> out({m.rows(), m.cols()});
    auto v = out.mutable_unchecked<2>();
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            v(r, c) = m(r, c);
        }
    }
    return out;
}

DenseMatrix from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast> &a) {
    if (a.ndim() != 2) {
        throw ShapeError("expected a 2-d array");
    }
    DenseMatrix m(a.shape(0), a.shape(1));
    auto v = a.unchecked<2>();
    for (py::ssize_t r = 0; r < a.shape(0); ++r) {
        for (py::ssize_t c = 0; c < a.shape(1); ++c) {
            m(r, c) = v(r, c);
        }
    }
    return m;
}

NqaOperator gate_as_real(const gates::GateValue &g) {
    if (auto *op = std::get_if<NqaOperator>(&g)) return *op;
    if (auto *c = std::get_if<ComplexNqaOperator>(&g)) return phi(*c);
    return expand(std::get<FactoredOperator>(g));
}

}  // namespace

PYBIND11_MODULE(_nqa, m) {
    m.doc() = "Real operators in the I/X/Z/W block basis.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<UnknownGateError>(m, "UnknownGateError", PyExc_ValueError);
    py::register_exception<HomogeneityError>(m, "HomogeneityError", PyExc_ValueError);

    m.def(
        "word_mul",
        [](const std::string &u, const std::string &v) {
            SignedWord r = word_mul(NqaWord::from_literal(u), NqaWord::from_literal(v));
            return std::make_pair(r.sign.value(), r.word.literal());
        },
        "Product of two word literals as (sign, word).");
    m.def(
        "epsilon",
        [](const std::string &g, const std::string &h) {
            return epsilon(NqaWord::from_literal(g), NqaWord::from_literal(h)).value();
        },
        "Commutation sign of two words.");
    m.def(
        "parity", [](const std::string &u) { return static_cast<int>(parity(NqaWord::from_literal(u))); },
        "Hamming parity of a word.");

    py::class_<NqaOperator>(m, "Operator")
        .def(py::init([](const std::string &expr) { return evaluate(expr); }), py::arg("expr"))
        .def_static("from_dense", [](const py::array_t<double> &a) { return from_dense(from_numpy(a)); })
        .def_static("from_json", [](const std::string &s) { return operator_from_json(s); })
        .def_property_readonly("num_slots", &NqaOperator::num_slots)
        .def("terms",
             [](const NqaOperator &op) {
                 std::vector<std::pair<std::string, double>> out;
                 for (const auto &[w, c] : op.sorted_terms()) out.emplace_back(w.literal(), c);
                 return out;
             })
        .def("coefficient",
             [](const NqaOperator &op, const std::string &w) { return op.coefficient(NqaWord::from_literal(w)); })
        .def("to_dense", [](const NqaOperator &op) { return to_numpy(to_dense(op)); })
        .def("to_json", [](const NqaOperator &op) { return operator_to_json(op); })
        .def("transpose", [](const NqaOperator &op) { return transpose(op); })
        .def("tensor", [](const NqaOperator &a, const NqaOperator &b) { return tensor(a, b); })
        .def("frobenius", [](const NqaOperator &a, const NqaOperator &b) { return frobenius(a, b); })
        .def("is_orthogonal", [](const NqaOperator &a, double tol) { return is_orthogonal(a, tol); },
             py::arg("tol") = 1e-12)
        .def("apply",
             [](const NqaOperator &a, const std::vector<double> &v) {
                 return apply(a, StateVector(a.num_slots(), v)).amplitudes;
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(float() * py::self)
        .def("__rmul__", [](const NqaOperator &a, double c) { return scale(c, a); })
        .def(py::self == py::self)
        .def("__str__", [](const NqaOperator &op) { return print_operator(op); })
        .def("__repr__", [](const NqaOperator &op) { return "Operator(\"" + print_operator(op) + "\")"; });

    m.def("commutator", &commutator);
    m.def("anticommutator", &anticommutator);
    m.def("epsilon_commutator", &epsilon_commutator);
    m.def("supercommutator", &supercommutator);

    m.def(
        "gate",
        [](const std::string &name, const std::vector<double> &params, const std::vector<size_t> &slots, size_t m) {
            return gate_as_real(gates::make_gate(name, params, slots, m));
        },
        py::arg("name"), py::arg("params"), py::arg("slots"), py::arg("m"),
        "A gate by name; phaseful gates come back realified (m + 1 slots).");
    m.def("gate_names", [] {
        std::vector<std::string> out;
        for (auto n : gates::gate_names()) out.emplace_back(n);
        return out;
    });
    m.def(
        "realify",
        [](const NqaOperator &re, const NqaOperator &im) { return phi(ComplexNqaOperator(re, im)); },
        "A (x) I + B (x) W.");

    m.def("bv_recover", [](size_t m, const std::vector<size_t> &factors) {
        BvRecovery r = bv_recover(BvOracleSpec::from_factors(m, factors));
        return std::make_pair(r.bits, r.steps);
    });
    m.def("bv_circuit", [](const std::string &s) { return bv_circuit(s).amplitudes; });
    m.def("grover_run", [](const std::string &marked, size_t iterations) {
        return grover_run(GroverSpec::from_bits(marked), iterations);
    });
    m.def("grover_auto_iterations", &grover_auto_iterations);
    m.def(
        "eigenphases",
        [](const py::array_t<double> &q, double tol) { return eigenphases(from_numpy(q), tol); },
        py::arg("q"), py::arg("tol") = 1e-10);
    m.def("is_clifford_spectrum", &is_clifford_spectrum, py::arg("phases"), py::arg("tol") = 1e-9);
    m.def("sym_eigenvalues", [](const py::array_t<double> &a) { return sym_eigenvalues(from_numpy(a)); });

    m.def("chsh_quantum_matrix", [] { return to_numpy(chsh_quantum_matrix()); });
    m.def("chsh_standard_matrix", [] {
        auto s = standard_chsh_settings();
        return to_numpy(chsh_from_settings(s[0], s[1], s[2], s[3]));
    });
    m.def("chsh_classical_values", [](size_t n, uint64_t seed) {
        return chsh_classical(ClassicalModel::random(n, seed));
    });

    m.def("cl22_dictionary", [] {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto &row : cl22::dictionary()) {
            out.emplace_back(row.word, row.pauli, cl22::monomial_string(row.monomial));
        }
        return out;
    });
    m.def("cl22_pseudoscalar", &cl22::pseudoscalar);
}
