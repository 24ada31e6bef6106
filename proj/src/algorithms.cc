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

#include "nqa/algorithms.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nqa/errors.h"
#include "nqa/gates.h"

namespace nqa {

namespace {

void check_bits(std::string_view bits) {
    if (bits.empty()) {
        throw DimensionError("bit string is empty");
    }
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw ParseError("expected '0' or '1'", i);
        }
    }
}

void apply_hadamard_layer(StateVector &v) {
    // In-place Walsh-Hadamard transform, normalized per butterfly.
    const double r = 1.0 / std::numbers::sqrt2;
    for (size_t h = 1; h < v.dim(); h <<= 1) {
        for (size_t i = 0; i < v.dim(); i += 2 * h) {
            for (size_t j = i; j < i + h; ++j) {
                double a = v.amplitudes[j];
                double b = v.amplitudes[j + h];
                v.amplitudes[j] = r * (a + b);
                v.amplitudes[j + h] = r * (a - b);
            }
        }
    }
}

}  // namespace

BvOracleSpec BvOracleSpec::from_support(size_t m, std::set<size_t> support) {
    BvOracleSpec s;
    s.num_slots = m;
    s.support = std::move(support);
    s.validate();
    return s;
}

BvOracleSpec BvOracleSpec::from_factors(size_t m, std::vector<size_t> factors) {
    BvOracleSpec s;
    s.num_slots = m;
    s.factors = std::move(factors);
    s.validate();
    return s;
}

BvOracleSpec BvOracleSpec::from_bits(std::string_view bits) {
    check_bits(bits);
    std::set<size_t> support;
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            support.insert(i + 1);
        }
    }
    return from_support(bits.size(), std::move(support));
}

void BvOracleSpec::validate() const {
    if (num_slots == 0) {
        throw DimensionError("BV oracle needs m >= 1");
    }
    for (size_t k : wires()) {
        if (k < 1 || k > num_slots) {
            throw SlotError("wire " + std::to_string(k) + " outside 1.." + std::to_string(num_slots));
        }
    }
}

std::vector<size_t> BvOracleSpec::wires() const {
    if (factors) {
        return *factors;
    }
    return {support.begin(), support.end()};
}

FactoredOperator bv_oracle(const BvOracleSpec &spec) {
    spec.validate();
    FactoredOperator out(spec.num_slots);
    for (size_t k : spec.wires()) {
        out.push_back(gates::pauli_z(k, spec.num_slots));
    }
    return out;
}

BvRecovery bv_recover(const BvOracleSpec &spec) {
    spec.validate();
    BvRecovery r;
    std::vector<bool> s(spec.num_slots, false);
    r.steps += spec.num_slots;
    for (size_t k : spec.wires()) {
        s[k - 1] = !s[k - 1];
        ++r.steps;
    }
    r.bits.reserve(spec.num_slots);
    for (bool b : s) {
        r.bits.push_back(b ? '1' : '0');
        ++r.steps;
    }
    return r;
}

StateVector bv_circuit(std::string_view bits) {
    BvOracleSpec spec = BvOracleSpec::from_bits(bits);
    StateVector v = StateVector::basis(spec.num_slots, 0);
    apply_hadamard_layer(v);
    v = apply(bv_oracle(spec), v);
    apply_hadamard_layer(v);
    return v;
}

GroverSpec GroverSpec::from_bits(std::string_view bits) {
    check_bits(bits);
    if (bits.size() > 30) {
        throw SizeError("Grover simulation supports m <= 30");
    }
    return {bits.size(), std::string(bits)};
}

size_t GroverSpec::marked_index() const {
    size_t x = 0;
    for (char c : marked) {
        x = (x << 1) | static_cast<size_t>(c == '1');
    }
    return x;
}

ProjectorReflection grover_oracle(const GroverSpec &spec) {
    std::vector<std::pair<size_t, LocalProjector>> proj;
    for (size_t k = 0; k < spec.num_slots; ++k) {
        proj.emplace_back(k, spec.marked[k] == '1' ? LocalProjector::P1 : LocalProjector::P0);
    }
    return ProjectorReflection(spec.num_slots, std::move(proj));
}

ProjectorReflection grover_diffusion(size_t num_slots) {
    std::vector<std::pair<size_t, LocalProjector>> proj;
    for (size_t k = 0; k < num_slots; ++k) {
        proj.emplace_back(k, LocalProjector::Plus);
    }
    return ProjectorReflection(num_slots, std::move(proj), true);
}

FactoredOperator grover_iterate(const GroverSpec &spec) {
    return FactoredOperator(spec.num_slots, {grover_diffusion(spec.num_slots), grover_oracle(spec)});
}

double grover_angle(size_t num_slots) {
    return std::asin(std::pow(2.0, -0.5 * static_cast<double>(num_slots)));
}

double grover_closed_form(size_t num_slots, size_t iterations) {
    double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * grover_angle(num_slots));
    return s * s;
}

size_t grover_auto_iterations(size_t num_slots) {
    double t = std::round(std::numbers::pi / (4.0 * grover_angle(num_slots)) - 0.5);
    return t < 0 ? 0 : static_cast<size_t>(t);
}

std::vector<double> grover_run(const GroverSpec &spec, size_t iterations) {
    const size_t m = spec.num_slots;
    const size_t x = spec.marked_index();
    StateVector v(m, std::vector<double>(size_t{1} << m, std::pow(2.0, -0.5 * static_cast<double>(m))));
    FactoredOperator g = grover_iterate(spec);
    std::vector<double> trace;
    trace.reserve(iterations + 1);
    trace.push_back(v.amplitudes[x] * v.amplitudes[x]);
    for (size_t t = 0; t < iterations; ++t) {
        v = apply(g, v);
        trace.push_back(v.amplitudes[x] * v.amplitudes[x]);
    }
    return trace;
}

std::vector<double> eigenphases(const DenseMatrix &q, double tol) {
    if (!q.is_square()) {
        throw ShapeError("eigenphases needs a square matrix");
    }
    if (!is_orthogonal(q, tol)) {
        throw DomainError("eigenphases needs an orthogonal matrix");
    }
    // cos(phase) comes from the symmetric part. |sin(phase)| = ||K v|| for
    // the antisymmetric part K, which keeps phases near 0 and pi accurate
    // where arccos alone would lose half the digits.
    DenseMatrix qt = mat_transpose(q);
    DenseMatrix sym = 0.5 * (q + qt);
    DenseMatrix anti = 0.5 * (q - qt);
    SymEigen eig = sym_eigen(sym);
    const size_t n = q.rows();
    std::vector<double> phases;
    phases.reserve(n);
    std::vector<double> col(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t r = 0; r < n; ++r) {
            col[r] = eig.vectors(r, i);
        }
        std::vector<double> kv = mat_vec(anti, col);
        double s = 0.0;
        for (double x : kv) {
            s += x * x;
        }
        phases.push_back(std::atan2(std::sqrt(s), eig.values[i]));
    }
    std::sort(phases.begin(), phases.end());
    return phases;
}

bool is_clifford_spectrum(const std::vector<double> &phases, double tol) {
    const double quarter = std::numbers::pi / 2.0;
    return std::all_of(phases.begin(), phases.end(), [&](double p) {
        double r = p / quarter;
        return std::abs(r - std::round(r)) * quarter <= tol;
    });
}

}  // namespace nqa
