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

#include "nqa/chsh.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "nqa/errors.h"

namespace nqa {

SpinDirection::SpinDirection(double x, double y, double z) : x(x), y(y), z(z) {
    double norm = std::sqrt(x * x + y * y + z * z);
    if (!(std::abs(norm - 1.0) <= 1e-12)) {
        throw DomainError("spin direction is not a unit vector (norm " + std::to_string(norm) + ")");
    }
}

ComplexNqaOperator sigma(const SpinDirection &n) {
    NqaOperator re = NqaOperator::from_terms({{"X", n.x}, {"Z", n.z}});
    NqaOperator im = NqaOperator::from_terms({{"W", n.y}});
    return {re, im};
}

DenseMatrix chsh_quantum_matrix() {
    const double r = std::numbers::sqrt2;
    return DenseMatrix(4, 4, {r, 0, 0, r, 0, -r, r, 0, 0, r, -r, 0, r, 0, 0, r});
}

DenseMatrix chsh_from_settings(const SpinDirection &a0, const SpinDirection &a1, const SpinDirection &b0,
                               const SpinDirection &b1) {
    ComplexNqaOperator id = ComplexNqaOperator::identity(1);
    auto a = [&](const SpinDirection &n) { return complex_tensor(sigma(n), id); };
    auto b = [&](const SpinDirection &n) { return complex_tensor(id, sigma(n)); };
    ComplexNqaOperator s = complex_mul(a(a0), b(b0));
    s = complex_add(s, complex_mul(a(a0), b(b1)));
    s = complex_add(s, complex_mul(a(a1), b(b0)));
    s = complex_add(s, complex_scale(-1.0, complex_mul(a(a1), b(b1))));
    if (s.is_real()) {
        return to_dense(s.re);
    }
    return to_dense(phi(s));
}

std::array<SpinDirection, 4> standard_chsh_settings() {
    const double r = 1.0 / std::numbers::sqrt2;
    return {SpinDirection(0, 0, 1), SpinDirection(1, 0, 0), SpinDirection(r, 0, r), SpinDirection(-r, 0, r)};
}

void ClassicalModel::validate() const {
    size_t n = a0.size();
    if (a1.size() != n || b0.size() != n || b1.size() != n) {
        throw DimensionError("classical model tables have different lengths");
    }
    for (const auto *t : {&a0, &a1, &b0, &b1}) {
        for (int v : *t) {
            if (v != 1 && v != -1) {
                throw DomainError("classical model entry " + std::to_string(v) + " is not +-1");
            }
        }
    }
}

ClassicalModel ClassicalModel::random(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    ClassicalModel m;
    for (auto *t : {&m.a0, &m.a1, &m.b0, &m.b1}) {
        t->resize(n);
    }
    for (size_t i = 0; i < n; ++i) {
        for (auto *t : {&m.a0, &m.a1, &m.b0, &m.b1}) {
            (*t)[i] = coin(rng) ? 1 : -1;
        }
    }
    return m;
}

ClassicalModel ClassicalModel::all_assignments() {
    ClassicalModel m;
    for (int k = 0; k < 16; ++k) {
        auto bit = [k](int i) { return (k >> (3 - i)) & 1 ? -1 : 1; };
        m.a0.push_back(bit(0));
        m.a1.push_back(bit(1));
        m.b0.push_back(bit(2));
        m.b1.push_back(bit(3));
    }
    return m;
}

std::vector<int> chsh_classical(const ClassicalModel &model) {
    model.validate();
    std::vector<int> out(model.size());
    for (size_t i = 0; i < model.size(); ++i) {
        out[i] = model.a0[i] * model.b0[i] + model.a0[i] * model.b1[i] + model.a1[i] * model.b0[i] -
                 model.a1[i] * model.b1[i];
    }
    return out;
}

NonembeddabilityReport nonembeddability_report() {
    NonembeddabilityReport r;
    r.quantum_spectrum = sym_eigenvalues(chsh_quantum_matrix());
    for (double e : r.quantum_spectrum) {
        r.quantum_norm = std::max(r.quantum_norm, std::abs(e));
    }
    for (int v : chsh_classical(ClassicalModel::all_assignments())) {
        r.classical_max = std::max(r.classical_max, std::abs(v));
    }
    r.gap = r.quantum_norm - r.classical_max;
    return r;
}

}  // namespace nqa
