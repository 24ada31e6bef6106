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

#include "nqa/checks.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "nqa/clifford22.h"

namespace nqa::checks {

namespace {

ComplexNqaOperator random_complex(size_t m, std::mt19937_64 &rng) {
    size_t terms = std::min<size_t>(size_t{1} << (2 * m), 6);
    return {random_operator(m, terms, rng), random_operator(m, terms, rng)};
}

CheckResult finish(std::string name, double worst, double tol, std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.worst_error = worst;
    r.tolerance = tol;
    r.passed = worst <= tol;
    r.detail = std::move(detail);
    return r;
}

}  // namespace

CheckResult check_jacobi(const CheckOptions &opts) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    size_t n = size_t{1} << std::min<size_t>(opts.num_slots, 6);
    double worst = 0.0;
    for (size_t t = 0; t < opts.trials; ++t) {
        std::vector<double> d(n);
        for (double &x : d) {
            x = u(rng);
        }
        DenseMatrix q = random_orthogonal(n, rng);
        DenseMatrix a = mat_mul(mat_mul(q, DenseMatrix::diagonal(d)), mat_transpose(q));
        // Rounding leaves a ~1e-15 asymmetry; the solver symmetrizes.
        DenseMatrix sym = 0.5 * (a + mat_transpose(a));
        std::vector<double> got = sym_eigenvalues(sym);
        std::sort(d.begin(), d.end());
        for (size_t i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(got[i] - d[i]));
        }
    }
    return finish("jacobi", worst, 1e-10,
                  std::to_string(opts.trials) + " random spectra at n=" + std::to_string(n));
}

CheckResult check_phi(const CheckOptions &opts) {
    std::mt19937_64 rng(opts.seed);
    size_t m = std::clamp<size_t>(opts.num_slots, 1, 5);
    double worst = 0.0;
    for (size_t t = 0; t < opts.trials; ++t) {
        ComplexNqaOperator u = random_complex(m, rng);
        ComplexNqaOperator v = random_complex(m, rng);
        DenseMatrix lhs = to_dense(phi(complex_mul(u, v)));
        DenseMatrix rhs = mat_mul(to_dense(phi(u)), to_dense(phi(v)));
        worst = std::max(worst, max_norm_diff(lhs, rhs));
        worst = std::max(worst, max_norm_diff(to_dense(phi(complex_dagger(u))), mat_transpose(to_dense(phi(u)))));
    }
    return finish("phi", worst, 1e-12, std::to_string(opts.trials) + " random pairs at m=" + std::to_string(m));
}

CheckResult check_dict(const CheckOptions &) {
    DenseMatrix gens[4];
    for (int i = 1; i <= 4; ++i) {
        gens[i - 1] = to_dense(cl22::generator(i));
    }
    double worst = 0.0;
    for (const auto &row : cl22::dictionary()) {
        DenseMatrix prod = DenseMatrix::identity(4);
        for (int i = 1; i <= 4; ++i) {
            if (row.monomial.mask & (1u << (i - 1))) {
                prod = mat_mul(prod, gens[i - 1]);
            }
        }
        prod *= row.monomial.sign.as_double();
        worst = std::max(worst, max_norm_diff(prod, to_dense(NqaWord::from_literal(row.word))));
    }
    return finish("dict", worst, 0.0, "16 rows against dense generator products");
}

std::vector<CheckResult> check_all(const CheckOptions &opts) {
    return {check_jacobi(opts), check_phi(opts), check_dict(opts)};
}

}  // namespace nqa::checks
