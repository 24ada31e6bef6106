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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nqa/linalg.h"
#include "nqa/operator.h"
#include "nqa/realify.h"

/// Self-checks behind the `check` command. Each compares a library path with
/// the dense oracle on random inputs.
namespace nqa::checks {

struct CheckOptions {
    size_t num_slots = 3;
    size_t trials = 50;
    uint64_t seed = 1;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst_error = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// Spectrum of Q D Q^T against D, Q a product of random Householder
/// reflections, n = 2^m.
CheckResult check_jacobi(const CheckOptions &opts);
/// Phi(UV) = Phi(U) Phi(V) and Phi(U^dagger) = Phi(U)^T on random pairs.
CheckResult check_phi(const CheckOptions &opts);
/// Every Cl(2,2) dictionary row against dense products of the generators.
CheckResult check_dict(const CheckOptions &opts);
std::vector<CheckResult> check_all(const CheckOptions &opts);

/// Random operator with `terms` distinct words and coefficients in [-1, 1].
template <class Rng>
NqaOperator random_operator(size_t num_slots, size_t terms, Rng &rng);

/// Householder product Q = H_1 ... H_k for k = n random unit vectors.
template <class Rng>
DenseMatrix random_orthogonal(size_t n, Rng &rng);

}  // namespace nqa::checks

#include "nqa/checks.inl"
