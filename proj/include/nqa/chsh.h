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

#include <array>
#include <cstdint>
#include <vector>

#include "nqa/linalg.h"
#include "nqa/realify.h"

namespace nqa {

/// A unit 3-vector; the constructor rejects |n| off 1 by more than 1e-12.
struct SpinDirection {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    SpinDirection(double x, double y, double z);
};

/// n_x X + n_z Z + i n_y W, one slot.
ComplexNqaOperator sigma(const SpinDirection &n);

/// The fixed 4 x 4 real CHSH matrix with entries 0 and +-sqrt(2).
DenseMatrix chsh_quantum_matrix();

/// A0 B0 + A0 B1 + A1 B0 - A1 B1 with A_x = sigma(a_x) (x) I and
/// B_y = I (x) sigma(b_y).
///
/// When all four directions lie in the x-z plane the operator is real and
/// the 4 x 4 matrix is returned. Otherwise the result is the 8 x 8 matrix of
/// Phi(S) with one shared phase lane; its spectrum is that of S, doubled.
DenseMatrix chsh_from_settings(const SpinDirection &a0, const SpinDirection &a1, const SpinDirection &b0,
                               const SpinDirection &b1);

/// The settings a0 = z, a1 = x, b0 = (z + x)/sqrt(2), b1 = (z - x)/sqrt(2).
std::array<SpinDirection, 4> standard_chsh_settings();

/// N hidden states with +-1 tables A0, A1, B0, B1.
struct ClassicalModel {
    std::vector<int> a0, a1, b0, b1;

    /// Throws DomainError if an entry is not +-1 or the lengths differ.
    void validate() const;
    size_t size() const {
        return a0.size();
    }
    /// Uniform random +-1 entries from a seeded mt19937_64.
    static ClassicalModel random(size_t n, uint64_t seed);
    /// The 16 single-state assignments, in binary order of (a0, a1, b0, b1).
    static ClassicalModel all_assignments();
};

/// a0 b0 + a0 b1 + a1 b0 - a1 b1 per hidden state, the diagonal of the
/// commutative CHSH operator.
std::vector<int> chsh_classical(const ClassicalModel &model);

struct NonembeddabilityReport {
    std::vector<double> quantum_spectrum;
    double quantum_norm = 0.0;
    int classical_max = 0;
    double gap = 0.0;
};

NonembeddabilityReport nonembeddability_report();

}  // namespace nqa
