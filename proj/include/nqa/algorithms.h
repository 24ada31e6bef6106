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

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nqa/factored.h"
#include "nqa/linalg.h"

namespace nqa {

/// A phase oracle O_s = prod_k Z_k given structurally. Wire indices are
/// 1-based. Either `support` (a set S) or `factors` (an ordered list that may
/// repeat wires) is used; `factors` wins when it is set.
struct BvOracleSpec {
    size_t num_slots = 0;
    std::set<size_t> support;
    std::optional<std::vector<size_t>> factors;

    static BvOracleSpec from_support(size_t m, std::set<size_t> support);
    static BvOracleSpec from_factors(size_t m, std::vector<size_t> factors);
    /// Bit string "1010": slot 1 first.
    static BvOracleSpec from_bits(std::string_view bits);
    /// Throws SlotError on any index outside 1..m, DimensionError for m = 0.
    void validate() const;
    /// Wires in oracle order.
    std::vector<size_t> wires() const;
};

/// One Z_k factor per listed wire; the empty product is the identity.
FactoredOperator bv_oracle(const BvOracleSpec &spec);

struct BvRecovery {
    std::string bits;   ///< s_1 ... s_m
    size_t steps = 0;   ///< elementary steps: m to clear, one per factor, m to read out
};

/// Reads s off the factorization: s_k = 1 iff wire k occurs an odd number of
/// times.
BvRecovery bv_recover(const BvOracleSpec &spec);

/// H^{(x)m} O_s H^{(x)m} |0^m>, applied factor by factor.
StateVector bv_circuit(std::string_view bits);

/// Unique marked string x*, slot 1 first.
struct GroverSpec {
    size_t num_slots = 0;
    std::string marked;

    static GroverSpec from_bits(std::string_view bits);
    size_t marked_index() const;
};

/// I - 2 |x*><x*| as a reflection through basis projectors.
ProjectorReflection grover_oracle(const GroverSpec &spec);
/// 2|s><s| - I as the negated all-Plus reflection.
ProjectorReflection grover_diffusion(size_t num_slots);
/// G = D O_f, unexpanded.
FactoredOperator grover_iterate(const GroverSpec &spec);

/// theta = arcsin(2^{-m/2}).
double grover_angle(size_t num_slots);
/// sin^2((2t + 1) theta).
double grover_closed_form(size_t num_slots, size_t iterations);
/// round(pi / (4 theta) - 1/2).
size_t grover_auto_iterations(size_t num_slots);

/// |<x*| G^t |s>|^2 for t = 0..iterations (iterations + 1 entries).
std::vector<double> grover_run(const GroverSpec &spec, size_t iterations);

/// arccos of the eigenvalues of (Q + Q^T) / 2, ascending, each in [0, pi].
/// Throws DomainError when Q is not orthogonal within tol.
std::vector<double> eigenphases(const DenseMatrix &q, double tol = 1e-10);
/// True iff every phase is within tol of a multiple of pi/2.
bool is_clifford_spectrum(const std::vector<double> &phases, double tol = 1e-9);

}  // namespace nqa
