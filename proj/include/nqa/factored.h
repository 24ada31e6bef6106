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
#include <utility>
#include <variant>
#include <vector>

#include "nqa/linalg.h"
#include "nqa/operator.h"

namespace nqa {

/// Rank-deficient single-slot projectors used by the structured reflections.
enum class LocalProjector {
    P0,    ///< (I + Z) / 2, onto |0>
    P1,    ///< (I - Z) / 2, onto |1>
    Plus,  ///< (I + X) / 2 = H P0 H, onto |+>
};

NqaOperator local_projector(LocalProjector p, size_t slot, size_t num_slots);

/// sign * (I - 2 prod_k P_k) with commuting single-slot projectors on
/// distinct slots. Kept unexpanded: the product form has |C| factors, the
/// block expansion has up to 2^|C| terms.
///
/// MCZ_C is {P1 on every k in C}; the Grover oracle is the basis projector
/// of x*; the diffusion 2|s><s| - I is the negated all-Plus reflection.
struct ProjectorReflection {
    size_t num_slots = 0;
    std::vector<std::pair<size_t, LocalProjector>> projectors;  // 0-based slots
    bool negated = false;

    ProjectorReflection(size_t m, std::vector<std::pair<size_t, LocalProjector>> projectors, bool negated = false);
};

NqaOperator expand(const ProjectorReflection &r);
/// Dense form built from dense projector products, independent of expand().
DenseMatrix to_dense(const ProjectorReflection &r, size_t max_slots = kDefaultDenseCap);
/// O(2^m) when the projectors are all Z-type, or all-Plus on every slot;
/// O(|C| 2^m) otherwise.
StateVector apply(const ProjectorReflection &r, const StateVector &v);

using Factor = std::variant<NqaOperator, ProjectorReflection>;

/// An ordered product F_1 F_2 ... F_n kept unexpanded. Applying it to a state
/// applies F_n first. The empty product is the identity.
class FactoredOperator {
   public:
    explicit FactoredOperator(size_t num_slots);
    FactoredOperator(size_t num_slots, std::vector<Factor> factors);

    size_t num_slots() const {
        return num_slots_;
    }
    const std::vector<Factor> &factors() const {
        return factors_;
    }
    /// Appends on the right (so it acts first).
    void push_back(Factor f);

   private:
    size_t num_slots_;
    std::vector<Factor> factors_;
};

size_t factor_slots(const Factor &f);

/// Multiplies everything out into one block sum.
NqaOperator expand(const FactoredOperator &f);
NqaOperator expand(const Factor &f);
DenseMatrix to_dense(const FactoredOperator &f, size_t max_slots = kDefaultDenseCap);
DenseMatrix to_dense(const Factor &f, size_t max_slots = kDefaultDenseCap);
StateVector apply(const FactoredOperator &f, const StateVector &v);
StateVector apply(const Factor &f, const StateVector &v);

/// Size of a structured operator under both readings: the number of local
/// factors kept in product form, and the number of block terms after
/// expansion.
struct StructureSize {
    size_t local_factors = 0;
    size_t block_terms = 0;
};
StructureSize structure_size(const FactoredOperator &f);

}  // namespace nqa
