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
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nqa/linalg.h"
#include "nqa/word.h"

namespace nqa {

/// Coefficients with |c| below this are dropped after every arithmetic op.
inline constexpr double kPruneThreshold = 1e-14;
/// Default slot cap for dense conversions (a 4096 x 4096 matrix).
inline constexpr size_t kDefaultDenseCap = 12;

/// A real linear combination of words, sum_g a_g B_g, on a fixed slot count.
class NqaOperator {
   public:
    using TermMap = std::map<NqaWord, double>;

    /// The zero operator on m slots.
    explicit NqaOperator(size_t num_slots);

    static NqaOperator identity(size_t num_slots);
    static NqaOperator from_word(const NqaWord &word, double coefficient = 1.0);
    static NqaOperator from_word(const SignedWord &word, double coefficient = 1.0);
    /// Convenience for fixtures: {{"II", 0.5}, {"ZZ", -0.5}}.
    static NqaOperator from_terms(std::initializer_list<std::pair<std::string_view, double>> terms);

    size_t num_slots() const {
        return num_slots_;
    }
    const TermMap &terms() const {
        return terms_;
    }
    size_t num_terms() const {
        return terms_.size();
    }
    bool is_zero() const {
        return terms_.empty();
    }
    double coefficient(const NqaWord &word) const;

    /// Adds c to the coefficient of `word`, pruning the result.
    void add_term(const NqaWord &word, double c);

    /// Terms sorted by word literal, the order used for all serialization.
    std::vector<std::pair<NqaWord, double>> sorted_terms() const;

    bool operator==(const NqaOperator &) const = default;

   private:
    size_t num_slots_;
    TermMap terms_;
};

NqaOperator add(const NqaOperator &a, const NqaOperator &b);
NqaOperator subtract(const NqaOperator &a, const NqaOperator &b);
NqaOperator scale(double c, const NqaOperator &a);
/// Bilinear extension of word_mul; O(t_a * t_b) term pairs.
NqaOperator op_mul(const NqaOperator &a, const NqaOperator &b);
/// Kronecker product; the result has m_a + m_b slots.
NqaOperator tensor(const NqaOperator &a, const NqaOperator &b);
NqaOperator transpose(const NqaOperator &a);

NqaOperator operator+(const NqaOperator &a, const NqaOperator &b);
NqaOperator operator-(const NqaOperator &a, const NqaOperator &b);
NqaOperator operator*(const NqaOperator &a, const NqaOperator &b);
NqaOperator operator*(double c, const NqaOperator &a);

/// Places a k-slot operator on the given (0-based, distinct) slots of an
/// m-slot register, with identity blocks elsewhere. slots[i] receives slot i
/// of `op`.
NqaOperator embed(const NqaOperator &op, std::span<const size_t> slots, size_t num_slots);

/// Sum of coefficients times Kronecker products of the 2x2 blocks.
/// Throws SizeError when m exceeds max_slots.
DenseMatrix to_dense(const NqaOperator &a, size_t max_slots = kDefaultDenseCap);
DenseMatrix to_dense(const NqaWord &w, size_t max_slots = kDefaultDenseCap);
/// The 2x2 matrix of a single block.
DenseMatrix block_matrix(Block b);

/// a_g = 2^{-m} tr(B_g^T M) for every g, computed with one fast Walsh-Hadamard
/// transform per alpha (O(m 4^m)). Throws ShapeError unless M is 2^m x 2^m.
NqaOperator from_dense(const DenseMatrix &m);

/// Normalized Frobenius product 2^{-m} tr(A^T B), computed on the sparse tables.
double frobenius(const NqaOperator &a, const NqaOperator &b);

NqaOperator commutator(const NqaOperator &a, const NqaOperator &b);
NqaOperator anticommutator(const NqaOperator &a, const NqaOperator &b);

/// Single-term (or zero) operators are the homogeneous elements of the
/// (Z_2)^{2m} grading.
bool is_degree_homogeneous(const NqaOperator &a);
/// All terms share one Hamming parity. The zero operator counts as even.
bool is_parity_homogeneous(const NqaOperator &a);
/// Parity of a parity-homogeneous operator; throws HomogeneityError otherwise.
bool operator_parity(const NqaOperator &a);

/// [x, y]_eps = xy - eps(g, h) yx for x in degree g, y in degree h.
NqaOperator epsilon_commutator(const NqaOperator &a, const NqaOperator &b);
/// [x, y]_s = xy - (-1)^{deg x deg y} yx for parity-homogeneous x, y.
NqaOperator supercommutator(const NqaOperator &a, const NqaOperator &b);

/// Applies A via B(alpha, beta)|x> = (-1)^{beta.x} |x ^ alpha>. O(t 2^m).
StateVector apply(const NqaOperator &a, const StateVector &v);

/// ||A^T A - I||_max <= tol, evaluated densely.
bool is_orthogonal(const NqaOperator &a, double tol, size_t max_slots = kDefaultDenseCap);

/// Basis-index masks of a word (slot 1 = most significant bit); m <= 63.
struct IndexMasks {
    uint64_t alpha;
    uint64_t beta;
};
IndexMasks index_masks(const NqaWord &w);

}  // namespace nqa
