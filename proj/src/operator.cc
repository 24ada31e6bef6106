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

#include "nqa/operator.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "nqa/errors.h"

namespace nqa {

namespace {

void check_same_slots(const NqaOperator &a, const NqaOperator &b, const char *op) {
    if (a.num_slots() != b.num_slots()) {
        throw DimensionError(std::string(op) + ": slot count mismatch (" + std::to_string(a.num_slots()) + " vs " +
                             std::to_string(b.num_slots()) + ")");
    }
}

void check_dense_cap(size_t m, size_t max_slots) {
    if (m > max_slots) {
        throw SizeError("dense conversion of " + std::to_string(m) + " slots exceeds the cap of " +
                        std::to_string(max_slots));
    }
}

// In-place fast Walsh-Hadamard transform: v[b] <- sum_x (-1)^{popcount(b & x)} v[x].
void fwht(std::vector<double> &v) {
    for (size_t h = 1; h < v.size(); h <<= 1) {
        for (size_t i = 0; i < v.size(); i += h << 1) {
            for (size_t j = i; j < i + h; ++j) {
                double x = v[j];
                double y = v[j + h];
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
    }
}

NqaWord word_from_masks(size_t m, uint64_t alpha_mask, uint64_t beta_mask) {
    NqaWord w(m);
    for (size_t k = 0; k < m; ++k) {
        uint64_t bit = uint64_t{1} << (m - 1 - k);
        w.set_block(k, block_from_bits(alpha_mask & bit, beta_mask & bit));
    }
    return w;
}

}  // namespace

NqaOperator::NqaOperator(size_t num_slots) : num_slots_(num_slots) {
    if (num_slots == 0) {
        throw DimensionError("an operator needs at least one slot");
    }
}

NqaOperator NqaOperator::identity(size_t num_slots) {
    return from_word(NqaWord(num_slots));
}

NqaOperator NqaOperator::from_word(const NqaWord &word, double coefficient) {
    NqaOperator out(word.num_slots());
    out.add_term(word, coefficient);
    return out;
}

NqaOperator NqaOperator::from_word(const SignedWord &word, double coefficient) {
    return from_word(word.word, word.sign.as_double() * coefficient);
}

NqaOperator NqaOperator::from_terms(std::initializer_list<std::pair<std::string_view, double>> terms) {
    if (terms.size() == 0) {
        throw DimensionError("from_terms: need at least one term to fix the slot count");
    }
    NqaOperator out(terms.begin()->first.size());
    for (const auto &[lit, c] : terms) {
        NqaWord w = NqaWord::from_literal(lit);
        if (w.num_slots() != out.num_slots()) {
            throw DimensionError("from_terms: mixed slot counts");
        }
        out.add_term(w, c);
    }
    return out;
}

double NqaOperator::coefficient(const NqaWord &word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? 0.0 : it->second;
}

void NqaOperator::add_term(const NqaWord &word, double c) {
    if (word.num_slots() != num_slots_) {
        throw DimensionError("add_term: word has " + std::to_string(word.num_slots()) + " slots, operator has " +
                             std::to_string(num_slots_));
    }
    auto [it, inserted] = terms_.try_emplace(word, c);
    if (!inserted) {
        it->second += c;
    }
    if (std::abs(it->second) < kPruneThreshold) {
        terms_.erase(it);
    }
}

std::vector<std::pair<NqaWord, double>> NqaOperator::sorted_terms() const {
    std::vector<std::pair<NqaWord, double>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return literal_less(a.first, b.first); });
    return out;
}

NqaOperator add(const NqaOperator &a, const NqaOperator &b) {
    check_same_slots(a, b, "add");
    NqaOperator out = a;
    for (const auto &[w, c] : b.terms()) {
        out.add_term(w, c);
    }
    return out;
}

NqaOperator subtract(const NqaOperator &a, const NqaOperator &b) {
    check_same_slots(a, b, "subtract");
    NqaOperator out = a;
    for (const auto &[w, c] : b.terms()) {
        out.add_term(w, -c);
    }
    return out;
}

NqaOperator scale(double c, const NqaOperator &a) {
    NqaOperator out(a.num_slots());
    for (const auto &[w, x] : a.terms()) {
        out.add_term(w, c * x);
    }
    return out;
}

NqaOperator op_mul(const NqaOperator &a, const NqaOperator &b) {
    check_same_slots(a, b, "op_mul");
    NqaOperator out(a.num_slots());
    for (const auto &[wa, ca] : a.terms()) {
        for (const auto &[wb, cb] : b.terms()) {
            SignedWord p = word_mul(wa, wb);
            out.add_term(p.word, p.sign.as_double() * ca * cb);
        }
    }
    return out;
}

NqaOperator tensor(const NqaOperator &a, const NqaOperator &b) {
    NqaOperator out(a.num_slots() + b.num_slots());
    for (const auto &[wa, ca] : a.terms()) {
        for (const auto &[wb, cb] : b.terms()) {
            out.add_term(wa.concat(wb), ca * cb);
        }
    }
    return out;
}

NqaOperator transpose(const NqaOperator &a) {
    NqaOperator out(a.num_slots());
    for (const auto &[w, c] : a.terms()) {
        out.add_term(w, word_transpose(w).sign.as_double() * c);
    }
    return out;
}

NqaOperator operator+(const NqaOperator &a, const NqaOperator &b) {
    return add(a, b);
}
NqaOperator operator-(const NqaOperator &a, const NqaOperator &b) {
    return subtract(a, b);
}
NqaOperator operator*(const NqaOperator &a, const NqaOperator &b) {
    return op_mul(a, b);
}
NqaOperator operator*(double c, const NqaOperator &a) {
    return scale(c, a);
}

NqaOperator embed(const NqaOperator &op, std::span<const size_t> slots, size_t num_slots) {
    if (slots.size() != op.num_slots()) {
        throw DimensionError("embed: need one target slot per operator slot");
    }
    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] >= num_slots) {
            throw SlotError("embed: slot " + std::to_string(slots[i] + 1) + " outside 1.." +
                            std::to_string(num_slots));
        }
        for (size_t j = 0; j < i; ++j) {
            if (slots[i] == slots[j]) {
                throw SlotError("embed: slot " + std::to_string(slots[i] + 1) + " used twice");
            }
        }
    }
    NqaOperator out(num_slots);
    for (const auto &[w, c] : op.terms()) {
        NqaWord big(num_slots);
        for (size_t i = 0; i < slots.size(); ++i) {
            big.set_block(slots[i], w.block(i));
        }
        out.add_term(big, c);
    }
    return out;
}

DenseMatrix block_matrix(Block b) {
    switch (b) {
        case Block::I:
            return DenseMatrix(2, 2, {1, 0, 0, 1});
        case Block::X:
            return DenseMatrix(2, 2, {0, 1, 1, 0});
        case Block::Z:
            return DenseMatrix(2, 2, {1, 0, 0, -1});
        case Block::W:
            return DenseMatrix(2, 2, {0, -1, 1, 0});
    }
    return {};
}

DenseMatrix to_dense(const NqaWord &w, size_t max_slots) {
    check_dense_cap(w.num_slots(), max_slots);
    DenseMatrix out = block_matrix(w.block(0));
    for (size_t k = 1; k < w.num_slots(); ++k) {
        out = kron(out, block_matrix(w.block(k)));
    }
    return out;
}

DenseMatrix to_dense(const NqaOperator &a, size_t max_slots) {
    check_dense_cap(a.num_slots(), max_slots);
    size_t n = size_t{1} << a.num_slots();
    DenseMatrix out(n, n);
    for (const auto &[w, c] : a.terms()) {
        out += c * to_dense(w, max_slots);
    }
    return out;
}

NqaOperator from_dense(const DenseMatrix &mat) {
    if (!mat.is_square() || mat.rows() < 2 || !std::has_single_bit(mat.rows())) {
        throw ShapeError("from_dense: expected a 2^m x 2^m matrix with m >= 1, got " + std::to_string(mat.rows()) +
                         "x" + std::to_string(mat.cols()));
    }
    size_t n = mat.rows();
    size_t m = static_cast<size_t>(std::countr_zero(n));
    if (m > 63) {
        throw ShapeError("from_dense: matrix too large");
    }
    double norm = 1.0 / static_cast<double>(n);
    NqaOperator out(m);
    std::vector<double> v(n);
    for (uint64_t alpha = 0; alpha < n; ++alpha) {
        // tr(B^T M) = sum_x (-1)^{beta.x} M[x ^ alpha][x].
        for (uint64_t x = 0; x < n; ++x) {
            v[x] = mat(x ^ alpha, x);
        }
        fwht(v);
        for (uint64_t beta = 0; beta < n; ++beta) {
            if (std::abs(v[beta] * norm) >= kPruneThreshold) {
                out.add_term(word_from_masks(m, alpha, beta), v[beta] * norm);
            }
        }
    }
    return out;
}

double frobenius(const NqaOperator &a, const NqaOperator &b) {
    check_same_slots(a, b, "frobenius");
    // <B_g, B_h> = 2^{-m} tr(B_g^T B_h); only g == h survives, with the sign
    // of B_g^T B_g = (transpose sign) * (square sign) * I.
    double acc = 0.0;
    for (const auto &[w, ca] : a.terms()) {
        auto it = b.terms().find(w);
        if (it == b.terms().end()) {
            continue;
        }
        SignedWord gram = word_mul(word_transpose(w), SignedWord{Sign::plus(), w});
        acc += gram.sign.as_double() * ca * it->second;
    }
    return acc;
}

NqaOperator commutator(const NqaOperator &a, const NqaOperator &b) {
    return op_mul(a, b) - op_mul(b, a);
}

NqaOperator anticommutator(const NqaOperator &a, const NqaOperator &b) {
    return op_mul(a, b) + op_mul(b, a);
}

bool is_degree_homogeneous(const NqaOperator &a) {
    return a.num_terms() <= 1;
}

bool is_parity_homogeneous(const NqaOperator &a) {
    if (a.is_zero()) {
        return true;
    }
    bool p = parity(a.terms().begin()->first);
    return std::all_of(a.terms().begin(), a.terms().end(), [p](const auto &t) { return parity(t.first) == p; });
}

bool operator_parity(const NqaOperator &a) {
    if (!is_parity_homogeneous(a)) {
        throw HomogeneityError("operator is not parity-homogeneous");
    }
    return a.is_zero() ? false : parity(a.terms().begin()->first);
}

NqaOperator epsilon_commutator(const NqaOperator &a, const NqaOperator &b) {
    check_same_slots(a, b, "epsilon_commutator");
    if (!is_degree_homogeneous(a) || !is_degree_homogeneous(b)) {
        throw HomogeneityError("epsilon_commutator: arguments must each be a multiple of a single word");
    }
    if (a.is_zero() || b.is_zero()) {
        return NqaOperator(a.num_slots());
    }
    Sign eps = epsilon(a.terms().begin()->first, b.terms().begin()->first);
    return op_mul(a, b) - scale(eps.as_double(), op_mul(b, a));
}

NqaOperator supercommutator(const NqaOperator &a, const NqaOperator &b) {
    check_same_slots(a, b, "supercommutator");
    if (!is_parity_homogeneous(a) || !is_parity_homogeneous(b)) {
        throw HomogeneityError("supercommutator: arguments must be parity-homogeneous");
    }
    double s = (operator_parity(a) && operator_parity(b)) ? -1.0 : 1.0;
    return op_mul(a, b) - scale(s, op_mul(b, a));
}

IndexMasks index_masks(const NqaWord &w) {
    size_t m = w.num_slots();
    if (m > 63) {
        throw SizeError("index_masks: more than 63 slots");
    }
    IndexMasks out{0, 0};
    for (size_t k = 0; k < m; ++k) {
        uint64_t bit = uint64_t{1} << (m - 1 - k);
        if (w.alpha_bit(k)) {
            out.alpha |= bit;
        }
        if (w.beta_bit(k)) {
            out.beta |= bit;
        }
    }
    return out;
}

StateVector apply(const NqaOperator &a, const StateVector &v) {
    if (a.num_slots() != v.num_slots) {
        throw DimensionError("apply: operator has " + std::to_string(a.num_slots()) + " slots, state has " +
                             std::to_string(v.num_slots));
    }
    StateVector out(v.num_slots);
    const size_t n = v.dim();
    for (const auto &[w, c] : a.terms()) {
        IndexMasks mk = index_masks(w);
        for (uint64_t x = 0; x < n; ++x) {
            double amp = v.amplitudes[x];
            if (amp == 0.0) {
                continue;
            }
            double s = (std::popcount(mk.beta & x) & 1) ? -c : c;
            out.amplitudes[x ^ mk.alpha] += s * amp;
        }
    }
    return out;
}

bool is_orthogonal(const NqaOperator &a, double tol, size_t max_slots) {
    return is_orthogonal(to_dense(a, max_slots), tol);
}

}  // namespace nqa
