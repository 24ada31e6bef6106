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
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nqa {

/// One slot of a tensor word. The enumerator value packs the index bits as
/// (alpha | beta << 1), so I=(0,0), X=(1,0), Z=(0,1), W=(1,1) = XZ.
enum class Block : uint8_t { I = 0, X = 1, Z = 2, W = 3 };

constexpr bool block_alpha(Block b) {
    return static_cast<uint8_t>(b) & 1;
}
constexpr bool block_beta(Block b) {
    return static_cast<uint8_t>(b) >> 1;
}
constexpr Block block_from_bits(bool alpha, bool beta) {
    return static_cast<Block>(static_cast<uint8_t>(alpha) | (static_cast<uint8_t>(beta) << 1));
}
char block_char(Block b);
/// Throws std::invalid_argument on anything outside {I,X,Z,W}.
Block block_from_char(char c);

/// +1 or -1, stored as a single bit.
class Sign {
   public:
    constexpr Sign() = default;
    static constexpr Sign plus() {
        return Sign(false);
    }
    static constexpr Sign minus() {
        return Sign(true);
    }
    static constexpr Sign from_parity(bool odd) {
        return Sign(odd);
    }

    constexpr bool negative() const {
        return negative_;
    }
    constexpr int value() const {
        return negative_ ? -1 : 1;
    }
    constexpr double as_double() const {
        return negative_ ? -1.0 : 1.0;
    }

    constexpr Sign operator*(Sign other) const {
        return Sign(negative_ != other.negative_);
    }
    constexpr Sign operator-() const {
        return Sign(!negative_);
    }
    constexpr bool operator==(const Sign &) const = default;

   private:
    constexpr explicit Sign(bool negative) : negative_(negative) {
    }
    bool negative_ = false;
};

/// The tensor block B(alpha, beta) = (X^a1 Z^b1) (x) ... (x) (X^am Z^bm).
///
/// Slot k (0-based here, 1-based in the text form) lives at bit k of the
/// packed alpha/beta vectors. Words with m <= 128 keep their bits inline, so
/// products of such words never touch the heap.
class NqaWord {
   public:
    static constexpr size_t kBitsPerWord = 64;

    /// The identity word I^{(x)m}.
    explicit NqaWord(size_t num_slots);

    /// Parses "ZIZ"-style text; leftmost character is slot 1.
    static NqaWord from_literal(std::string_view text);
    static NqaWord from_bits(size_t num_slots, std::span<const uint64_t> alpha, std::span<const uint64_t> beta);
    /// Single non-identity block at `slot` (0-based).
    static NqaWord single(size_t num_slots, size_t slot, Block block);

    size_t num_slots() const {
        return num_slots_;
    }
    size_t num_words() const {
        return num_words_;
    }

    Block block(size_t slot) const;
    void set_block(size_t slot, Block block);
    bool alpha_bit(size_t slot) const;
    bool beta_bit(size_t slot) const;

    std::span<const uint64_t> alpha() const {
        return {data(), num_words_};
    }
    std::span<const uint64_t> beta() const {
        return {data() + num_words_, num_words_};
    }
    std::span<uint64_t> alpha_mut() {
        return {data(), num_words_};
    }
    std::span<uint64_t> beta_mut() {
        return {data() + num_words_, num_words_};
    }

    bool is_identity() const;
    size_t alpha_weight() const;
    size_t beta_weight() const;
    std::string literal() const;

    /// Word concatenation: slots of `other` follow slots of this word.
    NqaWord concat(const NqaWord &other) const;

    bool operator==(const NqaWord &other) const;
    /// Strict weak order on (m, alpha, beta). Not the literal order; use
    /// literal_less for display ordering.
    bool operator<(const NqaWord &other) const;

    size_t hash() const;

   private:
    static constexpr size_t kInlineWords = 2;

    uint64_t *data() {
        return num_words_ <= kInlineWords ? inline_.data() : heap_.data();
    }
    const uint64_t *data() const {
        return num_words_ <= kInlineWords ? inline_.data() : heap_.data();
    }

    size_t num_slots_;
    size_t num_words_;
    // Layout: [alpha words..., beta words...].
    std::array<uint64_t, 2 * kInlineWords> inline_{};
    std::vector<uint64_t> heap_;
};

/// Orders words by their text form (I < W < X < Z, slot 1 most significant).
bool literal_less(const NqaWord &a, const NqaWord &b);

struct NqaWordHash {
    size_t operator()(const NqaWord &w) const {
        return w.hash();
    }
};

/// A word with an explicit sign. The sign is never folded into a coefficient
/// at this layer.
struct SignedWord {
    Sign sign;
    NqaWord word;

    bool operator==(const SignedWord &) const = default;
};

/// B_u B_v = (-1)^{beta_u . alpha_v} B(alpha_u ^ alpha_v, beta_u ^ beta_v).
/// Throws DimensionError if the slot counts differ.
SignedWord word_mul(const NqaWord &u, const NqaWord &v);
SignedWord word_mul(const SignedWord &u, const SignedWord &v);

/// B_u^T = (-1)^{alpha_u . beta_u} B_u.
SignedWord word_transpose(const NqaWord &u);
SignedWord word_transpose(const SignedWord &u);

/// Omega(g, h) = beta_g . alpha_h + beta_h . alpha_g (mod 2).
bool omega(const NqaWord &g, const NqaWord &h);
/// epsilon(g, h) = (-1)^Omega(g, h); words satisfy B_g B_h = epsilon(g, h) B_h B_g.
Sign epsilon(const NqaWord &g, const NqaWord &h);

/// The (Z_2)^{2m} degree of a word is the word itself; this returns the pair.
struct Degree {
    std::vector<bool> alpha;
    std::vector<bool> beta;
};
Degree degree(const NqaWord &u);

/// (|alpha| + |beta|) mod 2.
bool parity(const NqaWord &u);

}  // namespace nqa

template <>
struct std::hash<nqa::NqaWord> {
    size_t operator()(const nqa::NqaWord &w) const {
        return w.hash();
    }
};
