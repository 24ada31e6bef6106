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

#include "nqa/word.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "nqa/errors.h"

namespace nqa {

namespace {

inline size_t words_for(size_t num_slots) {
    return (num_slots + NqaWord::kBitsPerWord - 1) / NqaWord::kBitsPerWord;
}

inline void check_same_slots(const NqaWord &u, const NqaWord &v, const char *op) {
    if (u.num_slots() != v.num_slots()) {
        throw DimensionError(std::string(op) + ": slot count mismatch (" + std::to_string(u.num_slots()) + " vs " +
                             std::to_string(v.num_slots()) + ")");
    }
}

// Parity of popcount(a AND b), word by word.
inline bool dot_parity(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    uint64_t acc = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        acc ^= a[i] & b[i];
    }
    return std::popcount(acc) & 1;
}

inline size_t weight(std::span<const uint64_t> a) {
    size_t n = 0;
    for (uint64_t x : a) {
        n += std::popcount(x);
    }
    return n;
}

// Rank in the literal alphabet I < W < X < Z.
inline int literal_rank(Block b) {
    switch (b) {
        case Block::I:
            return 0;
        case Block::W:
            return 1;
        case Block::X:
            return 2;
        case Block::Z:
            return 3;
    }
    return 0;
}

}  // namespace

char block_char(Block b) {
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'W'};
    return kChars[static_cast<uint8_t>(b)];
}

Block block_from_char(char c) {
    switch (c) {
        case 'I':
            return Block::I;
        case 'X':
            return Block::X;
        case 'Z':
            return Block::Z;
        case 'W':
            return Block::W;
        default:
            throw std::invalid_argument(std::string("not a block letter: '") + c + "'");
    }
}

NqaWord::NqaWord(size_t num_slots) : num_slots_(num_slots), num_words_(words_for(num_slots)) {
    if (num_slots == 0) {
        throw DimensionError("a word needs at least one slot");
    }
    if (num_words_ > kInlineWords) {
        heap_.assign(2 * num_words_, 0);
    }
}

NqaWord NqaWord::from_literal(std::string_view text) {
    NqaWord w(text.size());
    for (size_t k = 0; k < text.size(); ++k) {
        w.set_block(k, block_from_char(text[k]));
    }
    return w;
}

NqaWord NqaWord::from_bits(size_t num_slots, std::span<const uint64_t> alpha, std::span<const uint64_t> beta) {
    NqaWord w(num_slots);
    if (alpha.size() != w.num_words_ || beta.size() != w.num_words_) {
        throw DimensionError("from_bits: packed vector length does not match slot count");
    }
    std::copy(alpha.begin(), alpha.end(), w.alpha_mut().begin());
    std::copy(beta.begin(), beta.end(), w.beta_mut().begin());
    size_t tail = num_slots % kBitsPerWord;
    if (tail != 0) {
        uint64_t mask = (uint64_t{1} << tail) - 1;
        if ((w.alpha().back() & ~mask) || (w.beta().back() & ~mask)) {
            throw DimensionError("from_bits: bits set beyond the last slot");
        }
    }
    return w;
}

NqaWord NqaWord::single(size_t num_slots, size_t slot, Block block) {
    NqaWord w(num_slots);
    w.set_block(slot, block);
    return w;
}

Block NqaWord::block(size_t slot) const {
    return block_from_bits(alpha_bit(slot), beta_bit(slot));
}

bool NqaWord::alpha_bit(size_t slot) const {
    if (slot >= num_slots_) {
        throw SlotError("slot " + std::to_string(slot) + " out of range");
    }
    return (alpha()[slot / kBitsPerWord] >> (slot % kBitsPerWord)) & 1;
}

bool NqaWord::beta_bit(size_t slot) const {
    if (slot >= num_slots_) {
        throw SlotError("slot " + std::to_string(slot) + " out of range");
    }
    return (beta()[slot / kBitsPerWord] >> (slot % kBitsPerWord)) & 1;
}

void NqaWord::set_block(size_t slot, Block block) {
    if (slot >= num_slots_) {
        throw SlotError("slot " + std::to_string(slot) + " out of range");
    }
    uint64_t bit = uint64_t{1} << (slot % kBitsPerWord);
    size_t w = slot / kBitsPerWord;
    auto a = alpha_mut();
    auto b = beta_mut();
    a[w] = block_alpha(block) ? (a[w] | bit) : (a[w] & ~bit);
    b[w] = block_beta(block) ? (b[w] | bit) : (b[w] & ~bit);
}

bool NqaWord::is_identity() const {
    const uint64_t *d = data();
    return std::all_of(d, d + 2 * num_words_, [](uint64_t x) { return x == 0; });
}

size_t NqaWord::alpha_weight() const {
    return weight(alpha());
}

size_t NqaWord::beta_weight() const {
    return weight(beta());
}

std::string NqaWord::literal() const {
    std::string out(num_slots_, 'I');
    for (size_t k = 0; k < num_slots_; ++k) {
        out[k] = block_char(block(k));
    }
    return out;
}

NqaWord NqaWord::concat(const NqaWord &other) const {
    NqaWord out(num_slots_ + other.num_slots_);
    for (size_t k = 0; k < num_slots_; ++k) {
        out.set_block(k, block(k));
    }
    for (size_t k = 0; k < other.num_slots_; ++k) {
        out.set_block(num_slots_ + k, other.block(k));
    }
    return out;
}

bool NqaWord::operator==(const NqaWord &other) const {
    if (num_slots_ != other.num_slots_) {
        return false;
    }
    return std::equal(data(), data() + 2 * num_words_, other.data());
}

bool NqaWord::operator<(const NqaWord &other) const {
    if (num_slots_ != other.num_slots_) {
        return num_slots_ < other.num_slots_;
    }
    return std::lexicographical_compare(data(), data() + 2 * num_words_, other.data(), other.data() + 2 * num_words_);
}

size_t NqaWord::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ num_slots_;
    const uint64_t *d = data();
    for (size_t i = 0; i < 2 * num_words_; ++i) {
        h ^= d[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

bool literal_less(const NqaWord &a, const NqaWord &b) {
    size_t n = std::min(a.num_slots(), b.num_slots());
    for (size_t k = 0; k < n; ++k) {
        int ra = literal_rank(a.block(k));
        int rb = literal_rank(b.block(k));
        if (ra != rb) {
            return ra < rb;
        }
    }
    return a.num_slots() < b.num_slots();
}

SignedWord word_mul(const NqaWord &u, const NqaWord &v) {
    check_same_slots(u, v, "word_mul");
    SignedWord out{Sign::from_parity(dot_parity(u.beta(), v.alpha())), NqaWord(u.num_slots())};
    auto ua = u.alpha();
    auto ub = u.beta();
    auto va = v.alpha();
    auto vb = v.beta();
    auto oa = out.word.alpha_mut();
    auto ob = out.word.beta_mut();
    for (size_t i = 0; i < ua.size(); ++i) {
        oa[i] = ua[i] ^ va[i];
        ob[i] = ub[i] ^ vb[i];
    }
    return out;
}

SignedWord word_mul(const SignedWord &u, const SignedWord &v) {
    SignedWord out = word_mul(u.word, v.word);
    out.sign = out.sign * u.sign * v.sign;
    return out;
}

SignedWord word_transpose(const NqaWord &u) {
    return SignedWord{Sign::from_parity(dot_parity(u.alpha(), u.beta())), u};
}

SignedWord word_transpose(const SignedWord &u) {
    SignedWord out = word_transpose(u.word);
    out.sign = out.sign * u.sign;
    return out;
}

bool omega(const NqaWord &g, const NqaWord &h) {
    check_same_slots(g, h, "omega");
    return dot_parity(g.beta(), h.alpha()) != dot_parity(h.beta(), g.alpha());
}

Sign epsilon(const NqaWord &g, const NqaWord &h) {
    return Sign::from_parity(omega(g, h));
}

Degree degree(const NqaWord &u) {
    Degree d;
    d.alpha.resize(u.num_slots());
    d.beta.resize(u.num_slots());
    for (size_t k = 0; k < u.num_slots(); ++k) {
        d.alpha[k] = u.alpha_bit(k);
        d.beta[k] = u.beta_bit(k);
    }
    return d;
}

bool parity(const NqaWord &u) {
    return (u.alpha_weight() + u.beta_weight()) & 1;
}

}  // namespace nqa
