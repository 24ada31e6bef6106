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

#include "nqa/clifford22.h"

#include <bit>
#include <string>
#include <utility>

#include "nqa/errors.h"

namespace nqa::cl22 {

namespace {

void check_index(int i) {
    if (i < 1 || i > 4) {
        throw SlotError("Cl(2,2) generator index " + std::to_string(i) + " outside 1..4");
    }
}

constexpr std::string_view kGeneratorLiterals[4] = {"XI", "ZI", "WX", "WZ"};

}  // namespace

int CliffordMonomial::grade() const {
    return std::popcount(mask);
}

NqaWord generator_word(int i) {
    check_index(i);
    return NqaWord::from_literal(kGeneratorLiterals[i - 1]);
}

NqaOperator generator(int i) {
    return NqaOperator::from_word(generator_word(i));
}

Sign generator_square(int i) {
    check_index(i);
    return i <= 2 ? Sign::plus() : Sign::minus();
}

CliffordMonomial canonicalize(const std::vector<int> &generators, Sign sign) {
    std::vector<int> g = generators;
    for (int i : g) {
        check_index(i);
    }
    // Bubble sort; each adjacent swap of distinct generators anticommutes.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k + 1 < g.size(); ++k) {
            if (g[k] > g[k + 1]) {
                std::swap(g[k], g[k + 1]);
                sign = -sign;
                changed = true;
            } else if (g[k] == g[k + 1]) {
                sign = sign * generator_square(g[k]);
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(k), g.begin() + static_cast<std::ptrdiff_t>(k) + 2);
                changed = true;
                break;
            }
        }
    }
    CliffordMonomial out{sign, 0};
    for (int i : g) {
        out.mask |= static_cast<uint8_t>(1u << (i - 1));
    }
    return out;
}

namespace {

std::vector<int> generator_list(uint8_t mask) {
    std::vector<int> out;
    for (int i = 1; i <= 4; ++i) {
        if (mask & (1u << (i - 1))) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace

CliffordMonomial monomial_mul(const CliffordMonomial &a, const CliffordMonomial &b) {
    std::vector<int> g = generator_list(a.mask);
    std::vector<int> gb = generator_list(b.mask);
    g.insert(g.end(), gb.begin(), gb.end());
    return canonicalize(g, a.sign * b.sign);
}

SignedWord monomial_to_word(const CliffordMonomial &mono) {
    SignedWord out{mono.sign, NqaWord(2)};
    for (int i : generator_list(mono.mask)) {
        out = word_mul(out, SignedWord{Sign::plus(), generator_word(i)});
    }
    return out;
}

CliffordMonomial word_to_monomial(const NqaWord &u) {
    if (u.num_slots() != 2) {
        throw DimensionError("Cl(2,2) dictionary needs a two-slot word, got " + std::to_string(u.num_slots()));
    }
    for (uint8_t mask = 0; mask < 16; ++mask) {
        SignedWord w = monomial_to_word({Sign::plus(), mask});
        if (w.word == u) {
            return {w.sign, mask};
        }
    }
    throw NumericError("word_to_monomial: no monomial found for " + u.literal());
}

NqaOperator pseudoscalar() {
    return NqaOperator::from_word(monomial_to_word({Sign::plus(), 0b1111}));
}

int grade(const NqaWord &u) {
    return word_to_monomial(u).grade();
}

std::string monomial_string(const CliffordMonomial &mono) {
    std::string out = mono.sign.negative() ? "-" : "";
    if (mono.mask == 0) {
        return out + "1";
    }
    for (int i : generator_list(mono.mask)) {
        out += "e" + std::to_string(i);
    }
    return out;
}

const std::vector<DictionaryRow> &dictionary() {
    static const std::vector<DictionaryRow> rows = [] {
        constexpr std::pair<std::string_view, std::string_view> kRows[16] = {
            {"II", "I (x) I"},       {"XI", "X (x) I"},      {"ZI", "Z (x) I"},      {"WX", "(-i) Y (x) X"},
            {"WZ", "(-i) Y (x) Z"},  {"WI", "(-i) Y (x) I"}, {"ZX", "Z (x) X"},      {"ZZ", "Z (x) Z"},
            {"XX", "X (x) X"},       {"XZ", "X (x) Z"},      {"IW", "I (x) (-i) Y"}, {"IX", "I (x) X"},
            {"IZ", "I (x) Z"},       {"XW", "X (x) (-i) Y"}, {"ZW", "Z (x) (-i) Y"}, {"WW", "-Y (x) Y"},
        };
        std::vector<DictionaryRow> out;
        for (const auto &[word, pauli] : kRows) {
            out.push_back({word, pauli, word_to_monomial(NqaWord::from_literal(word))});
        }
        return out;
    }();
    return rows;
}

}  // namespace nqa::cl22
