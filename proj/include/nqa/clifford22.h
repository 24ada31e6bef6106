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
#include <string_view>
#include <vector>

#include "nqa/operator.h"
#include "nqa/word.h"

/// The two-qubit identification Mat(4, R) = Cl(2,2; R).
///
/// Generators: e1 = XI, e2 = ZI, e3 = WX, e4 = WZ, with e1^2 = e2^2 = +1 and
/// e3^2 = e4^2 = -1.
namespace nqa::cl22 {

/// sign * e_{i1} e_{i2} ... with i1 < i2 < ...; bit (i - 1) of `mask` marks
/// generator e_i.
struct CliffordMonomial {
    Sign sign;
    uint8_t mask = 0;

    int grade() const;
    bool operator==(const CliffordMonomial &) const = default;
};

/// e_i for i in 1..4 as a one-word operator on two slots. Throws SlotError
/// for other i.
NqaOperator generator(int i);
NqaWord generator_word(int i);
/// e_i^2 = +1 for i = 1, 2 and -1 for i = 3, 4.
Sign generator_square(int i);

/// Normal form of a product of generators given in any order (1-based
/// indices): adjacent swaps flip the sign, repeated pairs contract by their
/// square.
CliffordMonomial canonicalize(const std::vector<int> &generators, Sign sign = Sign::plus());
CliffordMonomial monomial_mul(const CliffordMonomial &a, const CliffordMonomial &b);

/// The signed word equal to the monomial, via products of generator words.
SignedWord monomial_to_word(const CliffordMonomial &mono);
/// Inverse of monomial_to_word on the 16 basis words. Throws DimensionError
/// unless m = 2.
CliffordMonomial word_to_monomial(const NqaWord &u);

/// omega = e1 e2 e3 e4 = -WW.
NqaOperator pseudoscalar();
/// Number of generators in word_to_monomial(u).
int grade(const NqaWord &u);

/// "e1e2", "-e2e3", "1".
std::string monomial_string(const CliffordMonomial &mono);

struct DictionaryRow {
    std::string_view word;
    std::string_view pauli;
    CliffordMonomial monomial;
};

/// The 16 rows in display order (grade 0, 1, 2, 3, 4).
const std::vector<DictionaryRow> &dictionary();

}  // namespace nqa::cl22
