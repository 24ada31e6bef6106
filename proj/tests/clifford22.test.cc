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

#include <doctest.h>

#include <map>

#include "nqa/clifford22.h"
#include "nqa/errors.h"
#include "nqa/operator.h"
#include "oracle.h"

using namespace nqa;
using namespace nqa::cl22;

namespace {

// The dictionary as published: word -> signed monomial (generator digits).
const std::map<std::string, std::pair<int, std::string>> kTable = {
    {"II", {+1, ""}},    {"XI", {+1, "1"}},    {"ZI", {+1, "2"}},    {"WX", {+1, "3"}},
    {"WZ", {+1, "4"}},   {"WI", {+1, "12"}},   {"ZX", {+1, "13"}},   {"ZZ", {+1, "14"}},
    {"XX", {-1, "23"}},  {"XZ", {-1, "24"}},   {"IW", {-1, "34"}},   {"IX", {-1, "123"}},
    {"IZ", {-1, "124"}}, {"XW", {-1, "134"}},  {"ZW", {-1, "234"}},  {"WW", {-1, "1234"}},
};

DenseMatrix dense_generator(int i) {
    static const char *lits[] = {"XI", "ZI", "WX", "WZ"};
    return oracle::word(lits[i - 1]);
}

}  // namespace

TEST_CASE("generators") {
    CHECK(generator(1) == NqaOperator::from_terms({{"XI", 1}}));
    CHECK(generator(3) == NqaOperator::from_terms({{"WX", 1}}));
    CHECK_THROWS_AS(generator(0), SlotError);
    CHECK_THROWS_AS(generator(5), SlotError);
}

TEST_CASE("Clifford relations, dense and exact") {
    DenseMatrix id = DenseMatrix::identity(4);
    for (int r = 1; r <= 4; ++r) {
        DenseMatrix er = dense_generator(r);
        double sq = r <= 2 ? 1.0 : -1.0;
        CHECK(mat_mul(er, er) == sq * id);
        CHECK(generator_square(r).as_double() == sq);
        for (int s = r + 1; s <= 4; ++s) {
            DenseMatrix es = dense_generator(s);
            CHECK(max_abs(mat_mul(er, es) + mat_mul(es, er)) == 0.0);
        }
    }
}

TEST_CASE("dictionary matches the published table and dense products") {
    REQUIRE(dictionary().size() == 16);
    for (const auto &row : dictionary()) {
        auto it = kTable.find(std::string(row.word));
        REQUIRE(it != kTable.end());
        CliffordMonomial want = canonicalize({}, it->second.first < 0 ? Sign::minus() : Sign::plus());
        for (char c : it->second.second) want.mask |= static_cast<uint8_t>(1u << (c - '1'));
        CHECK(row.monomial == want);

        DenseMatrix prod = DenseMatrix::identity(4);
        for (char c : it->second.second) prod = mat_mul(prod, dense_generator(c - '0'));
        CHECK(static_cast<double>(it->second.first) * prod == oracle::word(row.word));
    }
}

TEST_CASE("monomial and word maps are inverse") {
    for (uint8_t mask = 0; mask < 16; ++mask) {
        for (Sign s : {Sign::plus(), Sign::minus()}) {
            CliffordMonomial m{s, mask};
            SignedWord w = monomial_to_word(m);
            CliffordMonomial back = word_to_monomial(w.word);
            CHECK(back.mask == mask);
            CHECK(back.sign * w.sign == s);
        }
    }
    CHECK(monomial_to_word({Sign::plus(), 0b0011}) == SignedWord{Sign::plus(), NqaWord::from_literal("WI")});
    CHECK(word_to_monomial(NqaWord::from_literal("XX")) == CliffordMonomial{Sign::minus(), 0b0110});
    CHECK(monomial_to_word({Sign::plus(), 0}) == SignedWord{Sign::plus(), NqaWord::from_literal("II")});
    CHECK_THROWS_AS(word_to_monomial(NqaWord::from_literal("XXX")), DimensionError);
}

TEST_CASE("canonical ordering") {
    // e2 e1 = -e1 e2; e3 e3 = -1; e1 e1 = +1.
    CHECK(canonicalize({2, 1}) == CliffordMonomial{Sign::minus(), 0b0011});
    CHECK(canonicalize({3, 3}) == CliffordMonomial{Sign::minus(), 0});
    CHECK(canonicalize({1, 2, 1}) == CliffordMonomial{Sign::minus(), 0b0010});
    CHECK(monomial_mul({Sign::plus(), 0b1111}, {Sign::plus(), 0b1111}) == CliffordMonomial{Sign::plus(), 0});
    CHECK(monomial_string({Sign::minus(), 0b0110}) == "-e2e3");
    CHECK(monomial_string({Sign::plus(), 0}) == "1");
}

TEST_CASE("pseudoscalar and grades") {
    NqaOperator w = pseudoscalar();
    CHECK(w == NqaOperator::from_terms({{"WW", -1}}));
    DenseMatrix d = to_dense(w);
    CHECK(mat_mul(d, d) == DenseMatrix::identity(4));
    CHECK(grade(NqaWord::from_literal("II")) == 0);
    CHECK(grade(NqaWord::from_literal("IX")) == 3);
    CHECK(grade(NqaWord::from_literal("WW")) == 4);
    for (const auto &row : dictionary()) {
        NqaWord u = NqaWord::from_literal(row.word);
        CHECK((grade(u) % 2 == 1) == parity(u));
    }
}

TEST_CASE("bivectors close under commutators") {
    std::vector<NqaOperator> biv;
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) biv.push_back(generator(i) * generator(j));
    }
    for (const auto &a : biv) {
        for (const auto &b : biv) {
            NqaOperator c = from_dense(mat_mul(to_dense(a), to_dense(b)) - mat_mul(to_dense(b), to_dense(a)));
            for (const auto &[w, coef] : c.terms()) {
                CHECK(grade(w) == 2);
            }
        }
    }
}
