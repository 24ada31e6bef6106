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

#include <cmath>
#include <numbers>
#include <random>

#include "nqa/checks.h"
#include "nqa/errors.h"
#include "nqa/gates.h"
#include "nqa/operator.h"
#include "oracle.h"

using namespace nqa;

namespace {

const double kR = std::numbers::sqrt2 / 2;

NqaOperator op(std::initializer_list<std::pair<std::string_view, double>> t) {
    return NqaOperator::from_terms(t);
}

// Dense form through the reference path only.
DenseMatrix ref_dense(const NqaOperator &a) {
    size_t n = size_t{1} << a.num_slots();
    DenseMatrix out(n, n);
    for (const auto &[w, c] : a.terms()) out += c * oracle::word(w.literal());
    return out;
}

NqaWord random_word(size_t m, std::mt19937_64 &rng) {
    NqaWord out(m);
    for (size_t k = 0; k < m; ++k) out.set_block(k, static_cast<Block>(rng() & 3));
    return out;
}

NqaOperator random_parity_op(size_t m, bool odd, std::mt19937_64 &rng) {
    NqaOperator out(m);
    std::uniform_real_distribution<double> u(-1, 1);
    // Each parity class has 2^(2m-1) words, only two at m = 1.
    const size_t want = std::min<size_t>(3, size_t{1} << (2 * m - 1));
    while (out.num_terms() < want) {
        NqaWord w = random_word(m, rng);
        if (parity(w) == odd) out.add_term(w, std::round(8 * u(rng)) / 8 + 0.125);
    }
    return out;
}

}  // namespace

TEST_CASE("add and scale") {
    NqaOperator a = op({{"XZ", 0.5}, {"WI", -2}});
    CHECK(a + NqaOperator(2) == a);
    CHECK((scale(-1, a) + a).is_zero());
    NqaOperator h = scale(kR, op({{"X", 1}})) + scale(kR, op({{"Z", 1}}));
    CHECK(h.coefficient(NqaWord::from_literal("X")) == kR);
    CHECK(h.num_terms() == 2);
    CHECK_THROWS_AS(a + NqaOperator(3), DimensionError);
}

TEST_CASE("pruning drops tiny coefficients") {
    NqaOperator a = op({{"X", 1.0}});
    a.add_term(NqaWord::from_literal("X"), -1.0 + 1e-15);
    CHECK(a.is_zero());
}

TEST_CASE("products") {
    NqaOperator h = gates::hadamard(1, 1);
    NqaOperator z = op({{"Z", 1}});
    NqaOperator hzh = h * z * h;
    CHECK(hzh.num_terms() == 1);
    CHECK(std::abs(hzh.coefficient(NqaWord::from_literal("X")) - 1.0) < 1e-15);
    NqaOperator cz = gates::cz(1, 2, 2);
    CHECK(cz * cz == NqaOperator::identity(2));
    NqaOperator a = op({{"XW", 0.25}, {"ZZ", 3}});
    CHECK(NqaOperator::identity(2) * a == a);
}

TEST_CASE("op_mul against the dense oracle, 500 random pairs") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 500; ++t) {
        size_t m = 1 + t % 3;
        NqaOperator a = checks::random_operator(m, 1 + rng() % 8, rng);
        NqaOperator b = checks::random_operator(m, 1 + rng() % 8, rng);
        REQUIRE(max_norm_diff(ref_dense(a * b), mat_mul(ref_dense(a), ref_dense(b))) < 1e-12);
    }
}

TEST_CASE("tensor") {
    NqaOperator h = gates::hadamard(1, 1);
    NqaOperator hi = tensor(h, NqaOperator::identity(1));
    CHECK(hi == op({{"XI", kR}, {"ZI", kR}}));
    NqaOperator hh = tensor(h, h);
    for (auto w : {"XX", "XZ", "ZX", "ZZ"}) {
        CHECK(std::abs(hh.coefficient(NqaWord::from_literal(w)) - 0.5) < 1e-15);
    }
    CHECK(tensor(NqaOperator::identity(1), NqaOperator::identity(1)) == op({{"II", 1}}));
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        NqaOperator a = checks::random_operator(1 + t % 2, 4, rng);
        NqaOperator b = checks::random_operator(1 + t % 3, 4, rng);
        CHECK(max_norm_diff(ref_dense(tensor(a, b)), kron(ref_dense(a), ref_dense(b))) < 1e-15);
    }
}

TEST_CASE("to_dense") {
    CHECK(to_dense(op({{"W", 1}})) == DenseMatrix(2, 2, {0, -1, 1, 0}));
    CHECK(to_dense(op({{"ZZ", 1}})) == DenseMatrix::diagonal(std::vector<double>{1, -1, -1, 1}));
    CHECK(to_dense(NqaOperator(2)) == DenseMatrix(4, 4));
    CHECK_THROWS_AS(to_dense(NqaOperator::identity(13)), SizeError);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        NqaOperator a = checks::random_operator(1 + t % 4, 10, rng);
        CHECK(max_norm_diff(to_dense(a), ref_dense(a)) < 1e-15);
    }
}

TEST_CASE("from_dense") {
    DenseMatrix cz = oracle::diag({1, 1, 1, -1});
    CHECK(from_dense(cz) == op({{"II", 0.5}, {"IZ", 0.5}, {"ZI", 0.5}, {"ZZ", -0.5}}));
    DenseMatrix sw = oracle::permutation(4, [](size_t x) { return ((x & 1) << 1) | (x >> 1); });
    CHECK(from_dense(sw) == op({{"II", 0.5}, {"XX", 0.5}, {"WW", -0.5}, {"ZZ", 0.5}}));
    CHECK(from_dense(DenseMatrix::identity(8)) == NqaOperator::identity(3));
    CHECK_THROWS_AS(from_dense(DenseMatrix(3, 3)), ShapeError);
    CHECK_THROWS_AS(from_dense(DenseMatrix(4, 2)), ShapeError);

    // Dyadic fixtures come back exactly.
    std::mt19937_64 rng(10);
    for (int t = 0; t < 40; ++t) {
        size_t m = 1 + t % 4;
        NqaOperator a(m);
        for (int k = 0; k < 6; ++k) a.add_term(random_word(m, rng), static_cast<double>(rng() % 17) / 16 - 0.5);
        CHECK(from_dense(to_dense(a)) == a);
    }
    // Arbitrary matrices round trip within 1e-12.
    std::uniform_real_distribution<double> u(-1, 1);
    DenseMatrix r(32, 32);
    for (double &x : r.data()) x = u(rng);
    CHECK(max_norm_diff(to_dense(from_dense(r)), r) < 1e-12);
}

TEST_CASE("frobenius orthonormality, m <= 3") {
    for (size_t m = 1; m <= 3; ++m) {
        size_t n = size_t{1} << (2 * m);
        std::vector<NqaWord> words;
        for (size_t i = 0; i < n; ++i) {
            NqaWord w(m);
            for (size_t k = 0; k < m; ++k) w.set_block(k, static_cast<Block>((i >> (2 * k)) & 3));
            words.push_back(w);
        }
        for (const auto &g : words) {
            for (const auto &h : words) {
                double f = frobenius(NqaOperator::from_word(g), NqaOperator::from_word(h));
                REQUIRE(f == (g == h ? 1.0 : 0.0));
            }
        }
    }
    NqaOperator a = op({{"XZ", 2}});
    CHECK(frobenius(a, NqaOperator(2)) == 0.0);
    // Against the dense definition.
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t) {
        NqaOperator x = checks::random_operator(3, 6, rng), y = checks::random_operator(3, 6, rng);
        double dense = trace(mat_mul(mat_transpose(ref_dense(x)), ref_dense(y))) / 8.0;
        CHECK(std::abs(frobenius(x, y) - dense) < 1e-12);
    }
}

TEST_CASE("brackets") {
    CHECK(anticommutator(op({{"X", 1}}), op({{"Z", 1}})).is_zero());
    CHECK(supercommutator(op({{"X", 1}}), op({{"Z", 1}})).is_zero());
    NqaOperator a = op({{"XZ", 1}, {"IW", 0.5}});
    CHECK(commutator(a, a).is_zero());
    CHECK_THROWS_AS(epsilon_commutator(a, op({{"ZZ", 1}})), HomogeneityError);
    CHECK_THROWS_AS(supercommutator(op({{"X", 1}, {"W", 1}}), op({{"Z", 1}})), HomogeneityError);
    CHECK(epsilon_commutator(NqaOperator(2), op({{"XZ", 1}})).is_zero());
}

TEST_CASE("epsilon-commutator vanishes on every word pair, m <= 3") {
    for (size_t m = 1; m <= 3; ++m) {
        size_t n = size_t{1} << (2 * m);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                NqaWord g(m), h(m);
                for (size_t k = 0; k < m; ++k) {
                    g.set_block(k, static_cast<Block>((i >> (2 * k)) & 3));
                    h.set_block(k, static_cast<Block>((j >> (2 * k)) & 3));
                }
                REQUIRE(epsilon_commutator(NqaOperator::from_word(g), NqaOperator::from_word(h)).is_zero());
            }
        }
    }
}

TEST_CASE("graded Jacobi identities") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 1000; ++t) {
        size_t m = 1 + rng() % 4;
        NqaWord g = random_word(m, rng), h = random_word(m, rng), k = random_word(m, rng);
        NqaOperator x = NqaOperator::from_word(g), y = NqaOperator::from_word(h), z = NqaOperator::from_word(k);
        // eps(k,g)[x,[y,z]] + eps(g,h)[y,[z,x]] + eps(h,k)[z,[x,y]] = 0
        NqaOperator s = epsilon(k, g).as_double() * epsilon_commutator(x, epsilon_commutator(y, z)) +
                        epsilon(g, h).as_double() * epsilon_commutator(y, epsilon_commutator(z, x)) +
                        epsilon(h, k).as_double() * epsilon_commutator(z, epsilon_commutator(x, y));
        REQUIRE(s.is_zero());
    }
    for (int t = 0; t < 1000; ++t) {
        size_t m = 1 + rng() % 4;
        bool px = rng() & 1, py = rng() & 1, pz = rng() & 1;
        NqaOperator x = random_parity_op(m, px, rng), y = random_parity_op(m, py, rng),
                    z = random_parity_op(m, pz, rng);
        auto sgn = [](bool a, bool b) { return (a && b) ? -1.0 : 1.0; };
        NqaOperator s = sgn(pz, px) * supercommutator(x, supercommutator(y, z)) +
                        sgn(px, py) * supercommutator(y, supercommutator(z, x)) +
                        sgn(py, pz) * supercommutator(z, supercommutator(x, y));
        REQUIRE(s.is_zero());
    }
}

TEST_CASE("apply") {
    CHECK(apply(op({{"Z", 1}}), StateVector::basis(1, 1)).amplitudes == std::vector<double>{0, -1});
    CHECK(apply(op({{"X", 1}}), StateVector::basis(1, 0)).amplitudes == std::vector<double>{0, 1});
    NqaOperator hh = tensor(gates::hadamard(1, 1), gates::hadamard(1, 1));
    auto v = apply(hh, StateVector::basis(2, 0)).amplitudes;
    for (double x : v) CHECK(std::abs(x - 0.5) < 1e-15);

    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 200; ++t) {
        size_t m = 1 + t % 6;
        NqaOperator a = checks::random_operator(m, 1 + rng() % 10, rng);
        std::vector<double> amps(size_t{1} << m);
        for (double &x : amps) x = u(rng);
        StateVector s(m, amps);
        auto got = apply(a, s).amplitudes;
        auto want = mat_vec(ref_dense(a), amps);
        for (size_t i = 0; i < got.size(); ++i) REQUIRE(std::abs(got[i] - want[i]) < 1e-12);
    }
    CHECK_THROWS_AS(apply(op({{"X", 1}}), StateVector::basis(2, 0)), DimensionError);
}

TEST_CASE("is_orthogonal") {
    CHECK(is_orthogonal(gates::hadamard(1, 1), 1e-12));
    CHECK_FALSE(is_orthogonal(gates::p0(1, 1), 1e-12));
    CHECK(is_orthogonal(NqaOperator::identity(3), 0.0));
}

TEST_CASE("embed places blocks on the chosen slots") {
    std::vector<size_t> slots{2, 0};
    NqaOperator e = embed(op({{"XZ", 1}}), slots, 3);
    CHECK(e == op({{"ZIX", 1}}));
    std::vector<size_t> dup{1, 1};
    CHECK_THROWS_AS(embed(op({{"XZ", 1}}), dup, 3), SlotError);
}
