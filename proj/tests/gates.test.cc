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
#include <fstream>
#include <numbers>
#include <string>

#include "nqa/errors.h"
#include "nqa/gates.h"
#include "nqa/parser.h"
#include "oracle.h"

using namespace nqa;

namespace {

const double kR = std::numbers::sqrt2 / 2;

NqaOperator op(std::initializer_list<std::pair<std::string_view, double>> t) {
    return NqaOperator::from_terms(t);
}

double coefficient_gap(const NqaOperator &a, const NqaOperator &b) {
    double worst = 0.0;
    for (const auto &[w, c] : (a - b).terms()) worst = std::max(worst, std::abs(c));
    return worst;
}

// Index bits: slot 1 is the most significant.
size_t bit(size_t x, size_t slot, size_t m) {
    return (x >> (m - slot)) & 1;
}

}  // namespace

TEST_CASE("single-slot gates") {
    CHECK(gates::hadamard(1, 1) == op({{"X", kR}, {"Z", kR}}));
    double th = 0.7;
    CHECK(gates::ry(th, 1, 1) == op({{"I", std::cos(th / 2)}, {"W", std::sin(th / 2)}}));
    CHECK(gates::ref(th, 1, 1) == op({{"Z", std::cos(2 * th)}, {"X", std::sin(2 * th)}}));
    CHECK(gates::p0(2, 3) + gates::p1(2, 3) == NqaOperator::identity(3));
    CHECK(gates::pauli_x(3, 3) == op({{"IIX", 1}}));
    CHECK(gates::block_w(1, 2) == op({{"WI", 1}}));
    CHECK_THROWS_AS(gates::hadamard(0, 2), SlotError);
    CHECK_THROWS_AS(gates::hadamard(3, 2), SlotError);

    DenseMatrix h(2, 2, {kR, kR, kR, -kR});
    CHECK(max_norm_diff(to_dense(gates::hadamard(1, 1)), h) <= 1e-15);
    // Ref(phi) reflects across the axis at angle phi.
    DenseMatrix refm(2, 2, {std::cos(2 * th), std::sin(2 * th), std::sin(2 * th), -std::cos(2 * th)});
    CHECK(max_norm_diff(to_dense(gates::ref(th, 1, 1)), refm) <= 1e-15);
}

TEST_CASE("two-slot gates against truth tables") {
    CHECK(to_dense(gates::cz(1, 2, 2)) == oracle::diag({1, 1, 1, -1}));
    CHECK(to_dense(gates::cnot(1, 2, 2)) == oracle::permutation(4, [](size_t x) { return x >> 1 ? x ^ 1 : x; }));
    CHECK(to_dense(gates::cnot(2, 1, 2)) == oracle::permutation(4, [](size_t x) { return x & 1 ? x ^ 2 : x; }));
    CHECK(to_dense(gates::swap(1, 2, 2)) ==
          oracle::permutation(4, [](size_t x) { return ((x & 1) << 1) | (x >> 1); }));
    CHECK(to_dense(gates::parity_even(1, 2, 2)) == oracle::diag({1, 0, 0, 1}));
    CHECK(to_dense(gates::parity_odd(1, 2, 2)) == oracle::diag({0, 1, 1, 0}));
    CHECK(gates::parity_even(1, 2, 2) + gates::parity_odd(1, 2, 2) == NqaOperator::identity(2));
    for (size_t b = 0; b < 4; ++b) {
        std::vector<double> d(4, 0.0);
        d[b] = 1.0;
        CHECK(to_dense(gates::basis_projector(b >> 1, b & 1, 1, 2, 2)) == oracle::diag(d));
    }
    CHECK_THROWS_AS(gates::cz(1, 1, 2), SlotError);
}

TEST_CASE("two-slot gates on wider registers") {
    const size_t m = 4;
    size_t n = size_t{1} << m;
    // CNOT with control 4, target 2.
    DenseMatrix want = oracle::permutation(n, [&](size_t x) { return bit(x, 4, m) ? x ^ (size_t{1} << (m - 2)) : x; });
    CHECK(to_dense(gates::cnot(4, 2, m)) == want);
    // SWAP of slots 1 and 3.
    DenseMatrix sw = oracle::permutation(n, [&](size_t x) {
        size_t a = bit(x, 1, m), b = bit(x, 3, m);
        size_t y = x & ~((size_t{1} << (m - 1)) | (size_t{1} << (m - 3)));
        return y | (b << (m - 1)) | (a << (m - 3));
    });
    CHECK(to_dense(gates::swap(1, 3, m)) == sw);
}

TEST_CASE("lookup table file") {
    std::ifstream in(std::string(NQA_TEST_DATA_DIR) + "/gates_table.txt");
    REQUIRE(in);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find(" = ");
        REQUIRE(eq != std::string::npos);
        NqaOperator lhs = evaluate(line.substr(0, eq));
        NqaOperator rhs = evaluate(line.substr(eq + 3));
        INFO(line);
        CHECK(lhs.num_slots() == rhs.num_slots());
        CHECK(coefficient_gap(lhs, rhs) <= 1e-15);
        ++rows;
    }
    CHECK(rows == 22);
}

TEST_CASE("mcz") {
    std::vector<size_t> one{1};
    FactoredOperator z = gates::mcz(one, 1);
    CHECK(expand(z) == op({{"Z", 1}}));
    std::vector<size_t> two{1, 2};
    CHECK(to_dense(gates::mcz(two, 2)) == oracle::diag({1, 1, 1, -1}));
    CHECK(expand(gates::mcz(two, 2)) == gates::cz(1, 2, 2));
    std::vector<size_t> three{1, 2, 3};
    CHECK(to_dense(gates::mcz(three, 3)) == oracle::diag({1, 1, 1, 1, 1, 1, 1, -1}));
    // Never expanded on construction.
    CHECK(gates::mcz(three, 3).factors().size() == 1);
    CHECK(std::holds_alternative<ProjectorReflection>(gates::mcz(three, 3).factors()[0]));
    std::vector<size_t> none;
    CHECK_THROWS_AS(gates::mcz(none, 2), SlotError);
    std::vector<size_t> bad{3};
    CHECK_THROWS_AS(gates::mcz(bad, 2), SlotError);
}

TEST_CASE("mcz expansion size and diagonal, m <= 5") {
    for (size_t m = 1; m <= 5; ++m) {
        for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
            std::vector<size_t> c;
            for (size_t k = 1; k <= m; ++k) {
                if (mask >> (m - k) & 1) c.push_back(k);
            }
            FactoredOperator f = gates::mcz(c, m);
            DenseMatrix d = to_dense(f);
            for (size_t x = 0; x < (size_t{1} << m); ++x) {
                double want = (x & mask) == mask ? -1.0 : 1.0;
                REQUIRE(d(x, x) == want);
            }
            size_t terms = expand(f).num_terms();
            // For a single control I - 2 P1 = Z: the identity term cancels.
            REQUIRE(terms == (c.size() == 1 ? 1 : size_t{1} << c.size()));
        }
    }
}

TEST_CASE("lifted gates") {
    CHECK(gates::lifted_sqrt_swap() == op({{"III", 0.75},
                                           {"XXI", 0.25},
                                           {"ZZI", 0.25},
                                           {"WWI", -0.25},
                                           {"IIW", 0.25},
                                           {"XXW", -0.25},
                                           {"ZZW", -0.25},
                                           {"WWW", 0.25}}));
    CHECK(gates::lifted_cphase(0.0) == NqaOperator::identity(3));
    double phi_ = 0.9;
    NqaOperator cp = gates::lifted_cphase(phi_);
    double a = (std::cos(phi_) - 1) / 4, b = std::sin(phi_) / 4;
    NqaOperator want = NqaOperator::identity(3) + a * op({{"III", 1}, {"IZI", -1}, {"ZII", -1}, {"ZZI", 1}}) +
                       b * op({{"IIW", 1}, {"IZW", -1}, {"ZIW", -1}, {"ZZW", 1}});
    CHECK(coefficient_gap(cp, want) < 1e-15);
    double th = 1.3;
    CHECK(gates::lifted_rz(th) == op({{"III", std::cos(th / 2)}, {"ZIW", -std::sin(th / 2)}}));

    // Reference: cphase as a complex diagonal.
    std::vector<std::complex<double>> u(16);
    for (size_t i = 0; i < 4; ++i) u[i * 4 + i] = 1.0;
    u[15] = std::polar(1.0, phi_);
    CHECK(max_norm_diff(to_dense(cp), oracle::realify(u, 4)) < 1e-15);
}

TEST_CASE("Cartan factors follow the tabulated block forms") {
    double tx = 0.3, ty = -0.8, tz = 1.7;
    FactoredOperator f = gates::lifted_cartan(tx, ty, tz);
    REQUIRE(f.factors().size() == 3);
    CHECK(std::get<NqaOperator>(f.factors()[0]) == op({{"III", std::cos(tx)}, {"XXW", std::sin(tx)}}));
    CHECK(std::get<NqaOperator>(f.factors()[1]) == op({{"III", std::cos(ty)}, {"WWW", -std::sin(ty)}}));
    CHECK(std::get<NqaOperator>(f.factors()[2]) == op({{"III", std::cos(tz)}, {"ZZW", std::sin(tz)}}));

    // Each factor is cos t + i sin t P, i.e. exp(+i t P); with YY = -WW the
    // lifted generator of the product is tx XXW - ty WWW + tz ZZW.
    DenseMatrix gen = tx * oracle::word("XXW") - ty * oracle::word("WWW") + tz * oracle::word("ZZW");
    CHECK(max_norm_diff(to_dense(f), oracle::expm(gen)) < 1e-12);
    CHECK(is_orthogonal(expand(f), 1e-12));
}

TEST_CASE("Bell transform") {
    NqaOperator bell = gates::bell_transform();
    auto v = mat_vec(to_dense(bell), StateVector::basis(2, 0).amplitudes);
    CHECK(std::abs(v[0] - kR) < 1e-15);
    CHECK(std::abs(v[3] - kR) < 1e-15);
    CHECK(std::abs(v[1]) < 1e-15);
    CHECK(std::abs(v[2]) < 1e-15);
    CHECK(is_orthogonal(bell, 1e-12));
    DenseMatrix cnot = oracle::permutation(4, [](size_t x) { return x >> 1 ? x ^ 1 : x; });
    DenseMatrix hi = nqa::kron(DenseMatrix(2, 2, {kR, kR, kR, -kR}), DenseMatrix::identity(2));
    CHECK(max_norm_diff(to_dense(bell), mat_mul(cnot, hi)) < 1e-15);
}

TEST_CASE("real exponential") {
    NqaOperator iw = op({{"IW", 1}});
    CHECK(coefficient_gap(gates::real_exponential(iw, std::numbers::pi / 2), iw) < 1e-15);
    NqaOperator ww = op({{"WW", 1}});
    double p = 0.4;
    CHECK(coefficient_gap(gates::real_exponential(ww, p), op({{"II", std::cosh(p)}, {"WW", std::sinh(p)}})) < 1e-15);
    CHECK(gates::real_exponential(iw, 0.0) == NqaOperator::identity(2));
    CHECK(max_norm_diff(to_dense(gates::real_exponential(iw, 0.8)), oracle::expm(0.8 * oracle::word("IW"))) < 1e-12);
    CHECK_THROWS_AS(gates::real_exponential(op({{"IW", 1}, {"XI", 1}}), 1.0), NotExponentiableError);
}

TEST_CASE("unitary constructors are orthogonal") {
    for (const auto &g : {gates::hadamard(2, 3), gates::cz(1, 3, 3), gates::cnot(3, 1, 3), gates::swap(2, 3, 3),
                          gates::ry(0.2, 1, 2), gates::rot(1.0, 2, 2), gates::ref(0.3, 1, 1)}) {
        CHECK(is_orthogonal(g, 1e-12));
    }
    for (const auto &g : {gates::lifted_iswap(), gates::lifted_sqrt_swap(), gates::lifted_cphase(0.3),
                          gates::lifted_rz(2.0)}) {
        CHECK(is_orthogonal(g, 1e-12));
    }
}

TEST_CASE("lookup by name") {
    std::vector<double> none;
    std::vector<size_t> s12{1, 2};
    CHECK(std::get<NqaOperator>(gates::make_gate("cnot", none, s12, 2)) == gates::cnot(1, 2, 2));
    std::vector<double> ang{0.5};
    std::vector<size_t> s1{1};
    CHECK(std::holds_alternative<ComplexNqaOperator>(gates::make_gate("Rz", ang, s1, 1)));
    CHECK(std::holds_alternative<FactoredOperator>(gates::make_gate("MCZ", none, s12, 2)));
    CHECK_THROWS_AS(gates::make_gate("FOO", none, s1, 1), UnknownGateError);
    CHECK_THROWS_AS(gates::make_gate("H", none, s12, 2), UnknownGateError);
    CHECK_THROWS_AS(gates::make_gate("RY", none, s1, 1), UnknownGateError);
    CHECK(gates::gate_names().size() == 26);
}
