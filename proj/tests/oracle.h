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

// Dense reference constructions for the tests. Nothing here goes through the
// block expansion: words are built from the textbook 2x2 matrices, gates
// from their truth tables.

#include <cmath>
#include <complex>
#include <string_view>
#include <vector>

#include "nqa/linalg.h"

namespace oracle {

using nqa::DenseMatrix;

inline DenseMatrix block(char c) {
    switch (c) {
        case 'I': return DenseMatrix(2, 2, {1, 0, 0, 1});
        case 'X': return DenseMatrix(2, 2, {0, 1, 1, 0});
        case 'Z': return DenseMatrix(2, 2, {1, 0, 0, -1});
        case 'W': return DenseMatrix(2, 2, {0, -1, 1, 0});
    }
    throw std::invalid_argument("bad block");
}

inline DenseMatrix word(std::string_view literal) {
    DenseMatrix out(1, 1, {1.0});
    for (char c : literal) {
        out = nqa::kron(out, block(c));
    }
    return out;
}

/// Permutation matrix with out(f(x), x) = 1.
template <class F>
DenseMatrix permutation(size_t n, F f) {
    DenseMatrix out(n, n);
    for (size_t x = 0; x < n; ++x) {
        out(f(x), x) = 1.0;
    }
    return out;
}

inline DenseMatrix diag(std::vector<double> d) {
    return DenseMatrix::diagonal(d);
}

/// Real 2n x 2n form [[A, -B], [B, A]] of a complex matrix, reordered so
/// that the phase bit is the least significant index bit.
inline DenseMatrix realify(const std::vector<std::complex<double>> &u, size_t n) {
    DenseMatrix out(2 * n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
            double a = u[r * n + c].real();
            double b = u[r * n + c].imag();
            out(2 * r, 2 * c) = a;
            out(2 * r, 2 * c + 1) = -b;
            out(2 * r + 1, 2 * c) = b;
            out(2 * r + 1, 2 * c + 1) = a;
        }
    }
    return out;
}

/// exp(A) by a Taylor series with scaling and squaring.
inline DenseMatrix expm(const DenseMatrix &a) {
    double norm = nqa::max_abs(a) * static_cast<double>(a.rows());
    int squarings = 0;
    while (norm > 0.5) {
        norm /= 2;
        ++squarings;
    }
    DenseMatrix s = std::ldexp(1.0, -squarings) * a;
    DenseMatrix term = DenseMatrix::identity(a.rows());
    DenseMatrix sum = term;
    for (int k = 1; k < 30; ++k) {
        term = (1.0 / k) * nqa::mat_mul(term, s);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) {
        sum = nqa::mat_mul(sum, sum);
    }
    return sum;
}

/// sin^2((2t + 1) theta) with sin(theta) = 2^{-m/2}.
inline double grover_success(size_t m, size_t t) {
    double theta = std::asin(std::pow(2.0, -0.5 * static_cast<double>(m)));
    double s = std::sin((2.0 * static_cast<double>(t) + 1.0) * theta);
    return s * s;
}

}  // namespace oracle
