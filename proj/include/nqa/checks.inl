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

#include <cmath>
#include <random>

namespace nqa::checks {

template <class Rng>
NqaOperator random_operator(size_t num_slots, size_t terms, Rng &rng) {
    std::uniform_int_distribution<int> block(0, 3);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    NqaOperator out(num_slots);
    for (size_t t = 0; t < terms; ++t) {
        NqaWord w(num_slots);
        for (size_t k = 0; k < num_slots; ++k) {
            w.set_block(k, static_cast<Block>(block(rng)));
        }
        out.add_term(w, coef(rng));
    }
    return out;
}

template <class Rng>
DenseMatrix random_orthogonal(size_t n, Rng &rng) {
    std::normal_distribution<double> gauss;
    DenseMatrix q = DenseMatrix::identity(n);
    std::vector<double> v(n);
    for (size_t k = 0; k < n; ++k) {
        double norm2 = 0.0;
        for (double &x : v) {
            x = gauss(rng);
            norm2 += x * x;
        }
        double inv = 1.0 / std::sqrt(norm2);
        for (double &x : v) {
            x *= inv;
        }
        // q <- q (I - 2 v v^T)
        for (size_t r = 0; r < n; ++r) {
            double dot = 0.0;
            for (size_t c = 0; c < n; ++c) {
                dot += q(r, c) * v[c];
            }
            for (size_t c = 0; c < n; ++c) {
                q(r, c) -= 2.0 * dot * v[c];
            }
        }
    }
    return q;
}

}  // namespace nqa::checks
