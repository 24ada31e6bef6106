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

#include <cstddef>

#include "nqa/operator.h"

namespace nqa {

/// U = A + iB with A, B real operators on the same m slots.
struct ComplexNqaOperator {
    NqaOperator re;
    NqaOperator im;

    explicit ComplexNqaOperator(size_t num_slots) : re(num_slots), im(num_slots) {
    }
    ComplexNqaOperator(NqaOperator re, NqaOperator im);
    /// A real operator viewed as complex (B = 0).
    static ComplexNqaOperator real(NqaOperator re);
    static ComplexNqaOperator identity(size_t num_slots);

    size_t num_slots() const {
        return re.num_slots();
    }
    bool is_real() const {
        return im.is_zero();
    }
    bool operator==(const ComplexNqaOperator &) const = default;
};

/// Phi(A + iB) = A (x) I + B (x) W. The phase lane is the last slot.
NqaOperator phi(const ComplexNqaOperator &u);

ComplexNqaOperator complex_add(const ComplexNqaOperator &u, const ComplexNqaOperator &v);
ComplexNqaOperator complex_scale(double c, const ComplexNqaOperator &u);
/// (A + iB)(C + iD) = (AC - BD) + i(AD + BC).
ComplexNqaOperator complex_mul(const ComplexNqaOperator &u, const ComplexNqaOperator &v);
/// (A + iB)^dagger = A^T - i B^T.
ComplexNqaOperator complex_dagger(const ComplexNqaOperator &u);
/// Kronecker product of complex operators (no phase lane yet).
ComplexNqaOperator complex_tensor(const ComplexNqaOperator &u, const ComplexNqaOperator &v);
/// Places a complex operator on the given 0-based slots of an m-slot register.
ComplexNqaOperator embed(const ComplexNqaOperator &u, std::span<const size_t> slots, size_t num_slots);

}  // namespace nqa
