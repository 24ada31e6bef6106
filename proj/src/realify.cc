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

#include "nqa/realify.h"

#include "nqa/errors.h"

namespace nqa {

namespace {

void check_same_slots(const ComplexNqaOperator &u, const ComplexNqaOperator &v, const char *op) {
    if (u.num_slots() != v.num_slots()) {
        throw DimensionError(std::string(op) + ": slot count mismatch");
    }
}

}  // namespace

ComplexNqaOperator::ComplexNqaOperator(NqaOperator re_part, NqaOperator im_part)
    : re(std::move(re_part)), im(std::move(im_part)) {
    if (re.num_slots() != im.num_slots()) {
        throw DimensionError("ComplexNqaOperator: real and imaginary parts have different slot counts");
    }
}

ComplexNqaOperator ComplexNqaOperator::real(NqaOperator re) {
    size_t m = re.num_slots();
    return ComplexNqaOperator(std::move(re), NqaOperator(m));
}

ComplexNqaOperator ComplexNqaOperator::identity(size_t num_slots) {
    return real(NqaOperator::identity(num_slots));
}

NqaOperator phi(const ComplexNqaOperator &u) {
    NqaOperator lane_i = NqaOperator::from_terms({{"I", 1.0}});
    NqaOperator lane_w = NqaOperator::from_terms({{"W", 1.0}});
    return tensor(u.re, lane_i) + tensor(u.im, lane_w);
}

ComplexNqaOperator complex_add(const ComplexNqaOperator &u, const ComplexNqaOperator &v) {
    check_same_slots(u, v, "complex_add");
    return {u.re + v.re, u.im + v.im};
}

ComplexNqaOperator complex_scale(double c, const ComplexNqaOperator &u) {
    return {scale(c, u.re), scale(c, u.im)};
}

ComplexNqaOperator complex_mul(const ComplexNqaOperator &u, const ComplexNqaOperator &v) {
    check_same_slots(u, v, "complex_mul");
    return {op_mul(u.re, v.re) - op_mul(u.im, v.im), op_mul(u.re, v.im) + op_mul(u.im, v.re)};
}

ComplexNqaOperator complex_dagger(const ComplexNqaOperator &u) {
    return {transpose(u.re), scale(-1.0, transpose(u.im))};
}

ComplexNqaOperator complex_tensor(const ComplexNqaOperator &u, const ComplexNqaOperator &v) {
    return {tensor(u.re, v.re) - tensor(u.im, v.im), tensor(u.re, v.im) + tensor(u.im, v.re)};
}

ComplexNqaOperator embed(const ComplexNqaOperator &u, std::span<const size_t> slots, size_t num_slots) {
    return {embed(u.re, slots, num_slots), embed(u.im, slots, num_slots)};
}

}  // namespace nqa
