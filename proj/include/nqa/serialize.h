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

#include <string>
#include <string_view>

#include "nqa/linalg.h"
#include "nqa/operator.h"

namespace nqa {

/// [{"word": "II", "coefficient": 0.5}, ...], sorted by word literal.
std::string operator_to_json(const NqaOperator &op, int indent = -1);
/// Inverse of operator_to_json. Throws ParseError on malformed input and
/// DimensionError when the words disagree on m (or the array is empty).
NqaOperator operator_from_json(std::string_view text);

/// A row-major JSON array of arrays of numbers.
DenseMatrix matrix_from_json(std::string_view text);
std::string matrix_to_json(const DenseMatrix &m);

}  // namespace nqa
