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
#include <stdexcept>
#include <string>

namespace nqa {

/// Operands disagree on their slot count, or a matrix/vector has the wrong size.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A dense conversion was requested above the configured slot cap.
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

/// Matrix input is not 2^m x 2^m.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A graded bracket received an argument that is not homogeneous.
struct HomogeneityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Slot index outside 1..m, repeated slots, or a bad generator index.
struct SlotError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Input outside the mathematical domain of an operation (non-symmetric,
/// non-orthogonal, non-unit vector, entries that are not +-1, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An iterative routine failed to converge.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// real_exponential was given a generator whose square is not +-identity.
struct NotExponentiableError : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnknownGateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Syntax error in the operator expression language. `position` is a 0-based
/// byte offset into the source text.
struct ParseError : std::invalid_argument {
    ParseError(const std::string &msg, size_t position)
        : std::invalid_argument("at " + std::to_string(position) + ": " + msg), position(position) {
    }
    size_t position;
};

}  // namespace nqa
