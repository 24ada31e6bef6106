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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nqa/operator.h"

/// Text expressions for block operators.
///
///   expr   := ["-"] term (("+" | "-") term)*
///   term   := factor ("*" factor)*              matrix product
///   factor := scalar [factor] | atom ("(x)" atom)*
///   atom   := WORD | NAME "(" args ")" | "(" expr ")"
///   scalar := NUMBER ["/" (NUMBER | "sqrt(" NUMBER ")")] | "sqrt(" NUMBER ")"
///   WORD   := [IXZW]+
///
/// A bare scalar c stands for c times the identity on whatever slot count the
/// surrounding expression has. Gate arguments list angle parameters first,
/// then 1-based slots, then an optional register size (default: the largest
/// slot). Angle arguments may use numbers, pi, sqrt(), + - * / and
/// parentheses. MCZ takes only controls. Gates with a complex phase evaluate
/// to their realification, one slot wider.
namespace nqa {

struct Expr {
    enum class Kind { Scalar, Word, Gate, Sum, Difference, Product, Tensor, Scaled, Negate, Paren };

    Kind kind;
    size_t position = 0;
    /// Scalar: canonical source text. Word: the literal. Gate: upper-case name.
    std::string text;
    double value = 0.0;  ///< Scalar only.
    /// Gate only: argument source text (whitespace removed) and value.
    std::vector<std::string> arg_text;
    std::vector<double> arg_value;
    std::vector<std::unique_ptr<Expr>> children;

    Expr(Kind kind, size_t position) : kind(kind), position(position) {
    }
};

bool operator==(const Expr &a, const Expr &b);

/// Throws ParseError with the byte offset of the problem.
std::unique_ptr<Expr> parse(std::string_view text);

/// Canonical text of an expression; parsing it gives back an equal tree.
std::string print(const Expr &e);

/// Throws DimensionError on slot-count mismatches, UnknownGateError for
/// unknown gates or bad arities, and SlotError for bad slots.
NqaOperator evaluate(const Expr &e);
NqaOperator evaluate(std::string_view text);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

/// Terms sorted by literal, e.g. "0.5*II + 0.5*IZ + 0.5*ZI - 0.5*ZZ". Unit
/// coefficients are left off; the zero operator prints as "0*I...I".
std::string print_operator(const NqaOperator &op);

}  // namespace nqa
