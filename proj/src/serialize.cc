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

#include "nqa/serialize.h"

#include <optional>

#include <json.hpp>

#include "nqa/errors.h"

namespace nqa {

// Keeps "word" ahead of "coefficient" in every record.
using json = nlohmann::ordered_json;

std::string operator_to_json(const NqaOperator &op, int indent) {
    json out = json::array();
    for (const auto &[word, c] : op.sorted_terms()) {
        out.push_back({{"word", word.literal()}, {"coefficient", c}});
    }
    return out.dump(indent);
}

NqaOperator operator_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!j.is_array()) {
        throw ParseError("expected an array of terms", 0);
    }
    if (j.empty()) {
        throw DimensionError("an empty term list has no slot count");
    }
    std::optional<NqaOperator> op;
    for (const auto &term : j) {
        if (!term.is_object() || !term.contains("word") || !term.contains("coefficient") ||
            !term["word"].is_string() || !term["coefficient"].is_number()) {
            throw ParseError("term needs a string 'word' and a numeric 'coefficient'", 0);
        }
        const std::string lit = term["word"].get<std::string>();
        if (lit.empty() || lit.find_first_not_of("IXZW") != std::string::npos) {
            throw ParseError("not a block word: '" + lit + "'", 0);
        }
        NqaWord w = NqaWord::from_literal(lit);
        if (!op) {
            op.emplace(w.num_slots());
        }
        if (w.num_slots() != op->num_slots()) {
            throw DimensionError("terms mix " + std::to_string(op->num_slots()) + " and " +
                                 std::to_string(w.num_slots()) + " slots");
        }
        op->add_term(w, term["coefficient"].get<double>());
    }
    return *op;
}

DenseMatrix matrix_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        throw ParseError("expected an array of rows", 0);
    }
    size_t rows = j.size();
    size_t cols = j[0].size();
    DenseMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw ShapeError("row " + std::to_string(r) + " has a different length");
        }
        for (size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_number()) {
                throw ParseError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is not a number", 0);
            }
            m(r, c) = j[r][c].get<double>();
        }
    }
    return m;
}

std::string matrix_to_json(const DenseMatrix &m) {
    json out = json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        out.push_back(row);
    }
    return out.dump();
}

}  // namespace nqa
