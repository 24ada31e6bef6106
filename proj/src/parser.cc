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

#include "nqa/parser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <variant>

#include "nqa/errors.h"
#include "nqa/gates.h"

namespace nqa {

namespace {

enum class Tok { Number, Name, LParen, RParen, Plus, Minus, Star, Slash, Comma, Tensor, End };

struct Token {
    Tok type;
    std::string text;
    size_t pos;
};

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (is_digit(c) || (c == '.' && i + 1 < s.size() && is_digit(s[i + 1]))) {
            while (i < s.size() && is_digit(s[i])) ++i;
            if (i < s.size() && s[i] == '.') {
                ++i;
                while (i < s.size() && is_digit(s[i])) ++i;
            }
            if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
                size_t j = i + 1;
                if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
                if (j < s.size() && is_digit(s[j])) {
                    i = j;
                    while (i < s.size() && is_digit(s[i])) ++i;
                }
            }
            out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Name, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (s.substr(i, 3) == "(x)") {
            out.push_back({Tok::Tensor, "(x)", start});
            i += 3;
            continue;
        }
        Tok t;
        switch (c) {
            case '(': t = Tok::LParen; break;
            case ')': t = Tok::RParen; break;
            case '+': t = Tok::Plus; break;
            case '-': t = Tok::Minus; break;
            case '*': t = Tok::Star; break;
            case '/': t = Tok::Slash; break;
            case ',': t = Tok::Comma; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({t, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

double to_number(const Token &t) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError("bad number '" + t.text + "'", t.pos);
    }
    return v;
}

bool is_word(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return c == 'I' || c == 'X' || c == 'Z' || c == 'W';
    });
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

using Node = std::unique_ptr<Expr>;

Node make(Expr::Kind k, size_t pos) {
    return std::make_unique<Expr>(k, pos);
}

Node binary(Expr::Kind k, Node lhs, Node rhs) {
    Node n = make(k, lhs->position);
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {
    }

    Node parse_all() {
        Node e = parse_expr();
        if (peek().type != Tok::End) {
            throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        }
        return e;
    }

   private:
    const Token &peek(size_t ahead = 0) const {
        return toks_[std::min(i_ + ahead, toks_.size() - 1)];
    }
    const Token &next() {
        const Token &t = peek();
        if (i_ < toks_.size() - 1) ++i_;
        return t;
    }
    const Token &expect(Tok type, const char *what) {
        if (peek().type != type) {
            throw ParseError(std::string("expected ") + what, peek().pos);
        }
        return next();
    }
    bool at_sqrt() const {
        return peek().type == Tok::Name && iequals(peek().text, "sqrt") && peek(1).type == Tok::LParen;
    }
    bool at_scalar() const {
        return peek().type == Tok::Number || at_sqrt();
    }
    bool at_factor_start() const {
        return at_scalar() || peek().type == Tok::Name || peek().type == Tok::LParen;
    }

    Node parse_expr() {
        Node lhs;
        if (peek().type == Tok::Minus) {
            size_t pos = next().pos;
            lhs = make(Expr::Kind::Negate, pos);
            lhs->children.push_back(parse_term());
        } else {
            lhs = parse_term();
        }
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            Expr::Kind k = next().type == Tok::Plus ? Expr::Kind::Sum : Expr::Kind::Difference;
            lhs = binary(k, std::move(lhs), parse_term());
        }
        return lhs;
    }

    Node parse_term() {
        Node lhs = parse_factor();
        while (peek().type == Tok::Star) {
            next();
            lhs = binary(Expr::Kind::Product, std::move(lhs), parse_factor());
        }
        return lhs;
    }

    Node parse_factor() {
        if (at_scalar()) {
            Node s = parse_scalar();
            if (at_factor_start()) {
                Node n = make(Expr::Kind::Scaled, s->position);
                n->children.push_back(std::move(s));
                n->children.push_back(parse_factor());
                return n;
            }
            return s;
        }
        Node lhs = parse_atom();
        while (peek().type == Tok::Tensor) {
            next();
            lhs = binary(Expr::Kind::Tensor, std::move(lhs), parse_atom());
        }
        return lhs;
    }

    // sqrt "(" NUMBER ")"; returns the radicand token.
    const Token &parse_sqrt() {
        next();
        expect(Tok::LParen, "'(' after sqrt");
        const Token &n = expect(Tok::Number, "a number inside sqrt()");
        expect(Tok::RParen, "')' after the sqrt argument");
        return n;
    }

    Node parse_scalar() {
        size_t pos = peek().pos;
        Node n = make(Expr::Kind::Scalar, pos);
        if (at_sqrt()) {
            const Token &r = parse_sqrt();
            n->value = std::sqrt(to_number(r));
            n->text = "sqrt(" + r.text + ")";
            return n;
        }
        const Token &num = next();
        n->value = to_number(num);
        n->text = num.text;
        if (peek().type == Tok::Slash) {
            size_t slash = next().pos;
            double den = 0.0;
            if (at_sqrt()) {
                const Token &r = parse_sqrt();
                den = std::sqrt(to_number(r));
                n->text += "/sqrt(" + r.text + ")";
            } else if (peek().type == Tok::Number) {
                const Token &d = next();
                den = to_number(d);
                n->text += "/" + d.text;
            } else {
                throw ParseError("expected a number or sqrt() after '/'", peek().pos);
            }
            if (den == 0.0) {
                throw ParseError("division by zero", slash);
            }
            n->value /= den;
        }
        return n;
    }

    Node parse_atom() {
        const Token &t = peek();
        if (t.type == Tok::Name && peek(1).type == Tok::LParen) {
            return parse_gate();
        }
        if (t.type == Tok::Name) {
            if (!is_word(t.text)) {
                throw ParseError("'" + t.text + "' is not a word over I, X, Z, W", t.pos);
            }
            Node n = make(Expr::Kind::Word, t.pos);
            n->text = next().text;
            return n;
        }
        if (t.type == Tok::LParen) {
            size_t pos = next().pos;
            Node n = make(Expr::Kind::Paren, pos);
            n->children.push_back(parse_expr());
            expect(Tok::RParen, "')'");
            return n;
        }
        throw ParseError("expected a word, a gate call or '('", t.pos);
    }

    Node parse_gate() {
        const Token &name = next();
        Node n = make(Expr::Kind::Gate, name.pos);
        n->text = name.text;
        std::transform(n->text.begin(), n->text.end(), n->text.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        next();  // (
        if (peek().type != Tok::RParen) {
            while (true) {
                size_t first = i_;
                n->arg_value.push_back(arg_expr());
                std::string text;
                for (size_t k = first; k < i_; ++k) {
                    text += toks_[k].text;
                }
                n->arg_text.push_back(text);
                if (peek().type != Tok::Comma) break;
                next();
            }
        }
        expect(Tok::RParen, "',' or ')' in gate arguments");
        return n;
    }

    double arg_expr() {
        double v = arg_term();
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            bool plus = next().type == Tok::Plus;
            double r = arg_term();
            v = plus ? v + r : v - r;
        }
        return v;
    }

    double arg_term() {
        double v = arg_unary();
        while (peek().type == Tok::Star || peek().type == Tok::Slash) {
            const Token &op = next();
            double r = arg_unary();
            if (op.type == Tok::Slash && r == 0.0) {
                throw ParseError("division by zero", op.pos);
            }
            v = op.type == Tok::Star ? v * r : v / r;
        }
        return v;
    }

    double arg_unary() {
        if (peek().type == Tok::Minus) {
            next();
            return -arg_unary();
        }
        const Token &t = peek();
        if (t.type == Tok::Number) {
            return to_number(next());
        }
        if (t.type == Tok::Name && iequals(t.text, "pi")) {
            next();
            return std::numbers::pi;
        }
        if (t.type == Tok::Name && iequals(t.text, "sqrt") && peek(1).type == Tok::LParen) {
            next();
            next();
            double v = arg_expr();
            expect(Tok::RParen, "')'");
            if (v < 0) {
                throw ParseError("sqrt of a negative number", t.pos);
            }
            return std::sqrt(v);
        }
        if (t.type == Tok::LParen) {
            next();
            double v = arg_expr();
            expect(Tok::RParen, "')'");
            return v;
        }
        throw ParseError("expected a number, pi, sqrt() or '(' in a gate argument", t.pos);
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
};

// A bare scalar carries no slot count until it meets an operator.
using Value = std::variant<double, NqaOperator>;

NqaOperator identity_like(double c, const NqaOperator &op) {
    return scale(c, NqaOperator::identity(op.num_slots()));
}

void check_same_slots(const NqaOperator &a, const NqaOperator &b, const Expr &at) {
    if (a.num_slots() != b.num_slots()) {
        throw DimensionError("at " + std::to_string(at.position) + ": operands have " +
                             std::to_string(a.num_slots()) + " and " + std::to_string(b.num_slots()) + " slots");
    }
}

Value add_values(const Value &a, const Value &b, double sign, const Expr &at) {
    if (const double *x = std::get_if<double>(&a)) {
        if (const double *y = std::get_if<double>(&b)) {
            return *x + sign * *y;
        }
        const auto &ob = std::get<NqaOperator>(b);
        return identity_like(*x, ob) + scale(sign, ob);
    }
    const auto &oa = std::get<NqaOperator>(a);
    if (const double *y = std::get_if<double>(&b)) {
        return oa + identity_like(sign * *y, oa);
    }
    const auto &ob = std::get<NqaOperator>(b);
    check_same_slots(oa, ob, at);
    return sign > 0 ? oa + ob : oa - ob;
}

Value mul_values(const Value &a, const Value &b, const Expr &at, bool kron) {
    if (const double *x = std::get_if<double>(&a)) {
        if (const double *y = std::get_if<double>(&b)) {
            return *x * *y;
        }
        return scale(*x, std::get<NqaOperator>(b));
    }
    const auto &oa = std::get<NqaOperator>(a);
    if (const double *y = std::get_if<double>(&b)) {
        return scale(*y, oa);
    }
    const auto &ob = std::get<NqaOperator>(b);
    if (kron) {
        return tensor(oa, ob);
    }
    check_same_slots(oa, ob, at);
    return op_mul(oa, ob);
}

struct GateArity {
    std::string_view name;
    size_t params;
    size_t slots;
};

constexpr GateArity kArity[] = {
    {"H", 0, 1},       {"X", 0, 1},        {"Z", 0, 1},        {"W", 0, 1},      {"P0", 0, 1},
    {"P1", 0, 1},      {"S", 0, 1},        {"T", 0, 1},        {"RY", 1, 1},     {"ROT", 1, 1},
    {"REF", 1, 1},     {"RZ", 1, 1},       {"CZ", 0, 2},       {"CNOT", 0, 2},   {"SWAP", 0, 2},
    {"PIEVEN", 0, 2},  {"PIODD", 0, 2},    {"P00", 0, 2},      {"P01", 0, 2},    {"P10", 0, 2},
    {"P11", 0, 2},     {"ISWAP", 0, 2},    {"SQRTSWAP", 0, 2}, {"CPHASE", 1, 2}, {"CARTAN", 3, 2},
};

size_t to_slot(double v, const Expr &at) {
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e6) {
        throw SlotError("at " + std::to_string(at.position) + ": slot argument " + format_double(v) +
                        " is not a positive integer");
    }
    return static_cast<size_t>(v);
}

NqaOperator eval_gate(const Expr &e) {
    std::vector<double> params;
    std::vector<size_t> slots;
    size_t m = 0;
    if (e.text == "MCZ") {
        for (double v : e.arg_value) {
            slots.push_back(to_slot(v, e));
        }
        if (slots.empty()) {
            throw SlotError("at " + std::to_string(e.position) + ": MCZ needs at least one control");
        }
        m = *std::max_element(slots.begin(), slots.end());
    } else {
        const GateArity *arity = nullptr;
        for (const auto &a : kArity) {
            if (a.name == e.text) arity = &a;
        }
        if (!arity) {
            throw UnknownGateError("at " + std::to_string(e.position) + ": unknown gate '" + e.text + "'");
        }
        size_t n = e.arg_value.size();
        size_t need = arity->params + arity->slots;
        if (n != need && n != need + 1) {
            throw UnknownGateError("at " + std::to_string(e.position) + ": " + e.text + " takes " +
                                   std::to_string(need) + " or " + std::to_string(need + 1) + " arguments, got " +
                                   std::to_string(n));
        }
        params.assign(e.arg_value.begin(), e.arg_value.begin() + static_cast<std::ptrdiff_t>(arity->params));
        for (size_t k = arity->params; k < need; ++k) {
            slots.push_back(to_slot(e.arg_value[k], e));
        }
        m = n == need + 1 ? to_slot(e.arg_value[need], e) : *std::max_element(slots.begin(), slots.end());
    }
    gates::GateValue g = gates::make_gate(e.text, params, slots, m);
    if (auto *op = std::get_if<NqaOperator>(&g)) return *op;
    if (auto *c = std::get_if<ComplexNqaOperator>(&g)) return phi(*c);
    return expand(std::get<FactoredOperator>(g));
}

Value eval(const Expr &e) {
    switch (e.kind) {
        case Expr::Kind::Scalar:
            return e.value;
        case Expr::Kind::Word:
            return NqaOperator::from_word(NqaWord::from_literal(e.text));
        case Expr::Kind::Gate:
            return eval_gate(e);
        case Expr::Kind::Sum:
            return add_values(eval(*e.children[0]), eval(*e.children[1]), 1.0, e);
        case Expr::Kind::Difference:
            return add_values(eval(*e.children[0]), eval(*e.children[1]), -1.0, e);
        case Expr::Kind::Product:
        case Expr::Kind::Scaled:
            return mul_values(eval(*e.children[0]), eval(*e.children[1]), e, false);
        case Expr::Kind::Tensor:
            return mul_values(eval(*e.children[0]), eval(*e.children[1]), e, true);
        case Expr::Kind::Negate:
            return mul_values(-1.0, eval(*e.children[0]), e, false);
        case Expr::Kind::Paren:
            return eval(*e.children[0]);
    }
    return 0.0;
}

}  // namespace

bool operator==(const Expr &a, const Expr &b) {
    if (a.kind != b.kind || a.text != b.text || a.value != b.value || a.arg_text != b.arg_text ||
        a.arg_value != b.arg_value || a.children.size() != b.children.size()) {
        return false;
    }
    for (size_t i = 0; i < a.children.size(); ++i) {
        if (!(*a.children[i] == *b.children[i])) return false;
    }
    return true;
}

std::unique_ptr<Expr> parse(std::string_view text) {
    return Parser(text).parse_all();
}

std::string print(const Expr &e) {
    switch (e.kind) {
        case Expr::Kind::Scalar:
        case Expr::Kind::Word:
            return e.text;
        case Expr::Kind::Gate: {
            std::string out = e.text + "(";
            for (size_t i = 0; i < e.arg_text.size(); ++i) {
                out += (i ? ", " : "") + e.arg_text[i];
            }
            return out + ")";
        }
        case Expr::Kind::Sum:
            return print(*e.children[0]) + " + " + print(*e.children[1]);
        case Expr::Kind::Difference:
            return print(*e.children[0]) + " - " + print(*e.children[1]);
        case Expr::Kind::Product:
            return print(*e.children[0]) + "*" + print(*e.children[1]);
        case Expr::Kind::Tensor:
            return print(*e.children[0]) + " (x) " + print(*e.children[1]);
        case Expr::Kind::Scaled:
            return print(*e.children[0]) + " " + print(*e.children[1]);
        case Expr::Kind::Negate:
            return "-" + print(*e.children[0]);
        case Expr::Kind::Paren:
            return "(" + print(*e.children[0]) + ")";
    }
    return {};
}

NqaOperator evaluate(const Expr &e) {
    Value v = eval(e);
    if (auto *op = std::get_if<NqaOperator>(&v)) {
        return *op;
    }
    throw DimensionError("expression has no word or gate to fix the slot count");
}

NqaOperator evaluate(std::string_view text) {
    return evaluate(*parse(text));
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::string print_operator(const NqaOperator &op) {
    if (op.is_zero()) {
        return "0*" + NqaWord(op.num_slots()).literal();
    }
    std::string out;
    bool first = true;
    for (const auto &[word, c] : op.sorted_terms()) {
        if (first) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        double mag = std::abs(c);
        if (mag != 1.0) {
            out += format_double(mag) + "*";
        }
        out += word.literal();
    }
    return out;
}

}  // namespace nqa
