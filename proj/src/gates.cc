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

#include "nqa/gates.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "nqa/errors.h"

namespace nqa::gates {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

size_t checked_slot(size_t slot, size_t num_slots) {
    if (slot < 1 || slot > num_slots) {
        throw SlotError("slot " + std::to_string(slot) + " outside 1.." + std::to_string(num_slots));
    }
    return slot - 1;
}

// One-slot table placed at slot k.
NqaOperator on_slot(const NqaOperator &one, size_t slot, size_t num_slots) {
    std::array<size_t, 1> s{checked_slot(slot, num_slots)};
    return embed(one, s, num_slots);
}

// Two-slot table placed on (p, q); slot 1 of the table goes to p.
NqaOperator on_pair(const NqaOperator &two, size_t p, size_t q, size_t num_slots) {
    std::array<size_t, 2> s{checked_slot(p, num_slots), checked_slot(q, num_slots)};
    if (s[0] == s[1]) {
        throw SlotError("two-qubit gate needs distinct slots, got " + std::to_string(p) + " twice");
    }
    return embed(two, s, num_slots);
}

ComplexNqaOperator on_pair(const ComplexNqaOperator &two, size_t p, size_t q, size_t num_slots) {
    return {on_pair(two.re, p, q, num_slots), on_pair(two.im, p, q, num_slots)};
}

ComplexNqaOperator phase_rotation(double half_angle, size_t slot, size_t num_slots) {
    NqaOperator re = on_slot(NqaOperator::from_terms({{"I", std::cos(half_angle)}}), slot, num_slots);
    NqaOperator im = on_slot(NqaOperator::from_terms({{"Z", -std::sin(half_angle)}}), slot, num_slots);
    return {re, im};
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

void expect_counts(std::string_view name, std::span<const double> params, size_t n_params,
                   std::span<const size_t> slots, size_t n_slots) {
    if (params.size() != n_params) {
        throw UnknownGateError(std::string(name) + " takes " + std::to_string(n_params) + " angle parameter(s), got " +
                               std::to_string(params.size()));
    }
    if (slots.size() != n_slots) {
        throw UnknownGateError(std::string(name) + " acts on " + std::to_string(n_slots) + " slot(s), got " +
                               std::to_string(slots.size()));
    }
}

constexpr std::array<std::string_view, 26> kGateNames = {
    "H",   "X",   "Z",   "W",     "P0",       "P1",     "RY",     "ROT",  "REF", "S",   "T",   "RZ",    "CZ",
    "CNOT", "SWAP", "PIEVEN", "PIODD", "P00", "P01", "P10", "P11", "ISWAP", "SQRTSWAP", "CPHASE", "CARTAN", "MCZ",
};

}  // namespace

NqaOperator hadamard(size_t slot, size_t num_slots) {
    return on_slot(NqaOperator::from_terms({{"X", kInvSqrt2}, {"Z", kInvSqrt2}}), slot, num_slots);
}

NqaOperator pauli_x(size_t slot, size_t num_slots) {
    return on_slot(NqaOperator::from_terms({{"X", 1.0}}), slot, num_slots);
}

NqaOperator pauli_z(size_t slot, size_t num_slots) {
    return on_slot(NqaOperator::from_terms({{"Z", 1.0}}), slot, num_slots);
}

NqaOperator block_w(size_t slot, size_t num_slots) {
    return on_slot(NqaOperator::from_terms({{"W", 1.0}}), slot, num_slots);
}

NqaOperator ry(double theta, size_t slot, size_t num_slots) {
    return rot(theta / 2.0, slot, num_slots);
}

NqaOperator rot(double phi, size_t slot, size_t num_slots) {
    return on_slot(NqaOperator::from_terms({{"I", std::cos(phi)}, {"W", std::sin(phi)}}), slot, num_slots);
}

NqaOperator ref(double phi, size_t slot, size_t num_slots) {
    return on_slot(NqaOperator::from_terms({{"Z", std::cos(2.0 * phi)}, {"X", std::sin(2.0 * phi)}}), slot,
                   num_slots);
}

NqaOperator p0(size_t slot, size_t num_slots) {
    return on_slot(NqaOperator::from_terms({{"I", 0.5}, {"Z", 0.5}}), slot, num_slots);
}

NqaOperator p1(size_t slot, size_t num_slots) {
    return on_slot(NqaOperator::from_terms({{"I", 0.5}, {"Z", -0.5}}), slot, num_slots);
}

ComplexNqaOperator s_gate(size_t slot, size_t num_slots) {
    // cos(pi/4) and sin(pi/4) round differently; use the shared constant.
    NqaOperator re = on_slot(NqaOperator::from_terms({{"I", kInvSqrt2}}), slot, num_slots);
    NqaOperator im = on_slot(NqaOperator::from_terms({{"Z", -kInvSqrt2}}), slot, num_slots);
    return {re, im};
}

ComplexNqaOperator t_gate(size_t slot, size_t num_slots) {
    return phase_rotation(std::numbers::pi / 8.0, slot, num_slots);
}

ComplexNqaOperator rz(double theta, size_t slot, size_t num_slots) {
    return phase_rotation(theta / 2.0, slot, num_slots);
}

NqaOperator cz(size_t p, size_t q, size_t num_slots) {
    return on_pair(NqaOperator::from_terms({{"II", 0.5}, {"IZ", 0.5}, {"ZI", 0.5}, {"ZZ", -0.5}}), p, q, num_slots);
}

NqaOperator cnot(size_t control, size_t target, size_t num_slots) {
    return on_pair(NqaOperator::from_terms({{"II", 0.5}, {"ZI", 0.5}, {"IX", 0.5}, {"ZX", -0.5}}), control, target,
                   num_slots);
}

NqaOperator swap(size_t p, size_t q, size_t num_slots) {
    return on_pair(NqaOperator::from_terms({{"II", 0.5}, {"XX", 0.5}, {"WW", -0.5}, {"ZZ", 0.5}}), p, q, num_slots);
}

NqaOperator parity_even(size_t p, size_t q, size_t num_slots) {
    return on_pair(NqaOperator::from_terms({{"II", 0.5}, {"ZZ", 0.5}}), p, q, num_slots);
}

NqaOperator parity_odd(size_t p, size_t q, size_t num_slots) {
    return on_pair(NqaOperator::from_terms({{"II", 0.5}, {"ZZ", -0.5}}), p, q, num_slots);
}

NqaOperator basis_projector(bool bit_p, bool bit_q, size_t p, size_t q, size_t num_slots) {
    double sp = bit_p ? -0.25 : 0.25;
    double sq = bit_q ? -0.25 : 0.25;
    double spq = (bit_p != bit_q) ? -0.25 : 0.25;
    return on_pair(NqaOperator::from_terms({{"II", 0.25}, {"IZ", sq}, {"ZI", sp}, {"ZZ", spq}}), p, q, num_slots);
}

FactoredOperator mcz(std::span<const size_t> controls, size_t num_slots) {
    if (controls.empty()) {
        throw SlotError("mcz: the control set is empty");
    }
    std::vector<std::pair<size_t, LocalProjector>> proj;
    for (size_t k : controls) {
        proj.emplace_back(checked_slot(k, num_slots), LocalProjector::P1);
    }
    FactoredOperator out(num_slots);
    out.push_back(ProjectorReflection(num_slots, std::move(proj)));
    return out;
}

ComplexNqaOperator iswap(size_t p, size_t q, size_t num_slots) {
    ComplexNqaOperator two(NqaOperator::from_terms({{"II", 0.5}, {"ZZ", 0.5}}),
                           NqaOperator::from_terms({{"XX", 0.5}, {"WW", -0.5}}));
    return on_pair(two, p, q, num_slots);
}

ComplexNqaOperator sqrt_swap(size_t p, size_t q, size_t num_slots) {
    ComplexNqaOperator two(NqaOperator::from_terms({{"II", 0.75}, {"XX", 0.25}, {"ZZ", 0.25}, {"WW", -0.25}}),
                           NqaOperator::from_terms({{"II", 0.25}, {"XX", -0.25}, {"ZZ", -0.25}, {"WW", 0.25}}));
    return on_pair(two, p, q, num_slots);
}

ComplexNqaOperator cphase(double phi, size_t p, size_t q, size_t num_slots) {
    NqaOperator proj11 = NqaOperator::from_terms({{"II", 0.25}, {"IZ", -0.25}, {"ZI", -0.25}, {"ZZ", 0.25}});
    ComplexNqaOperator two(NqaOperator::identity(2) + scale(std::cos(phi) - 1.0, proj11),
                           scale(std::sin(phi), proj11));
    return on_pair(two, p, q, num_slots);
}

std::vector<ComplexNqaOperator> cartan_factors(double theta_x, double theta_y, double theta_z, size_t p, size_t q,
                                               size_t num_slots) {
    auto factor = [&](double t, std::string_view word, double sign) {
        ComplexNqaOperator two(NqaOperator::from_terms({{"II", std::cos(t)}}),
                               NqaOperator::from_terms({{word, sign * std::sin(t)}}));
        return on_pair(two, p, q, num_slots);
    };
    return {factor(theta_x, "XX", 1.0), factor(theta_y, "WW", -1.0), factor(theta_z, "ZZ", 1.0)};
}

NqaOperator lifted_iswap() {
    return phi(iswap(1, 2, 2));
}

NqaOperator lifted_sqrt_swap() {
    return phi(sqrt_swap(1, 2, 2));
}

NqaOperator lifted_cphase(double angle) {
    return phi(cphase(angle, 1, 2, 2));
}

NqaOperator lifted_rz(double theta) {
    return phi(rz(theta, 1, 2));
}

FactoredOperator lifted_cartan(double theta_x, double theta_y, double theta_z) {
    FactoredOperator out(3);
    for (const auto &f : cartan_factors(theta_x, theta_y, theta_z)) {
        out.push_back(phi(f));
    }
    return out;
}

NqaOperator bell_transform() {
    return op_mul(cnot(1, 2, 2), hadamard(1, 2));
}

NqaOperator real_exponential(const NqaOperator &generator, double angle) {
    size_t m = generator.num_slots();
    NqaOperator id = NqaOperator::identity(m);
    NqaOperator sq = op_mul(generator, generator);
    auto close_to = [&](const NqaOperator &target) {
        NqaOperator diff = sq - target;
        return std::all_of(diff.terms().begin(), diff.terms().end(),
                           [](const auto &t) { return std::abs(t.second) <= 1e-12; });
    };
    if (close_to(scale(-1.0, id))) {
        return scale(std::cos(angle), id) + scale(std::sin(angle), generator);
    }
    if (close_to(id)) {
        return scale(std::cosh(angle), id) + scale(std::sinh(angle), generator);
    }
    throw NotExponentiableError("real_exponential: generator square is not +-identity");
}

GateValue make_gate(std::string_view name, std::span<const double> params, std::span<const size_t> slots,
                    size_t num_slots) {
    const std::string n = upper(name);
    auto one = [&](size_t n_params) {
        expect_counts(n, params, n_params, slots, 1);
        return slots[0];
    };
    auto two = [&](size_t n_params) {
        expect_counts(n, params, n_params, slots, 2);
        return std::pair{slots[0], slots[1]};
    };

    if (n == "H") return hadamard(one(0), num_slots);
    if (n == "X") return pauli_x(one(0), num_slots);
    if (n == "Z") return pauli_z(one(0), num_slots);
    if (n == "W") return block_w(one(0), num_slots);
    if (n == "P0") return p0(one(0), num_slots);
    if (n == "P1") return p1(one(0), num_slots);
    if (n == "RY") return ry(params.empty() ? 0.0 : params[0], one(1), num_slots);
    if (n == "ROT") return rot(params.empty() ? 0.0 : params[0], one(1), num_slots);
    if (n == "REF") return ref(params.empty() ? 0.0 : params[0], one(1), num_slots);
    if (n == "S") return s_gate(one(0), num_slots);
    if (n == "T") return t_gate(one(0), num_slots);
    if (n == "RZ") return rz(params.empty() ? 0.0 : params[0], one(1), num_slots);
    if (n == "CZ") {
        auto [p, q] = two(0);
        return cz(p, q, num_slots);
    }
    if (n == "CNOT") {
        auto [p, q] = two(0);
        return cnot(p, q, num_slots);
    }
    if (n == "SWAP") {
        auto [p, q] = two(0);
        return swap(p, q, num_slots);
    }
    if (n == "PIEVEN") {
        auto [p, q] = two(0);
        return parity_even(p, q, num_slots);
    }
    if (n == "PIODD") {
        auto [p, q] = two(0);
        return parity_odd(p, q, num_slots);
    }
    if (n.size() == 3 && n[0] == 'P' && (n[1] == '0' || n[1] == '1') && (n[2] == '0' || n[2] == '1')) {
        auto [p, q] = two(0);
        return basis_projector(n[1] == '1', n[2] == '1', p, q, num_slots);
    }
    if (n == "ISWAP") {
        auto [p, q] = two(0);
        return iswap(p, q, num_slots);
    }
    if (n == "SQRTSWAP") {
        auto [p, q] = two(0);
        return sqrt_swap(p, q, num_slots);
    }
    if (n == "CPHASE") {
        auto [p, q] = two(1);
        return cphase(params[0], p, q, num_slots);
    }
    if (n == "CARTAN") {
        auto [p, q] = two(3);
        auto fs = cartan_factors(params[0], params[1], params[2], p, q, num_slots);
        return complex_mul(complex_mul(fs[0], fs[1]), fs[2]);
    }
    if (n == "MCZ") {
        if (!params.empty()) {
            throw UnknownGateError("MCZ takes no angle parameters");
        }
        return mcz(slots, num_slots);
    }
    throw UnknownGateError("unknown gate '" + std::string(name) + "'");
}

std::span<const std::string_view> gate_names() {
    return kGateNames;
}

}  // namespace nqa::gates
