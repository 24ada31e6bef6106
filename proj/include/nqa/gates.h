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
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "nqa/factored.h"
#include "nqa/operator.h"
#include "nqa/realify.h"

/// Gate constructors in block form.
///
/// Slots are 1-based throughout this namespace (1 <= k <= m), matching the
/// text form where the leftmost letter is slot 1. Angles are in radians.
/// Phaseful gates come back as ComplexNqaOperator; the caller decides when to
/// realify with phi().
namespace nqa::gates {

NqaOperator hadamard(size_t slot, size_t num_slots);
NqaOperator pauli_x(size_t slot, size_t num_slots);
NqaOperator pauli_z(size_t slot, size_t num_slots);
NqaOperator block_w(size_t slot, size_t num_slots);
/// cos(theta/2) I + sin(theta/2) W.
NqaOperator ry(double theta, size_t slot, size_t num_slots);
/// cos(phi) I + sin(phi) W.
NqaOperator rot(double phi, size_t slot, size_t num_slots);
/// cos(2 phi) Z + sin(2 phi) X.
NqaOperator ref(double phi, size_t slot, size_t num_slots);
NqaOperator p0(size_t slot, size_t num_slots);
NqaOperator p1(size_t slot, size_t num_slots);

/// exp(-i pi/4 Z) = (I - iZ)/sqrt(2).
ComplexNqaOperator s_gate(size_t slot, size_t num_slots);
/// exp(-i pi/8 Z).
ComplexNqaOperator t_gate(size_t slot, size_t num_slots);
/// exp(-i theta Z / 2).
ComplexNqaOperator rz(double theta, size_t slot, size_t num_slots);

NqaOperator cz(size_t p, size_t q, size_t num_slots);
NqaOperator cnot(size_t control, size_t target, size_t num_slots);
NqaOperator swap(size_t p, size_t q, size_t num_slots);
/// (I + Z_p Z_q) / 2 and (I - Z_p Z_q) / 2.
NqaOperator parity_even(size_t p, size_t q, size_t num_slots);
NqaOperator parity_odd(size_t p, size_t q, size_t num_slots);
/// |b_p b_q><b_p b_q| on slots (p, q).
NqaOperator basis_projector(bool bit_p, bool bit_q, size_t p, size_t q, size_t num_slots);

/// I - 2 prod_{k in C} P1^(k), kept in product form. Throws SlotError on an
/// empty or out-of-range control set.
FactoredOperator mcz(std::span<const size_t> controls, size_t num_slots);

/// (II + ZZ)/2 + i (XX - WW)/2 on slots (p, q).
ComplexNqaOperator iswap(size_t p, size_t q, size_t num_slots);
/// (3+i)/4 II + (1-i)/4 XX + (1-i)/4 ZZ + (-1+i)/4 WW on slots (p, q).
ComplexNqaOperator sqrt_swap(size_t p, size_t q, size_t num_slots);
/// I + (e^{i phi} - 1) |11><11| on slots (p, q).
ComplexNqaOperator cphase(double phi, size_t p, size_t q, size_t num_slots);

/// The three commuting two-qubit factors cos(t) II + i sin(t) P for
/// P = XX, -WW (= YY), ZZ, i.e. exp(+i t P) each. Their product is the Cartan
/// entangler exp(i (tx XX + ty YY + tz ZZ)).
std::vector<ComplexNqaOperator> cartan_factors(double theta_x, double theta_y, double theta_z, size_t p = 1,
                                               size_t q = 2, size_t num_slots = 2);

/// Two-qubit gates on (1, 2) lifted to three real slots, phase lane last.
NqaOperator lifted_iswap();
NqaOperator lifted_sqrt_swap();
NqaOperator lifted_cphase(double phi);
/// R_Z(theta) on qubit 1 of 2, lifted.
NqaOperator lifted_rz(double theta);
/// Three lifted real factors (x, y, z order); their product is the lift of the
/// Cartan entangler.
FactoredOperator lifted_cartan(double theta_x, double theta_y, double theta_z);

/// CNOT(1->2) (H (x) I), multiplied out.
NqaOperator bell_transform();

/// exp(phi G) for a real generator with G^2 = -I (cos/sin) or G^2 = +I
/// (cosh/sinh). The square is checked to 1e-12; anything else throws
/// NotExponentiableError.
NqaOperator real_exponential(const NqaOperator &generator, double phi);

/// Result of a by-name constructor: real, complex (not yet realified), or a
/// structured product.
using GateValue = std::variant<NqaOperator, ComplexNqaOperator, FactoredOperator>;

/// Case-insensitive lookup of every constructor above.
///
///   H X Z W P0 P1          slots={k}
///   RY ROT REF S T RZ      params={angle} (S, T take none), slots={k}
///   CZ CNOT SWAP PIEVEN PIODD ISWAP SQRTSWAP    slots={p, q}
///   P00 P01 P10 P11        slots={p, q}
///   CPHASE                 params={phi}, slots={p, q}
///   CARTAN                 params={tx, ty, tz}, slots={p, q}
///   MCZ                    slots=controls
///
/// Throws UnknownGateError for unknown names or wrong parameter counts.
GateValue make_gate(std::string_view name, std::span<const double> params, std::span<const size_t> slots,
                    size_t num_slots);

/// Names accepted by make_gate, upper case.
std::span<const std::string_view> gate_names();

}  // namespace nqa::gates
