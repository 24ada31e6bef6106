# Copyright 2026 The NQA Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import nqa


def test_word_products():
    assert nqa.word_mul("X", "Z") == (1, "W")
    assert nqa.word_mul("Z", "X") == (-1, "W")
    assert nqa.word_mul("W", "W") == (-1, "I")
    assert nqa.epsilon("X", "Z") == -1
    assert nqa.parity("XZ") == 0


def test_operator_round_trips():
    cz = nqa.Operator("CZ(1,2)")
    assert str(cz) == "0.5*II + 0.5*IZ + 0.5*ZI - 0.5*ZZ"
    dense = cz.to_dense()
    np.testing.assert_array_equal(dense, np.diag([1.0, 1.0, 1.0, -1.0]))
    assert nqa.Operator.from_dense(dense) == cz
    assert nqa.Operator.from_json(cz.to_json()) == cz
    assert cz.is_orthogonal()
    assert cz.num_slots == 2


def test_arithmetic_and_brackets():
    x = nqa.Operator("X")
    z = nqa.Operator("Z")
    assert x * z == nqa.Operator("W")
    assert 2.0 * x == x + x
    assert str(nqa.anticommutator(x, z)) == "0*I"
    assert nqa.commutator(x, z) == 2.0 * nqa.Operator("W")


def test_realify_and_gates():
    s = nqa.gate("S", [], [1], 1)
    assert s.num_slots == 2
    assert s.is_orthogonal()
    assert nqa.realify(nqa.Operator("X"), nqa.Operator("Z")) == nqa.Operator("XI + ZW")
    assert "CNOT" in nqa.gate_names()


def test_algorithms():
    bits, steps = nqa.bv_recover(4, [1, 3])
    assert bits == "1010"
    assert steps > 0
    amps = nqa.bv_circuit("101")
    assert amps[5] == pytest.approx(1.0, abs=1e-12)
    trace = nqa.grover_run("11", 1)
    assert trace[1] == pytest.approx(1.0, abs=1e-12)
    assert nqa.grover_auto_iterations(2) == 1


def test_spectra():
    ev = nqa.sym_eigenvalues(nqa.chsh_quantum_matrix())
    r = 2 * math.sqrt(2)
    np.testing.assert_allclose(ev, [-r, 0, 0, r], atol=1e-10)
    phases = nqa.eigenphases(nqa.Operator("H(1,1)").to_dense())
    assert nqa.is_clifford_spectrum(phases)
    assert all(abs(v) <= 2 for v in nqa.chsh_classical_values(100, 1))


def test_cl22():
    rows = nqa.cl22_dictionary()
    assert len(rows) == 16
    assert nqa.cl22_pseudoscalar() == -1.0 * nqa.Operator("WW")


def test_errors():
    with pytest.raises(nqa.ParseError):
        nqa.Operator("X +")
    with pytest.raises(nqa.DimensionError):
        nqa.Operator("X + ZZ")
    with pytest.raises(nqa.UnknownGateError):
        nqa.gate("NOPE", [], [1], 1)
