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

"""Real operators in the I/X/Z/W block basis."""

from ._nqa import (  # noqa: F401
    DimensionError,
    HomogeneityError,
    Operator,
    ParseError,
    UnknownGateError,
    anticommutator,
    bv_circuit,
    bv_recover,
    chsh_classical_values,
    chsh_quantum_matrix,
    chsh_standard_matrix,
    cl22_dictionary,
    cl22_pseudoscalar,
    commutator,
    eigenphases,
    epsilon,
    epsilon_commutator,
    gate,
    gate_names,
    grover_auto_iterations,
    grover_run,
    is_clifford_spectrum,
    parity,
    realify,
    supercommutator,
    sym_eigenvalues,
    word_mul,
)

__version__ = "0.1.0"
