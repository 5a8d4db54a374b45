// Copyright 2026 The PStabilizer Authors
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

#ifndef PSTAB_ORACLE_HPP
#define PSTAB_ORACLE_HPP

#include <complex>

#include <Eigen/Dense>

#include "pstab/circuit.hpp"
#include "pstab/density.hpp"
#include "pstab/pauli.hpp"

// Brute-force references, deliberately naive and sequential: their value is
// independence from the lookup-table pipeline, not speed. Gate conventions
// are R_a(theta) = exp(-i theta sigma_a / 2); conjugation by that rotation
// turns X under RZ into cos(theta) X + sin(theta) Y, which pins the sign
// convention shared with the weight maps.

namespace pstab::oracle {

struct StateVector {
    std::size_t n_qubits = 0;
    Eigen::VectorXcd amp;  // 2^n amplitudes, wire 0 is the most significant bit
};

/// Applies each gate's dense unitary to |0...0> in circuit order.
StateVector simulate_statevector(const Circuit& c);

/// Outer product |psi><psi|.
DensityMatrix density_from_statevector(const StateVector& s);

/// Literal Kronecker product of the string's 2x2 Pauli matrices.
Eigen::MatrixXcd dense_pauli(StringIndex index, std::size_t n_qubits);

/// Dense 2x2 single-qubit unitary of a non-CX gate.
Eigen::Matrix2cd gate_unitary(Gate g, double theta);

/// Dense 2^n x 2^n unitary of an entire circuit fragment.
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

/// U P U^dagger for the whole fragment, densely.
Eigen::MatrixXcd conjugate_pauli(StringIndex index, const Circuit& fragment);

}  // namespace pstab::oracle

#endif
