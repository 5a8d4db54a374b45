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

#include "pstab/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace pstab::oracle {

namespace {

using namespace std::complex_literals;

Eigen::Matrix2cd pauli_matrix(Pauli p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, -1i, 1i, 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

}  // namespace

Eigen::Matrix2cd gate_unitary(Gate g, double theta) {
    const double h = theta / 2.0;
    Eigen::Matrix2cd m;
    switch (g) {
        case Gate::H:
            m << 1, 1, 1, -1;
            return m / std::sqrt(2.0);
        case Gate::S:
            m << 1, 0, 0, 1i;
            return m;
        case Gate::RX:
            m << std::cos(h), -1i * std::sin(h), -1i * std::sin(h), std::cos(h);
            return m;
        case Gate::RY:
            m << std::cos(h), -std::sin(h), std::sin(h), std::cos(h);
            return m;
        case Gate::RZ:
            m << std::exp(-1i * h), 0, 0, std::exp(1i * h);
            return m;
        case Gate::CX:
            break;
    }
    throw std::invalid_argument("gate_unitary: CX has no 2x2 form");
}

StateVector simulate_statevector(const Circuit& c) {
    const std::size_t n = c.n_qubits;
    const std::size_t dim = std::size_t{1} << n;
    StateVector s;
    s.n_qubits = n;
    s.amp = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    s.amp(0) = 1.0;

    for (const Instructor& ins : c.instructors) {
        if (ins.name == Gate::CX) {
            const std::uint64_t control_bit = std::uint64_t{1} << (n - 1 - ins.wire);
            const std::uint64_t target_bit = std::uint64_t{1} << (n - 1 - ins.wire2);
            for (std::uint64_t b = 0; b < dim; ++b) {
                if ((b & control_bit) != 0 && (b & target_bit) == 0) {
                    std::swap(s.amp(static_cast<Eigen::Index>(b)),
                              s.amp(static_cast<Eigen::Index>(b | target_bit)));
                }
            }
        } else {
            const Eigen::Matrix2cd u = gate_unitary(ins.name, ins.theta);
            const std::uint64_t bit = std::uint64_t{1} << (n - 1 - ins.wire);
            for (std::uint64_t b = 0; b < dim; ++b) {
                if ((b & bit) == 0) {
                    const auto i0 = static_cast<Eigen::Index>(b);
                    const auto i1 = static_cast<Eigen::Index>(b | bit);
                    const std::complex<double> a0 = s.amp(i0);
                    const std::complex<double> a1 = s.amp(i1);
                    s.amp(i0) = u(0, 0) * a0 + u(0, 1) * a1;
                    s.amp(i1) = u(1, 0) * a0 + u(1, 1) * a1;
                }
            }
        }
    }
    return s;
}

DensityMatrix density_from_statevector(const StateVector& s) {
    DensityMatrix rho;
    rho.n_qubits = s.n_qubits;
    rho.rho = s.amp * s.amp.adjoint();
    return rho;
}

Eigen::MatrixXcd dense_pauli(StringIndex index, std::size_t n_qubits) {
    if (index >= pow4(n_qubits)) {
        throw std::out_of_range("dense_pauli: string index out of range");
    }
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t j = 0; j < n_qubits; ++j) {
        // result = kron(result, letter_j): wire 0 stays the outermost factor.
        const Eigen::Matrix2cd next = pauli_matrix(pauli_at(index, j, n_qubits));
        Eigen::MatrixXcd grown(result.rows() * 2, result.cols() * 2);
        for (Eigen::Index r = 0; r < result.rows(); ++r) {
            for (Eigen::Index c = 0; c < result.cols(); ++c) {
                grown.block(r * 2, c * 2, 2, 2) = result(r, c) * next;
            }
        }
        result = std::move(grown);
    }
    return result;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
    const std::size_t n = c.n_qubits;
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);

    for (const Instructor& ins : c.instructors) {
        Eigen::MatrixXcd g;
        if (ins.name == Gate::CX) {
            const std::uint64_t control_bit = std::uint64_t{1} << (n - 1 - ins.wire);
            const std::uint64_t target_bit = std::uint64_t{1} << (n - 1 - ins.wire2);
            g = Eigen::MatrixXcd::Zero(dim, dim);
            for (Eigen::Index b = 0; b < dim; ++b) {
                const auto bits = static_cast<std::uint64_t>(b);
                const std::uint64_t image =
                    (bits & control_bit) != 0 ? bits ^ target_bit : bits;
                g(static_cast<Eigen::Index>(image), b) = 1.0;
            }
        } else {
            const Eigen::Matrix2cd u2 = gate_unitary(ins.name, ins.theta);
            const std::uint64_t bit = std::uint64_t{1} << (n - 1 - ins.wire);
            g = Eigen::MatrixXcd::Zero(dim, dim);
            for (Eigen::Index b = 0; b < dim; ++b) {
                const auto bits = static_cast<std::uint64_t>(b);
                const Eigen::Index row0 = static_cast<Eigen::Index>(bits & ~bit);
                const Eigen::Index row1 = static_cast<Eigen::Index>(bits | bit);
                if ((bits & bit) == 0) {
                    g(row0, b) = u2(0, 0);
                    g(row1, b) = u2(1, 0);
                } else {
                    g(row0, b) = u2(0, 1);
                    g(row1, b) = u2(1, 1);
                }
            }
        }
        u = g * u;
    }
    return u;
}

Eigen::MatrixXcd conjugate_pauli(StringIndex index, const Circuit& fragment) {
    const Eigen::MatrixXcd u = circuit_unitary(fragment);
    return u * dense_pauli(index, fragment.n_qubits) * u.adjoint();
}

}  // namespace pstab::oracle
