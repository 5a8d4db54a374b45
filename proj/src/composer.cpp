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

#include "pstab/composer.hpp"

#include <bit>
#include <stdexcept>

namespace pstab {

namespace {

constexpr std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^k

}  // namespace

SparsePauliMatrix compose_sparse(double lambda, StringIndex index, std::size_t n_qubits) {
    if (index >= pow4(n_qubits)) {
        throw std::out_of_range("compose_sparse: string index out of range");
    }
    if (lambda == 0.0) {
        throw std::invalid_argument("compose_sparse: lambda must be nonzero");
    }

    // Row bit (n-1-j) belongs to wire j, matching the big-endian string codec.
    std::uint64_t xor_mask = 0;   // X and Y letters flip their row bit
    std::uint64_t sign_mask = 0;  // Z and Y letters contribute a row-dependent sign
    std::size_t n_y = 0;
    for (std::size_t j = 0; j < n_qubits; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << (n_qubits - 1 - j);
        switch (pauli_at(index, j, n_qubits)) {
            case Pauli::I:
                break;
            case Pauli::X:
                xor_mask |= bit;
                break;
            case Pauli::Y:
                xor_mask |= bit;
                sign_mask |= bit;
                ++n_y;
                break;
            case Pauli::Z:
                sign_mask |= bit;
                break;
        }
    }

    const std::size_t dim = std::size_t{1} << n_qubits;
    SparsePauliMatrix m;
    m.n_qubits = n_qubits;
    m.cols.resize(dim);
    m.vals.resize(dim);

    // Z rows flip sign on a set bit; Y (as i * [[0,-1],[1,0]]) flips on a
    // clear bit, folded in as a global (-1)^n_Y below.
    const std::complex<double> base = lambda * kPhases[n_y % 4] * (n_y % 2 == 0 ? 1.0 : -1.0);

    if (xor_mask == 0) {
        // Diagonal string: only the per-row Z sign remains.
        for (std::uint64_t r = 0; r < dim; ++r) {
            m.cols[r] = r;
            m.vals[r] = (std::popcount(r & sign_mask) % 2 == 0) ? base : -base;
        }
        return m;
    }

    for (std::uint64_t r = 0; r < dim; ++r) {
        m.cols[r] = r ^ xor_mask;
        m.vals[r] = (std::popcount(r & sign_mask) % 2 == 0) ? base : -base;
    }
    return m;
}

Eigen::MatrixXcd dense_from_sparse(const SparsePauliMatrix& m) {
    const auto dim = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        dense(r, static_cast<Eigen::Index>(m.cols[static_cast<std::size_t>(r)])) =
            m.vals[static_cast<std::size_t>(r)];
    }
    return dense;
}

}  // namespace pstab
