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

#ifndef PSTAB_COMPOSER_HPP
#define PSTAB_COMPOSER_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pstab/pauli.hpp"

namespace pstab {

/// A weighted Pauli string as a 2^n x 2^n matrix with exactly one nonzero
/// per row (and per column): cols[r] is the column of row r's entry, vals[r]
/// its value. cols is the self-inverse XOR permutation induced by the X/Y
/// letters.
struct SparsePauliMatrix {
    std::size_t n_qubits = 0;
    std::vector<std::uint64_t> cols;
    std::vector<std::complex<double>> vals;

    std::size_t dim() const { return std::size_t{1} << n_qubits; }
};

/// Builds the sparse form of lambda * P(index) in O(2^n): the column of row
/// r is r XOR mask (mask has a bit per X/Y letter), and the value is
/// lambda * i^(n_Y mod 4) times a per-row sign read off the real matrices
/// with Y replaced by i * [[0,-1],[1,0]]. Diagonal strings (empty mask) take
/// a sign-only fast path.
SparsePauliMatrix compose_sparse(double lambda, StringIndex index, std::size_t n_qubits);

/// Scatters the one-entry-per-row form into a dense matrix; exact.
Eigen::MatrixXcd dense_from_sparse(const SparsePauliMatrix& m);

}  // namespace pstab

#endif
