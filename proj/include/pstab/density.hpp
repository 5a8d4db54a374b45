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

#ifndef PSTAB_DENSITY_HPP
#define PSTAB_DENSITY_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pstab/engine.hpp"

namespace pstab {

/// Exact output density matrix; for a unitary circuit on |0...0> it is a
/// Hermitian rank-1 projector with unit trace.
struct DensityMatrix {
    std::size_t n_qubits = 0;
    Eigen::MatrixXcd rho;
};

/// M = I + sum of lambda_i * P_i over the nonzero weights of s. Terms enter
/// as one-nonzero-per-row sparse matrices and are summed by pairwise tree
/// reduction (at most ceil(log2(n' + 1)) levels); a partial sum densifies
/// once its fill-in passes half the matrix.
Eigen::MatrixXcd add_terms(const StabilizerState& s);

/// Balanced-tree product in ceil(log2(count)) levels. The stabilizer
/// matrices commute, so the tree shape does not affect the value.
Eigen::MatrixXcd multiply_chain(std::vector<Eigen::MatrixXcd> ms);

/// rho = 2^-n * product of (I + stabilizer_j) over all n generators.
DensityMatrix to_density(const std::vector<StabilizerState>& stabs);

/// Probability of measuring |0> on `wire`.
double measure_z(const DensityMatrix& rho, std::size_t wire);

/// Real part of the (0,0) entry: the |0...0> population.
double rho00(const DensityMatrix& rho);

/// CSV export, header `row,col,re,im`, row-major, all 4^n entries.
std::string density_to_csv(const DensityMatrix& rho);

/// Raw little-endian doubles, row-major, interleaved re/im.
std::vector<std::byte> density_to_binary(const DensityMatrix& rho);

}  // namespace pstab

#endif
