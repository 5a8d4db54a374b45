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

#ifndef PSTAB_ENGINE_HPP
#define PSTAB_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pstab/circuit.hpp"
#include "pstab/lut.hpp"
#include "pstab/pauli.hpp"

namespace pstab {

/// Entries smaller than this are written as exact zeros after each flatten,
/// so products like cos(pi/2) never linger as denormal noise and inflate the
/// stabilizer order. Far below every verification tolerance.
inline constexpr double kPruneEpsilon = 1e-14;

/// One stabilizer in basic form: a dense array of 4^n Pauli-string weights.
/// Unitary evolution keeps sum(lambda^2) == 1; the nonzero count is the
/// stabilizer order and ranges from 1 up to 4^n.
struct StabilizerState {
    std::size_t n_qubits = 0;
    std::vector<double> lambda;  // length 4^n

    static StabilizerState zero(std::size_t n_qubits);
    /// One-hot state for a single Pauli string.
    static StabilizerState one_hot(std::size_t n_qubits, StringIndex index, double value = 1.0);
};

/// Expanded form of a stabilizer after gathering LUT rows: one row per
/// nonzero source string, holding its weight and an n x 4 per-wire weight
/// matrix. Stored flat, row-major.
class WeightTensor {
  public:
    WeightTensor() = default;
    WeightTensor(std::size_t n_qubits, std::size_t num_rows);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t num_rows() const { return num_rows_; }

    StringIndex& source_index(std::size_t r) { return source_index_[r]; }
    StringIndex source_index(std::size_t r) const { return source_index_[r]; }
    double& weight(std::size_t r) { return row_weight_[r]; }
    double weight(std::size_t r) const { return row_weight_[r]; }

    std::span<double, 4> wire_weights(std::size_t r, std::size_t j) {
        return std::span<double, 4>(&weights_[(r * n_qubits_ + j) * 4], 4);
    }
    std::span<const double, 4> wire_weights(std::size_t r, std::size_t j) const {
        return std::span<const double, 4>(&weights_[(r * n_qubits_ + j) * 4], 4);
    }

  private:
    std::size_t n_qubits_ = 0;
    std::size_t num_rows_ = 0;
    std::vector<StringIndex> source_index_;
    std::vector<double> row_weight_;
    std::vector<double> weights_;  // num_rows x n x 4
};

/// The n initial generators: stabilizer j is the one-hot string with Z on
/// wire j and I elsewhere. Throws std::invalid_argument for n == 0.
std::vector<StabilizerState> init_stabilizers(std::size_t n_qubits);

/// Gathers LUT rows for non-CX group k: each nonzero lambda becomes a tensor
/// row whose wire-j weights are LUT[k][j][letter] for letters X/Y/Z and the
/// fixed one-hot [1,0,0,0] for I. Rows are gathered, never recomputed.
WeightTensor expand_noncx(const StabilizerState& s, const LutNonCX& lut, std::size_t k);

/// Cartesian expansion back to basic form: every combination of one nonzero
/// weight per wire contributes (row weight times the product of chosen
/// weights) at the index spelled by the chosen letters; equal indices are
/// summed. Work is chunked over rows with a fixed chunk count and the chunk
/// partials are merged in a fixed pairwise tree, so the floating-point
/// result is identical for every worker count. Entries below kPruneEpsilon
/// come out as exact zeros.
StabilizerState flatten(const WeightTensor& t);

/// Applies every CX of group g in order as a signed permutation scatter.
StabilizerState apply_cx_group(const StabilizerState& s, const OperatorGroup& g, const LutCX& lut);

/// Called after every operator group when observing a map run; receives the
/// group position within the sequence and the current states.
using GroupObserver =
    std::function<void(std::size_t group_pos, const std::vector<StabilizerState>& stabs)>;

/// Applies the operator groups in sequence order to every stabilizer:
/// non-CX groups run expand + flatten, CX groups run the permutation
/// pipeline. Stabilizers are independent and processed in parallel unless an
/// observer needs a barrier after each group.
std::vector<StabilizerState> run_map_stage(std::vector<StabilizerState> stabs,
                                           const OperatorSequence& seq, const Luts& luts,
                                           const GroupObserver& observer = nullptr);

/// Number of nonzero weights (n').
std::size_t stabilizer_order(const StabilizerState& s);

/// sum(lambda_i^2); 1 for any state reached by unitary evolution.
double lambda_norm_sq(const StabilizerState& s);

}  // namespace pstab

#endif
