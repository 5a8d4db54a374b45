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

#ifndef PSTAB_LUT_HPP
#define PSTAB_LUT_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pstab/circuit.hpp"
#include "pstab/pauli.hpp"

namespace pstab {

/// Fused per-wire non-CX operator maps: a K x n x 3 x 4 tensor whose
/// [k][j][a] row is the weight 4-vector image of basis letter a (X, Y or Z)
/// under all instructors of group k on wire j, applied in circuit order.
/// I is never stored: every non-CX gate fixes it.
class LutNonCX {
  public:
    LutNonCX() = default;
    LutNonCX(std::size_t num_groups, std::size_t n_qubits);

    std::size_t num_groups() const { return num_groups_; }
    std::size_t n_qubits() const { return n_qubits_; }

    /// Image of basis letter `p` (X, Y or Z) on wire `j` under group `k`.
    std::span<const double, 4> row(std::size_t k, std::size_t j, Pauli p) const {
        return std::span<const double, 4>(&table_[offset(k, j, p)], 4);
    }

    std::span<double, 4> row(std::size_t k, std::size_t j, Pauli p) {
        return std::span<double, 4>(&table_[offset(k, j, p)], 4);
    }

  private:
    std::size_t offset(std::size_t k, std::size_t j, Pauli p) const {
        return ((k * n_qubits_ + j) * 3 + (static_cast<std::size_t>(p) - 1)) * 4;
    }

    std::size_t num_groups_ = 0;
    std::size_t n_qubits_ = 0;
    std::vector<double> table_;
};

/// Signed index permutation of one CX placement: entry i holds the image of
/// Pauli-string index i under conjugation, plus its sign.
struct CxIndexTable {
    std::vector<StringIndex> new_index;  // 4^n entries, a permutation
    std::vector<std::int8_t> sign;       // +1 / -1

    bool built() const { return !new_index.empty(); }
};

/// Tables for the ordered wire pairs (control, target) a circuit actually
/// uses. A full table over all n(n-1) pairs costs n(n-1)*4^n entries; deep
/// few-qubit circuits touch only a handful of pairs, so pairs are built on
/// demand at construction and looked up by packed pair id afterwards.
class LutCX {
  public:
    LutCX() = default;
    explicit LutCX(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }

    const CxIndexTable& table(std::size_t control, std::size_t target) const;
    bool has_pair(std::size_t control, std::size_t target) const;
    std::size_t num_built_pairs() const;

    /// Builds the table for (control, target) if not present yet.
    void ensure_pair(std::size_t control, std::size_t target);
    void ensure_pair(std::size_t control, std::size_t target, std::uint64_t* map_calls);

  private:
    std::size_t pair_id(std::size_t control, std::size_t target) const;

    std::size_t n_qubits_ = 0;
    std::vector<CxIndexTable> pairs_;  // n*(n-1) slots, lazily filled
};

/// Work tally of a LUT construction: exactly one gate-map application per
/// instructor per basis letter and one index map per (pair, index) cell.
struct LutBuildStats {
    std::uint64_t noncx_map_calls = 0;  // apply_gate_to_weights invocations
    std::uint64_t cx_map_calls = 0;     // map_cx_index invocations
};

struct Luts {
    LutNonCX noncx;
    LutCX cx;
    LutBuildStats stats;
};

/// Image of string index i under CX(control, target) conjugation: the two
/// letters at the given wires are substituted by the pair rule, all other
/// letters are unchanged.
std::pair<StringIndex, int> map_cx_index(StringIndex i, std::size_t control, std::size_t target,
                                         std::size_t n_qubits);

/// Builds the full signed permutation for one (control, target) placement.
/// When `map_calls` is given, it is incremented by the number of
/// map_cx_index invocations performed (always 4^n: one per cell).
CxIndexTable build_cx_table(std::size_t control, std::size_t target, std::size_t n_qubits,
                            std::uint64_t* map_calls = nullptr);

/// Builds both lookup tables for an operator sequence. Every cell is written
/// exactly once and cells are independent, so construction parallelizes over
/// them and the result is identical for any worker count.
Luts construct_lut(const OperatorSequence& seq);

}  // namespace pstab

#endif
