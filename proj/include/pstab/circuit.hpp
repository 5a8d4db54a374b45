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

#ifndef PSTAB_CIRCUIT_HPP
#define PSTAB_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pstab/pauli.hpp"

namespace pstab {

/// One gate application: {name, wire(s), angle}. theta is 0 exactly for
/// non-rotation gates; wire2 is used by CX only.
struct Instructor {
    Gate name;
    std::uint32_t wire = 0;
    std::uint32_t wire2 = 0;
    double theta = 0.0;

    bool operator==(const Instructor&) const = default;
};

Instructor make_gate(Gate g, std::uint32_t wire);
Instructor make_rotation(Gate g, std::uint32_t wire, double theta);
Instructor make_cx(std::uint32_t control, std::uint32_t target);

struct Circuit {
    std::size_t n_qubits = 0;
    std::vector<Instructor> instructors;

    bool operator==(const Circuit&) const = default;
};

/// Parses the text circuit format:
///   qubits N
///   h W | s W | rx W THETA | ry W THETA | rz W THETA | cx W1 W2
/// Gate names are case-insensitive, `#` starts a comment, THETA is a decimal
/// radian literal. Throws std::invalid_argument with the offending line
/// number on malformed input.
Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit; parse_circuit(serialize_circuit(c)) == c.
std::string serialize_circuit(const Circuit& c);

/// Benchmark ansatz. One layer is
///   RY(theta) on wires 0..n-2,
///   `repeats` copies of the rotation part (RZ, RX, RZ on every wire),
///   CX(j, j+1) for j = 0..n-2,
/// and the layer is emitted `layers` times. Every rotation angle is an
/// independent uniform draw from [0, 2pi) of a generator seeded with `seed`,
/// so the circuit is deterministic per seed. Under split_operators this
/// yields exactly one non-CX and one CX group per layer (K = K' = layers).
Circuit generate_wchain_zxz(std::size_t n_qubits, std::size_t layers, std::size_t repeats,
                            std::uint64_t seed);

enum class GroupKind : std::uint8_t { NonCX, CX };

/// A maximal run of same-kind gates. NonCX groups keep their instructors
/// partitioned per wire (single-qubit gates on distinct wires commute, so
/// this is the only reordering performed anywhere). CX groups keep the
/// ordered (control, target) list.
struct OperatorGroup {
    GroupKind kind = GroupKind::NonCX;
    std::size_t index = 0;  // position among groups of the same kind
    std::vector<std::vector<Instructor>> by_wire;         // NonCX: n lists
    std::vector<std::pair<std::uint32_t, std::uint32_t>> gates;  // CX pairs

    std::size_t size() const;
};

struct OperatorSequence {
    std::size_t n_qubits = 0;
    std::vector<OperatorGroup> groups;  // strictly alternating kinds
    std::size_t num_noncx = 0;          // K
    std::size_t num_cx = 0;             // K'
};

/// Splits a circuit into maximal alternating non-CX / CX operator groups;
/// |K - K'| <= 1 by construction.
OperatorSequence split_operators(const Circuit& c);

/// Baseline split: every instructor becomes its own group of size one.
OperatorSequence split_gate_by_gate(const Circuit& c);

/// Concatenates the groups back into one instructor list (per-wire lists of a
/// non-CX group are emitted wire 0 first). Splitting the result again
/// reproduces the same sequence.
std::vector<Instructor> flatten_sequence(const OperatorSequence& seq);

}  // namespace pstab

#endif
