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

#ifndef PSTAB_PAULI_HPP
#define PSTAB_PAULI_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pstab {

/// Single-qubit Pauli letter, valued so that a Pauli string is a base-4
/// integer with I=0, X=1, Y=2, Z=3.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Base-4 code of an n-letter Pauli string. The leftmost letter (wire 0) is
/// the most significant digit, so the range is [0, 4^n): 0 is I...I and
/// 4^n - 1 is Z...Z.
using StringIndex = std::uint64_t;

/// Coefficients of a weighted sum w0*I + w1*X + w2*Y + w3*Z.
using WeightVector = std::array<double, 4>;

/// Gates understood by the simulator. CX is the only two-qubit gate.
enum class Gate : std::uint8_t { H, S, RX, RY, RZ, CX };

bool gate_is_rotation(Gate g);
const char* gate_name(Gate g);

constexpr char pauli_char(Pauli p) {
    constexpr char letters[4] = {'I', 'X', 'Y', 'Z'};
    return letters[static_cast<std::size_t>(p)];
}

inline std::uint64_t pow4(std::size_t n) {
    return std::uint64_t{1} << (2 * n);
}

/// Big-endian base-4 encoding: XYZ -> 1*4^2 + 2*4 + 3 = 27.
StringIndex string_to_index(std::span<const Pauli> letters);

/// Inverse of string_to_index, left-padded with I up to n_qubits letters.
/// Throws std::out_of_range when index >= 4^n_qubits.
std::vector<Pauli> index_to_string(StringIndex index, std::size_t n_qubits);

/// Letter of `index` at `wire` (wire 0 is the most significant digit).
inline Pauli pauli_at(StringIndex index, std::size_t wire, std::size_t n_qubits) {
    return static_cast<Pauli>((index >> (2 * (n_qubits - 1 - wire))) & 3u);
}

/// `index` with the letter at `wire` replaced by `p`.
inline StringIndex with_pauli_at(StringIndex index, std::size_t wire, std::size_t n_qubits, Pauli p) {
    const std::size_t shift = 2 * (n_qubits - 1 - wire);
    return (index & ~(StringIndex{3} << shift)) | (static_cast<StringIndex>(p) << shift);
}

std::string index_to_label(StringIndex index, std::size_t n_qubits);

/// Action of one non-CX gate on the weight 4-vector of a single wire:
///   H       -> [w0,  w3, -w2,  w1]
///   S       -> [w0, -w2,  w1,  w3]
///   RX(t)   -> [w0,  w1,  w2 cos t - w3 sin t,  w2 sin t + w3 cos t]
///   RY(t)   -> [w0,  w1 cos t + w3 sin t,  w2,  w3 cos t - w1 sin t]
///   RZ(t)   -> [w0,  w1 cos t - w2 sin t,  w2 cos t + w1 sin t,  w3]
/// All five maps fix w0 and are orthogonal on (w1, w2, w3).
/// Throws std::invalid_argument for CX.
WeightVector apply_gate_to_weights(const WeightVector& w, Gate g, double theta);

/// Conjugation of a two-letter Pauli (control, target) by CX. The result is
/// again a two-letter Pauli, up to a sign that is -1 exactly for the
/// XZ <-> YY pair.
struct CxPairResult {
    Pauli control_after;
    Pauli target_after;
    int sign;  // +1 or -1
};

CxPairResult cx_pair_map(Pauli control, Pauli target);

}  // namespace pstab

#endif
