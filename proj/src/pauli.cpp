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

#include "pstab/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace pstab {

bool gate_is_rotation(Gate g) {
    return g == Gate::RX || g == Gate::RY || g == Gate::RZ;
}

const char* gate_name(Gate g) {
    switch (g) {
        case Gate::H:
            return "h";
        case Gate::S:
            return "s";
        case Gate::RX:
            return "rx";
        case Gate::RY:
            return "ry";
        case Gate::RZ:
            return "rz";
        case Gate::CX:
            return "cx";
    }
    return "?";
}

StringIndex string_to_index(std::span<const Pauli> letters) {
    StringIndex value = 0;
    for (const Pauli p : letters) {
        value = (value << 2) | static_cast<StringIndex>(p);
    }
    return value;
}

std::vector<Pauli> index_to_string(StringIndex index, std::size_t n_qubits) {
    if (index >= pow4(n_qubits)) {
        throw std::out_of_range("Pauli string index " + std::to_string(index) +
                                " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    std::vector<Pauli> letters(n_qubits);
    for (std::size_t j = 0; j < n_qubits; ++j) {
        letters[n_qubits - 1 - j] = static_cast<Pauli>((index >> (2 * j)) & 3u);
    }
    return letters;
}

std::string index_to_label(StringIndex index, std::size_t n_qubits) {
    std::string label(n_qubits, 'I');
    for (std::size_t j = 0; j < n_qubits; ++j) {
        label[j] = pauli_char(pauli_at(index, j, n_qubits));
    }
    return label;
}

WeightVector apply_gate_to_weights(const WeightVector& w, Gate g, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    switch (g) {
        case Gate::H:
            return {w[0], w[3], -w[2], w[1]};
        case Gate::S:
            return {w[0], -w[2], w[1], w[3]};
        case Gate::RX:
            return {w[0], w[1], w[2] * c - w[3] * s, w[2] * s + w[3] * c};
        case Gate::RY:
            return {w[0], w[1] * c + w[3] * s, w[2], w[3] * c - w[1] * s};
        case Gate::RZ:
            return {w[0], w[1] * c - w[2] * s, w[2] * c + w[1] * s, w[3]};
        case Gate::CX:
            break;
    }
    throw std::invalid_argument("apply_gate_to_weights: CX is not a single-wire gate");
}

namespace {

// Conjugation table for CX acting on (control, target) letter pairs, indexed
// by control*4 + target. Five pairs swap, four are fixed, and XZ <-> YY picks
// up a sign. Validated against dense 4x4 conjugation in the test suite.
struct CxEntry {
    Pauli control;
    Pauli target;
    int sign;
};

constexpr Pauli kI = Pauli::I;
constexpr Pauli kX = Pauli::X;
constexpr Pauli kY = Pauli::Y;
constexpr Pauli kZ = Pauli::Z;

constexpr CxEntry kCxTable[16] = {
    /* II */ {kI, kI, +1},
    /* IX */ {kI, kX, +1},
    /* IY */ {kZ, kY, +1},
    /* IZ */ {kZ, kZ, +1},
    /* XI */ {kX, kX, +1},
    /* XX */ {kX, kI, +1},
    /* XY */ {kY, kZ, +1},
    /* XZ */ {kY, kY, -1},
    /* YI */ {kY, kX, +1},
    /* YX */ {kY, kI, +1},
    /* YY */ {kX, kZ, -1},
    /* YZ */ {kX, kY, +1},
    /* ZI */ {kZ, kI, +1},
    /* ZX */ {kZ, kX, +1},
    /* ZY */ {kI, kY, +1},
    /* ZZ */ {kI, kZ, +1},
};

}  // namespace

CxPairResult cx_pair_map(Pauli control, Pauli target) {
    const CxEntry& e =
        kCxTable[(static_cast<std::size_t>(control) << 2) | static_cast<std::size_t>(target)];
    return {e.control, e.target, e.sign};
}

}  // namespace pstab
