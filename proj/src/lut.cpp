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

#include "pstab/lut.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

#include "pstab/exec.hpp"

namespace pstab {

LutNonCX::LutNonCX(std::size_t num_groups, std::size_t n_qubits)
    : num_groups_(num_groups), n_qubits_(n_qubits), table_(num_groups * n_qubits * 3 * 4, 0.0) {
    // Identity rows, overwritten wherever a wire has instructors.
    for (std::size_t k = 0; k < num_groups; ++k) {
        for (std::size_t j = 0; j < n_qubits; ++j) {
            for (const Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                row(k, j, p)[static_cast<std::size_t>(p)] = 1.0;
            }
        }
    }
}

LutCX::LutCX(std::size_t n_qubits) : n_qubits_(n_qubits), pairs_(n_qubits * (n_qubits - 1)) {}

std::size_t LutCX::pair_id(std::size_t control, std::size_t target) const {
    if (control == target || control >= n_qubits_ || target >= n_qubits_) {
        throw std::out_of_range("LutCX: invalid wire pair");
    }
    return control * (n_qubits_ - 1) + (target < control ? target : target - 1);
}

const CxIndexTable& LutCX::table(std::size_t control, std::size_t target) const {
    const CxIndexTable& t = pairs_[pair_id(control, target)];
    if (!t.built()) {
        throw std::logic_error("LutCX: pair (" + std::to_string(control) + ", " +
                               std::to_string(target) + ") was not built");
    }
    return t;
}

bool LutCX::has_pair(std::size_t control, std::size_t target) const {
    return pairs_[pair_id(control, target)].built();
}

std::size_t LutCX::num_built_pairs() const {
    return static_cast<std::size_t>(
        std::count_if(pairs_.begin(), pairs_.end(), [](const CxIndexTable& t) { return t.built(); }));
}

void LutCX::ensure_pair(std::size_t control, std::size_t target) {
    CxIndexTable& t = pairs_[pair_id(control, target)];
    if (!t.built()) {
        t = build_cx_table(control, target, n_qubits_);
    }
}

void LutCX::ensure_pair(std::size_t control, std::size_t target, std::uint64_t* map_calls) {
    CxIndexTable& t = pairs_[pair_id(control, target)];
    if (!t.built()) {
        t = build_cx_table(control, target, n_qubits_, map_calls);
    }
}

std::pair<StringIndex, int> map_cx_index(StringIndex i, std::size_t control, std::size_t target,
                                         std::size_t n_qubits) {
    if (control == target || control >= n_qubits || target >= n_qubits) {
        throw std::out_of_range("map_cx_index: invalid wire pair");
    }
    if (i >= pow4(n_qubits)) {
        throw std::out_of_range("map_cx_index: string index out of range");
    }
    const CxPairResult mapped =
        cx_pair_map(pauli_at(i, control, n_qubits), pauli_at(i, target, n_qubits));
    StringIndex out = with_pauli_at(i, control, n_qubits, mapped.control_after);
    out = with_pauli_at(out, target, n_qubits, mapped.target_after);
    return {out, mapped.sign};
}

CxIndexTable build_cx_table(std::size_t control, std::size_t target, std::size_t n_qubits,
                            std::uint64_t* map_calls) {
    const std::size_t size = static_cast<std::size_t>(pow4(n_qubits));
    CxIndexTable table;
    table.new_index.resize(size);
    table.sign.resize(size);
    std::atomic<std::uint64_t> calls{0};
    exec::parallel_for(size, 4096, [&](std::size_t begin, std::size_t end) {
        std::uint64_t local_calls = 0;
        for (std::size_t i = begin; i < end; ++i) {
            const auto [index, sign] = map_cx_index(i, control, target, n_qubits);
            ++local_calls;
            table.new_index[i] = index;
            table.sign[i] = static_cast<std::int8_t>(sign);
        }
        calls.fetch_add(local_calls, std::memory_order_relaxed);
    });
    if (map_calls != nullptr) {
        *map_calls += calls.load();
    }
    return table;
}

Luts construct_lut(const OperatorSequence& seq) {
    const std::size_t n = seq.n_qubits;
    Luts luts;
    luts.noncx = LutNonCX(seq.num_noncx, n);
    luts.cx = LutCX(n);

    // Non-CX table: one independent cell per (group, wire, basis letter).
    std::vector<const OperatorGroup*> noncx_groups(seq.num_noncx, nullptr);
    for (const OperatorGroup& group : seq.groups) {
        if (group.kind == GroupKind::NonCX) {
            noncx_groups[group.index] = &group;
        }
    }
    const std::size_t cells = seq.num_noncx * n;
    std::atomic<std::uint64_t> noncx_calls{0};
    exec::parallel_for(cells, 8, [&](std::size_t begin, std::size_t end) {
        std::uint64_t local_calls = 0;
        for (std::size_t cell = begin; cell < end; ++cell) {
            const std::size_t k = cell / n;
            const std::size_t j = cell % n;
            const std::vector<Instructor>& wire_gates = noncx_groups[k]->by_wire[j];
            for (const Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                WeightVector w{0.0, 0.0, 0.0, 0.0};
                w[static_cast<std::size_t>(p)] = 1.0;
                for (const Instructor& ins : wire_gates) {
                    w = apply_gate_to_weights(w, ins.name, ins.theta);
                    ++local_calls;
                }
                std::copy(w.begin(), w.end(), luts.noncx.row(k, j, p).begin());
            }
        }
        noncx_calls.fetch_add(local_calls, std::memory_order_relaxed);
    });
    luts.stats.noncx_map_calls = noncx_calls.load();

    // CX tables only for the wire pairs the sequence uses.
    std::set<std::pair<std::size_t, std::size_t>> used_pairs;
    for (const OperatorGroup& group : seq.groups) {
        if (group.kind == GroupKind::CX) {
            for (const auto& [control, target] : group.gates) {
                used_pairs.emplace(control, target);
            }
        }
    }
    for (const auto& [control, target] : used_pairs) {
        luts.cx.ensure_pair(control, target, &luts.stats.cx_map_calls);
    }
    return luts;
}

}  // namespace pstab
