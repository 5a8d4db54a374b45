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

#include "pstab/simulate.hpp"

#include <chrono>

#include "pstab/lut.hpp"

namespace pstab {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

SimulationResult simulate(const Circuit& c, const SimulateOptions& options) {
    SimulationResult result;
    result.num_gates = c.instructors.size();

    const auto t_total = std::chrono::steady_clock::now();
    const OperatorSequence seq =
        options.grouped ? split_operators(c) : split_gate_by_gate(c);
    result.num_noncx_groups = seq.num_noncx;
    result.num_cx_groups = seq.num_cx;

    const auto t_encode = std::chrono::steady_clock::now();
    std::vector<StabilizerState> stabs = init_stabilizers(c.n_qubits);
    const Luts luts = construct_lut(seq);
    result.timings.encode_ms = ms_since(t_encode);

    const auto t_map = std::chrono::steady_clock::now();
    stabs = run_map_stage(std::move(stabs), seq, luts);
    result.timings.map_ms = ms_since(t_map);

    const auto t_decode = std::chrono::steady_clock::now();
    result.density = to_density(stabs);
    result.timings.decode_ms = ms_since(t_decode);

    result.timings.total_ms = ms_since(t_total);
    result.final_stabilizers = std::move(stabs);
    return result;
}

}  // namespace pstab
