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

#ifndef PSTAB_SIMULATE_HPP
#define PSTAB_SIMULATE_HPP

#include "pstab/circuit.hpp"
#include "pstab/density.hpp"
#include "pstab/engine.hpp"

namespace pstab {

struct StageTimings {
    double encode_ms = 0.0;  // stabilizer init + LUT construction
    double map_ms = 0.0;     // operator groups
    double decode_ms = 0.0;  // density assembly
    double total_ms = 0.0;
};

struct SimulateOptions {
    /// false = baseline mode: every gate becomes its own group.
    bool grouped = true;
};

struct SimulationResult {
    DensityMatrix density;
    StageTimings timings;
    std::size_t num_gates = 0;
    std::size_t num_noncx_groups = 0;  // K
    std::size_t num_cx_groups = 0;     // K'
    std::vector<StabilizerState> final_stabilizers;
};

/// Full encode -> map -> decode pipeline with per-stage wall-clock timings.
SimulationResult simulate(const Circuit& c, const SimulateOptions& options = {});

}  // namespace pstab

#endif
