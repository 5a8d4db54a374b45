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

#include "pstab/engine.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "pstab/exec.hpp"

namespace pstab {

StabilizerState StabilizerState::zero(std::size_t n_qubits) {
    StabilizerState s;
    s.n_qubits = n_qubits;
    s.lambda.assign(pow4(n_qubits), 0.0);
    return s;
}

StabilizerState StabilizerState::one_hot(std::size_t n_qubits, StringIndex index, double value) {
    StabilizerState s = zero(n_qubits);
    s.lambda.at(index) = value;
    return s;
}

WeightTensor::WeightTensor(std::size_t n_qubits, std::size_t num_rows)
    : n_qubits_(n_qubits),
      num_rows_(num_rows),
      source_index_(num_rows, 0),
      row_weight_(num_rows, 0.0),
      weights_(num_rows * n_qubits * 4, 0.0) {}

std::vector<StabilizerState> init_stabilizers(std::size_t n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("init_stabilizers: need at least one qubit");
    }
    std::vector<StabilizerState> stabs;
    stabs.reserve(n_qubits);
    for (std::size_t j = 0; j < n_qubits; ++j) {
        const StringIndex z_j = with_pauli_at(0, j, n_qubits, Pauli::Z);
        stabs.push_back(StabilizerState::one_hot(n_qubits, z_j));
    }
    return stabs;
}

WeightTensor expand_noncx(const StabilizerState& s, const LutNonCX& lut, std::size_t k) {
    const std::size_t n = s.n_qubits;
    std::vector<StringIndex> nonzero;
    nonzero.reserve(64);
    for (StringIndex i = 0; i < s.lambda.size(); ++i) {
        if (s.lambda[i] != 0.0) {
            nonzero.push_back(i);
        }
    }

    WeightTensor t(n, nonzero.size());
    exec::parallel_for(nonzero.size(), 512, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            const StringIndex i = nonzero[r];
            t.source_index(r) = i;
            t.weight(r) = s.lambda[i];
            for (std::size_t j = 0; j < n; ++j) {
                const Pauli p = pauli_at(i, j, n);
                auto out = t.wire_weights(r, j);
                if (p == Pauli::I) {
                    out[0] = 1.0;
                    out[1] = out[2] = out[3] = 0.0;
                } else {
                    const auto row = lut.row(k, j, p);
                    out[0] = row[0];
                    out[1] = row[1];
                    out[2] = row[2];
                    out[3] = row[3];
                }
            }
        }
    });
    return t;
}

namespace {

// Depth-first enumeration of one tensor row's Cartesian product. Wires whose
// weight row is one-hot (I included) contribute a single branch, so a string
// with n_I identity letters costs 3^(n - n_I) combinations, not 4^n.
void accumulate_row(const WeightTensor& t, std::size_t r, std::span<double> out) {
    const std::size_t n = t.n_qubits();
    // Iterative odometer over per-wire nonzero letters.
    std::array<std::array<std::uint8_t, 4>, 32> letters{};
    std::array<std::uint8_t, 32> counts{};
    for (std::size_t j = 0; j < n; ++j) {
        const auto w = t.wire_weights(r, j);
        std::uint8_t count = 0;
        for (std::uint8_t a = 0; a < 4; ++a) {
            if (w[a] != 0.0) {
                letters[j][count++] = a;
            }
        }
        if (count == 0) {
            return;  // a zero wire row annihilates the whole string
        }
        counts[j] = count;
    }

    std::array<std::uint8_t, 32> choice{};
    std::array<double, 33> product{};
    std::array<StringIndex, 33> prefix{};
    product[0] = t.weight(r);
    prefix[0] = 0;
    std::size_t depth = 0;
    while (true) {
        while (depth < n) {
            const std::uint8_t a = letters[depth][choice[depth]];
            product[depth + 1] = product[depth] * t.wire_weights(r, depth)[a];
            prefix[depth + 1] = (prefix[depth] << 2) | a;
            ++depth;
        }
        out[prefix[n]] += product[n];
        // Advance the odometer.
        while (depth > 0 && ++choice[depth - 1] == counts[depth - 1]) {
            choice[depth - 1] = 0;
            --depth;
        }
        if (depth == 0) {
            return;
        }
        --depth;
    }
}

}  // namespace

StabilizerState flatten(const WeightTensor& t) {
    const std::size_t n = t.n_qubits();
    if (n > 31) {
        throw std::invalid_argument("flatten: qubit count too large");
    }
    const std::size_t size = static_cast<std::size_t>(pow4(n));
    const std::size_t rows = t.num_rows();

    // Chunk boundaries depend only on the row count, never on the worker
    // count, and the partials are merged in a fixed pairwise tree; together
    // this makes the summation order (and the result bits) invariant.
    const std::size_t num_chunks = std::min<std::size_t>(rows == 0 ? 1 : rows, 64);
    std::vector<double> partials(num_chunks * size, 0.0);

    exec::parallel_for(num_chunks, 1, [&](std::size_t chunk_begin, std::size_t chunk_end) {
        for (std::size_t c = chunk_begin; c < chunk_end; ++c) {
            const std::span<double> partial(partials.data() + c * size, size);
            const std::size_t begin = rows * c / num_chunks;
            const std::size_t end = rows * (c + 1) / num_chunks;
            for (std::size_t r = begin; r < end; ++r) {
                accumulate_row(t, r, partial);
            }
        }
    });

    for (std::size_t stride = 1; stride < num_chunks; stride *= 2) {
        const std::size_t pairs = (num_chunks - stride + 2 * stride - 1) / (2 * stride);
        exec::parallel_for(pairs, 1, [&](std::size_t pair_begin, std::size_t pair_end) {
            for (std::size_t p = pair_begin; p < pair_end; ++p) {
                const std::size_t dst = 2 * stride * p;
                const std::size_t src = dst + stride;
                if (src < num_chunks) {
                    double* a = partials.data() + dst * size;
                    const double* b = partials.data() + src * size;
                    for (std::size_t i = 0; i < size; ++i) {
                        a[i] += b[i];
                    }
                }
            }
        });
    }

    StabilizerState out;
    out.n_qubits = n;
    out.lambda.assign(partials.begin(), partials.begin() + static_cast<std::ptrdiff_t>(size));
    for (double& v : out.lambda) {
        if (std::abs(v) < kPruneEpsilon) {
            v = 0.0;
        }
    }
    return out;
}

StabilizerState apply_cx_group(const StabilizerState& s, const OperatorGroup& g, const LutCX& lut) {
    if (g.kind != GroupKind::CX) {
        throw std::invalid_argument("apply_cx_group: group is not a CX group");
    }
    const std::size_t size = s.lambda.size();
    StabilizerState current = s;
    StabilizerState next = StabilizerState::zero(s.n_qubits);
    for (const auto& [control, target] : g.gates) {
        const CxIndexTable& table = lut.table(control, target);
        const double* in = current.lambda.data();
        double* out = next.lambda.data();
        exec::parallel_for(size, 4096, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                out[table.new_index[i]] = static_cast<double>(table.sign[i]) * in[i];
            }
        });
        std::swap(current.lambda, next.lambda);
    }
    return current;
}

namespace {

StabilizerState apply_groups(StabilizerState state, const OperatorSequence& seq, const Luts& luts,
                             std::size_t first_group, std::size_t last_group) {
    for (std::size_t g = first_group; g < last_group; ++g) {
        const OperatorGroup& group = seq.groups[g];
        if (group.kind == GroupKind::NonCX) {
            state = flatten(expand_noncx(state, luts.noncx, group.index));
        } else {
            state = apply_cx_group(state, group, luts.cx);
        }
    }
    return state;
}

}  // namespace

std::vector<StabilizerState> run_map_stage(std::vector<StabilizerState> stabs,
                                           const OperatorSequence& seq, const Luts& luts,
                                           const GroupObserver& observer) {
    const std::size_t count = stabs.size();
    if (observer) {
        // Barrier after every group so the observer sees a consistent stage.
        for (std::size_t g = 0; g < seq.groups.size(); ++g) {
            exec::parallel_for(count, 1, [&](std::size_t begin, std::size_t end) {
                for (std::size_t j = begin; j < end; ++j) {
                    stabs[j] = apply_groups(std::move(stabs[j]), seq, luts, g, g + 1);
                }
            });
            observer(g, stabs);
        }
        return stabs;
    }

    exec::parallel_for(count, 1, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            stabs[j] = apply_groups(std::move(stabs[j]), seq, luts, 0, seq.groups.size());
        }
    });
    return stabs;
}

std::size_t stabilizer_order(const StabilizerState& s) {
    std::size_t order = 0;
    for (const double v : s.lambda) {
        order += v != 0.0 ? 1 : 0;
    }
    return order;
}

double lambda_norm_sq(const StabilizerState& s) {
    double norm = 0.0;
    for (const double v : s.lambda) {
        norm += v * v;
    }
    return norm;
}

}  // namespace pstab
