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

#include "pstab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "pstab/exec.hpp"
#include "pstab/lut.hpp"
#include "pstab/oracle.hpp"
#include "pstab/simulate.hpp"

namespace pstab::cli {

namespace {

Circuit load_circuit(const CircuitSource& source) {
    if (!source.circuit_path.empty()) {
        std::ifstream in(source.circuit_path, std::ios::binary);
        if (!in) {
            throw std::ios_base::failure("cannot open circuit file '" + source.circuit_path + "'");
        }
        std::ostringstream text;
        text << in.rdbuf();
        return parse_circuit(text.str());
    }
    if (source.ansatz == "wchain-zxz") {
        return generate_wchain_zxz(source.qubits, source.layers, source.repeats, source.seed);
    }
    throw std::invalid_argument("unknown ansatz '" + source.ansatz +
                                "' (expected --circuit PATH or --ansatz wchain-zxz)");
}

void apply_threads(int threads) {
    exec::set_max_threads(threads);
}

/// trace == 1, Hermitian, and pure (rho^2 == rho), all to 1e-9.
bool check_density_invariants(const DensityMatrix& d, std::string& message) {
    const double trace_err = std::abs(d.rho.trace().real() - 1.0) + std::abs(d.rho.trace().imag());
    const double herm_err = (d.rho - d.rho.adjoint()).norm();
    const double purity_err = (d.rho * d.rho - d.rho).norm();
    if (trace_err > 1e-9 || herm_err > 1e-9 || purity_err > 1e-9) {
        std::ostringstream msg;
        msg << "density invariant violated: |trace-1|=" << trace_err << " |rho-rho^H|=" << herm_err
            << " |rho^2-rho|=" << purity_err;
        message = msg.str();
        return false;
    }
    return true;
}

int write_file(const std::string& path, const std::string& data, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitIo;
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) {
        std::cerr << "error: short write to '" << path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

std::string bench_csv_header() {
    return "n,layers,repeats,gates,K,Kp,stage,time_ms,run_idx,threads\n";
}

std::string bench_record_csv(const BenchRecord& r) {
    char line[256];
    std::snprintf(line, sizeof(line), "%zu,%zu,%zu,%zu,%zu,%zu,%s,%.6f,%zu,%d\n", r.n, r.layers,
                  r.repeats, r.gates, r.num_noncx, r.num_cx, r.stage.c_str(), r.time_ms, r.run_idx,
                  r.threads);
    return line;
}

int cmd_run(const RunOptions& options) {
    try {
        apply_threads(options.threads);
        const Circuit circuit = load_circuit(options.source);
        const SimulationResult result = simulate(circuit);

        std::string message;
        if (!check_density_invariants(result.density, message)) {
            std::cerr << "error: " << message << "\n";
            return kExitVerification;
        }

        std::printf("qubits=%zu gates=%zu K=%zu K'=%zu\n", circuit.n_qubits, result.num_gates,
                    result.num_noncx_groups, result.num_cx_groups);
        std::printf("trace=%.12f rho00=%.12f\n", result.density.rho.trace().real(),
                    rho00(result.density));
        for (std::size_t k = 0; k < circuit.n_qubits; ++k) {
            std::printf("p0[wire %zu]=%.12f\n", k, measure_z(result.density, k));
        }
        std::printf("encode_ms=%.3f map_ms=%.3f decode_ms=%.3f total_ms=%.3f\n",
                    result.timings.encode_ms, result.timings.map_ms, result.timings.decode_ms,
                    result.timings.total_ms);

        if (!options.out_path.empty()) {
            if (options.format == "csv") {
                return write_file(options.out_path, density_to_csv(result.density), false);
            }
            if (options.format == "bin") {
                const std::vector<std::byte> blob = density_to_binary(result.density);
                return write_file(options.out_path,
                                  std::string(reinterpret_cast<const char*>(blob.data()), blob.size()),
                                  true);
            }
            std::cerr << "error: unknown format '" << options.format << "' (expected csv or bin)\n";
            return kExitUsage;
        }
        return kExitOk;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_verify(const VerifyOptions& options) {
    try {
        apply_threads(options.threads);
        const Circuit circuit = load_circuit(options.source);
        if (circuit.n_qubits > 10) {
            std::cerr << "error: verify is limited to 10 qubits (dense oracle)\n";
            return kExitUsage;
        }

        SimulationResult result = simulate(circuit);
        if (options.corrupt_hook) {
            result.density.rho(0, 0) += 1e-6;
        }
        const DensityMatrix reference =
            oracle::density_from_statevector(oracle::simulate_statevector(circuit));

        const double distance = (result.density.rho - reference.rho).norm();
        std::printf("frobenius_distance=%.3e\n", distance);
        if (!(distance <= 1e-9)) {
            std::cerr << "verification FAILED (tolerance 1e-9)\n";
            return kExitVerification;
        }
        std::printf("verification OK\n");
        return kExitOk;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_order(const OrderOptions& options) {
    try {
        apply_threads(options.threads);
        const Circuit circuit = load_circuit(options.source);
        const OperatorSequence seq = split_gate_by_gate(circuit);
        const Luts luts = construct_lut(seq);

        std::ostringstream csv;
        csv << "gate_idx,stabilizer_idx,order\n";
        const GroupObserver observer = [&csv](std::size_t group_pos,
                                              const std::vector<StabilizerState>& stabs) {
            for (std::size_t j = 0; j < stabs.size(); ++j) {
                csv << group_pos << ',' << j << ',' << stabilizer_order(stabs[j]) << '\n';
            }
        };
        run_map_stage(init_stabilizers(circuit.n_qubits), seq, luts, observer);

        if (options.out_path.empty()) {
            std::cout << csv.str();
            return kExitOk;
        }
        return write_file(options.out_path, csv.str(), false);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

std::vector<BenchRecord> run_bench_sweep(const BenchOptions& options, std::ostream* out) {
    apply_threads(options.threads);
    std::vector<BenchRecord> records;

    const auto emit = [&records, out](BenchRecord record) {
        if (out != nullptr) {
            *out << bench_record_csv(record);
        }
        records.push_back(std::move(record));
    };

    for (const std::size_t n : options.qubits) {
        for (const std::size_t layers : options.layers) {
            for (const std::size_t repeats : options.repeats) {
                const Circuit circuit = generate_wchain_zxz(n, layers, repeats, options.seed);
                const OperatorSequence grouped = split_operators(circuit);

                BenchRecord base;
                base.n = n;
                base.layers = layers;
                base.repeats = repeats;
                base.gates = circuit.instructors.size();
                base.num_noncx = grouped.num_noncx;
                base.num_cx = grouped.num_cx;
                base.threads = exec::max_threads();

                for (std::size_t run = 0; run < options.runs; ++run) {
                    base.run_idx = run;
                    const SimulationResult result = simulate(circuit);

                    BenchRecord record = base;
                    record.stage = "encode";
                    record.time_ms = result.timings.encode_ms;
                    emit(record);
                    record.stage = "map";
                    record.time_ms = result.timings.map_ms;
                    emit(record);
                    record.stage = "decode";
                    record.time_ms = result.timings.decode_ms;
                    emit(record);
                    record.stage = "total";
                    record.time_ms = result.timings.total_ms;
                    emit(record);

                    if (options.baseline) {
                        const SimulationResult baseline =
                            simulate(circuit, SimulateOptions{.grouped = false});
                        record.stage = "baseline_total";
                        record.time_ms = baseline.timings.total_ms;
                        emit(record);
                    }
                }
            }
        }
    }
    return records;
}

int cmd_bench(const BenchOptions& options) {
    try {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!options.csv_path.empty()) {
            file.open(options.csv_path);
            if (!file) {
                std::cerr << "error: cannot open CSV file '" << options.csv_path << "'\n";
                return kExitIo;
            }
            out = &file;
        }
        *out << bench_csv_header();
        run_bench_sweep(options, out);
        if (!*out) {
            std::cerr << "error: short write to benchmark CSV\n";
            return kExitIo;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace pstab::cli
