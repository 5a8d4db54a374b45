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

#ifndef PSTAB_CLI_HPP
#define PSTAB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pstab::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;         // bad flags or circuit parse errors
inline constexpr int kExitVerification = 2;  // invariant or oracle check failed
inline constexpr int kExitIo = 3;

/// Where the circuit comes from: a file, or the generated benchmark ansatz.
struct CircuitSource {
    std::string circuit_path;  // empty when generating
    std::string ansatz;        // "wchain-zxz"
    std::size_t qubits = 0;
    std::size_t layers = 1;
    std::size_t repeats = 1;
    std::uint64_t seed = 12345;
};

struct RunOptions {
    CircuitSource source;
    std::string out_path;
    std::string format = "csv";  // csv | bin
    int threads = 0;             // 0 = hardware default
};

struct VerifyOptions {
    CircuitSource source;
    int threads = 0;
    bool corrupt_hook = false;  // negative-control hook: perturbs the result
};

struct OrderOptions {
    CircuitSource source;
    std::string out_path;  // empty = stdout
    int threads = 0;
};

struct BenchOptions {
    std::vector<std::size_t> qubits = {2, 3, 4};
    std::vector<std::size_t> layers = {100};
    std::vector<std::size_t> repeats = {1};
    std::size_t runs = 10;
    std::uint64_t seed = 12345;
    int threads = 0;
    bool baseline = true;
    std::string csv_path;
};

/// One raw benchmark measurement; averaging is left to analysis tooling.
struct BenchRecord {
    std::size_t n = 0;
    std::size_t layers = 0;
    std::size_t repeats = 0;
    std::size_t gates = 0;
    std::size_t num_noncx = 0;  // K
    std::size_t num_cx = 0;     // K'
    std::string stage;          // encode | map | decode | total | baseline_total
    double time_ms = 0.0;
    std::size_t run_idx = 0;
    int threads = 1;
};

std::string bench_csv_header();
std::string bench_record_csv(const BenchRecord& r);

/// Runs the benchmark sweep and returns raw records (also streamed to `out`
/// when non-null, one row per record as it is measured).
std::vector<BenchRecord> run_bench_sweep(const BenchOptions& options, std::ostream* out);

int cmd_run(const RunOptions& options);
int cmd_verify(const VerifyOptions& options);
int cmd_order(const OrderOptions& options);
int cmd_bench(const BenchOptions& options);

}  // namespace pstab::cli

#endif
