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

#include <CLI11.hpp>

#include "pstab/cli.hpp"

namespace {

void add_source_flags(CLI::App* cmd, pstab::cli::CircuitSource* source) {
    cmd->add_option("--circuit", source->circuit_path, "Circuit file to load");
    cmd->add_option("--ansatz", source->ansatz, "Generated ansatz name (wchain-zxz)");
    cmd->add_option("--qubits", source->qubits, "Qubit count for the generated ansatz");
    cmd->add_option("--layers", source->layers, "Layer count for the generated ansatz");
    cmd->add_option("--repeats", source->repeats, "Rotation-part repeats per layer");
    cmd->add_option("--seed", source->seed, "RNG seed for generated angles");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lookup-table stabilizer simulator for deep few-qubit circuits"};
    app.require_subcommand(1);

    pstab::cli::RunOptions run_options;
    CLI::App* run = app.add_subcommand("run", "Simulate a circuit to its density matrix");
    add_source_flags(run, &run_options.source);
    run->add_option("--out", run_options.out_path, "Write the density matrix here");
    run->add_option("--format", run_options.format, "Output format: csv or bin")
        ->check(CLI::IsMember({"csv", "bin"}));
    run->add_option("--threads", run_options.threads, "Worker cap (0 = all cores)");

    pstab::cli::VerifyOptions verify_options;
    CLI::App* verify = app.add_subcommand("verify", "Cross-check against the state-vector oracle");
    add_source_flags(verify, &verify_options.source);
    verify->add_option("--threads", verify_options.threads, "Worker cap (0 = all cores)");
    verify->add_flag("--corrupt-hook", verify_options.corrupt_hook)->group("");

    pstab::cli::OrderOptions order_options;
    CLI::App* order = app.add_subcommand("order", "Trace stabilizer order gate by gate");
    add_source_flags(order, &order_options.source);
    order->add_option("--out", order_options.out_path, "CSV output path (default stdout)");
    order->add_option("--threads", order_options.threads, "Worker cap (0 = all cores)");

    pstab::cli::BenchOptions bench_options;
    std::string baseline = "on";
    CLI::App* bench = app.add_subcommand("bench", "Layer/repeat sweeps with per-stage timings");
    bench->add_option("--qubits", bench_options.qubits, "Qubit counts")->delimiter(',');
    bench->add_option("--layers", bench_options.layers, "Layer counts")->delimiter(',');
    bench->add_option("--repeats", bench_options.repeats, "Rotation-part repeats")->delimiter(',');
    bench->add_option("--runs", bench_options.runs, "Repetitions per configuration");
    bench->add_option("--seed", bench_options.seed, "RNG seed for generated angles");
    bench->add_option("--threads", bench_options.threads, "Worker cap (0 = all cores)");
    bench->add_option("--baseline", baseline, "Also time the gate-by-gate baseline (on|off)")
        ->check(CLI::IsMember({"on", "off"}));
    bench->add_option("--csv", bench_options.csv_path, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? pstab::cli::kExitOk : pstab::cli::kExitUsage;
    }

    if (run->parsed()) {
        return pstab::cli::cmd_run(run_options);
    }
    if (verify->parsed()) {
        return pstab::cli::cmd_verify(verify_options);
    }
    if (order->parsed()) {
        return pstab::cli::cmd_order(order_options);
    }
    bench_options.baseline = baseline == "on";
    return pstab::cli::cmd_bench(bench_options);
}
