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

#include "pstab/circuit.hpp"

#include <random>

#include "gtest/gtest.h"
#include "pstab/oracle.hpp"
#include "test_support.hpp"

namespace pstab {
namespace {

TEST(parse, single_gate) {
    const Circuit c = parse_circuit("qubits 1\nh 0");
    EXPECT_EQ(c.n_qubits, 1u);
    ASSERT_EQ(c.instructors.size(), 1u);
    EXPECT_EQ(c.instructors[0], make_gate(Gate::H, 0));
}

TEST(parse, rotation_and_cx) {
    const Circuit c = parse_circuit("qubits 3\nrx 0 0.5\ncx 0 1");
    EXPECT_EQ(c.n_qubits, 3u);
    ASSERT_EQ(c.instructors.size(), 2u);
    EXPECT_EQ(c.instructors[0], make_rotation(Gate::RX, 0, 0.5));
    EXPECT_EQ(c.instructors[1], make_cx(0, 1));
}

TEST(parse, comments_case_and_whitespace) {
    const Circuit c = parse_circuit(
        "# header comment\n"
        "qubits 2\n"
        "\n"
        "H 0   # trailing comment\n"
        "  Ry 1 1.5\n"
        "CX 1 0\n");
    ASSERT_EQ(c.instructors.size(), 3u);
    EXPECT_EQ(c.instructors[0], make_gate(Gate::H, 0));
    EXPECT_EQ(c.instructors[1], make_rotation(Gate::RY, 1, 1.5));
    EXPECT_EQ(c.instructors[2], make_cx(1, 0));
}

TEST(parse, errors_carry_line_numbers) {
    const auto expect_error = [](const char* text, const char* fragment) {
        try {
            parse_circuit(text);
            FAIL() << "expected parse error for: " << text;
        } catch (const std::invalid_argument& e) {
            EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
        }
    };
    expect_error("qubits 2\ncx 1 1", "CX with equal wires");
    expect_error("qubits 2\ncx 1 1", "line 2");
    expect_error("qubits 2\nfoo 0", "unknown gate name");
    expect_error("qubits 2\nh 5", "out of range");
    expect_error("qubits 2\nrx 0", "expects a wire and an angle");
    expect_error("qubits 2\nrx 0 abc", "expected angle");
    expect_error("qubits 2\nh 0 1", "exactly one wire");
    expect_error("h 0", "header");
    expect_error("qubits 0", "positive");
    expect_error("", "header");
}

TEST(parse, serialize_round_trip_is_identity) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const Circuit c = testing::random_circuit(n, 1 + rng() % 60, rng);
        EXPECT_EQ(parse_circuit(serialize_circuit(c)), c);
    }
}

TEST(generate, instructor_count_and_determinism) {
    const Circuit c = generate_wchain_zxz(2, 1, 1, 0);
    EXPECT_EQ(c.n_qubits, 2u);
    // One RY, one CX, and RZ/RX/RZ on both wires.
    EXPECT_EQ(c.instructors.size(), 8u);

    EXPECT_EQ(generate_wchain_zxz(4, 3, 2, 99), generate_wchain_zxz(4, 3, 2, 99));
    EXPECT_NE(generate_wchain_zxz(4, 3, 2, 99), generate_wchain_zxz(4, 3, 2, 100));

    EXPECT_THROW(generate_wchain_zxz(1, 1, 1, 0), std::invalid_argument);
    EXPECT_THROW(generate_wchain_zxz(2, 0, 1, 0), std::invalid_argument);
}

TEST(generate, split_has_one_group_pair_per_layer) {
    for (const std::size_t n : {2u, 3u, 5u}) {
        for (const std::size_t layers : {1u, 5u, 9u}) {
            for (const std::size_t repeats : {1u, 3u}) {
                const OperatorSequence seq =
                    split_operators(generate_wchain_zxz(n, layers, repeats, 1));
                EXPECT_EQ(seq.num_noncx, layers) << "n=" << n;
                EXPECT_EQ(seq.num_cx, layers) << "n=" << n;
                for (std::size_t g = 0; g + 1 < seq.groups.size(); ++g) {
                    EXPECT_NE(seq.groups[g].kind, seq.groups[g + 1].kind);
                }
            }
        }
    }
}

TEST(split, maximal_runs) {
    Circuit c;
    c.n_qubits = 2;
    c.instructors = {make_gate(Gate::H, 0), make_rotation(Gate::RX, 0, 0.3), make_cx(0, 1),
                     make_gate(Gate::H, 1)};
    const OperatorSequence seq = split_operators(c);
    ASSERT_EQ(seq.groups.size(), 3u);
    EXPECT_EQ(seq.num_noncx, 2u);
    EXPECT_EQ(seq.num_cx, 1u);

    const OperatorGroup& u0 = seq.groups[0];
    EXPECT_EQ(u0.kind, GroupKind::NonCX);
    ASSERT_EQ(u0.by_wire[0].size(), 2u);
    EXPECT_EQ(u0.by_wire[0][0].name, Gate::H);
    EXPECT_EQ(u0.by_wire[0][1].name, Gate::RX);
    EXPECT_TRUE(u0.by_wire[1].empty());

    const OperatorGroup& v0 = seq.groups[1];
    EXPECT_EQ(v0.kind, GroupKind::CX);
    EXPECT_EQ(v0.gates, (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}}));

    const OperatorGroup& u1 = seq.groups[2];
    EXPECT_EQ(u1.index, 1u);
    ASSERT_EQ(u1.by_wire[1].size(), 1u);
    EXPECT_EQ(u1.by_wire[1][0].name, Gate::H);
}

TEST(split, starts_with_cx_group_when_first_gate_is_cx) {
    Circuit c;
    c.n_qubits = 2;
    c.instructors = {make_cx(0, 1), make_gate(Gate::H, 0)};
    const OperatorSequence seq = split_operators(c);
    ASSERT_EQ(seq.groups.size(), 2u);
    EXPECT_EQ(seq.groups[0].kind, GroupKind::CX);
    EXPECT_EQ(seq.groups[0].index, 0u);
    EXPECT_EQ(seq.groups[1].kind, GroupKind::NonCX);
    EXPECT_EQ(seq.groups[1].index, 0u);
}

TEST(split, empty_circuit) {
    Circuit c;
    c.n_qubits = 3;
    const OperatorSequence seq = split_operators(c);
    EXPECT_TRUE(seq.groups.empty());
    EXPECT_EQ(seq.num_noncx, 0u);
    EXPECT_EQ(seq.num_cx, 0u);
}

TEST(split, alternation_and_group_count_bound) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const Circuit c = testing::random_circuit(2 + rng() % 3, 1 + rng() % 100, rng);
        const OperatorSequence seq = split_operators(c);
        for (std::size_t g = 0; g + 1 < seq.groups.size(); ++g) {
            ASSERT_NE(seq.groups[g].kind, seq.groups[g + 1].kind);
        }
        const auto k = static_cast<std::int64_t>(seq.num_noncx);
        const auto kp = static_cast<std::int64_t>(seq.num_cx);
        EXPECT_LE(std::abs(k - kp), 1);
    }
}

TEST(split, reflatten_resplit_idempotent) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Circuit c = testing::random_circuit(2 + rng() % 3, 1 + rng() % 80, rng);
        const OperatorSequence seq = split_operators(c);

        Circuit flattened;
        flattened.n_qubits = c.n_qubits;
        flattened.instructors = flatten_sequence(seq);
        const OperatorSequence again = split_operators(flattened);

        ASSERT_EQ(again.groups.size(), seq.groups.size());
        for (std::size_t g = 0; g < seq.groups.size(); ++g) {
            EXPECT_EQ(again.groups[g].kind, seq.groups[g].kind);
            EXPECT_EQ(again.groups[g].by_wire, seq.groups[g].by_wire);
            EXPECT_EQ(again.groups[g].gates, seq.groups[g].gates);
        }

        // The wire partition only reorders commuting gates: the flattened
        // list must be the same circuit physically.
        const auto rho_a = oracle::density_from_statevector(oracle::simulate_statevector(c));
        const auto rho_b =
            oracle::density_from_statevector(oracle::simulate_statevector(flattened));
        EXPECT_LT((rho_a.rho - rho_b.rho).norm(), 1e-12);
    }
}

TEST(split, gate_by_gate_baseline_groups_of_one) {
    std::mt19937_64 rng(29);
    const Circuit c = testing::random_circuit(3, 40, rng);
    const OperatorSequence seq = split_gate_by_gate(c);
    ASSERT_EQ(seq.groups.size(), c.instructors.size());
    for (const OperatorGroup& group : seq.groups) {
        EXPECT_EQ(group.size(), 1u);
    }
}

}  // namespace
}  // namespace pstab
