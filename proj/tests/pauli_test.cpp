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

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "pstab/oracle.hpp"
#include "test_support.hpp"

namespace pstab {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(pauli_codec, string_to_index) {
    const std::array<Pauli, 3> xyz = {Pauli::X, Pauli::Y, Pauli::Z};
    EXPECT_EQ(string_to_index(xyz), 27u);

    const std::array<Pauli, 3> iii = {Pauli::I, Pauli::I, Pauli::I};
    EXPECT_EQ(string_to_index(iii), 0u);

    const std::array<Pauli, 2> zz = {Pauli::Z, Pauli::Z};
    EXPECT_EQ(string_to_index(zz), 15u);
}

TEST(pauli_codec, index_to_string) {
    EXPECT_EQ(index_to_string(27, 3), (std::vector<Pauli>{Pauli::X, Pauli::Y, Pauli::Z}));
    EXPECT_EQ(index_to_string(0, 4), std::vector<Pauli>(4, Pauli::I));
    // Left-pad with I when the string is wider than the index needs.
    EXPECT_EQ(index_to_string(27, 4),
              (std::vector<Pauli>{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}));
    EXPECT_THROW(index_to_string(16, 2), std::out_of_range);
}

TEST(pauli_codec, round_trip_exhaustive) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (StringIndex i = 0; i < pow4(n); ++i) {
            const std::vector<Pauli> letters = index_to_string(i, n);
            ASSERT_EQ(string_to_index(letters), i) << "n=" << n;
        }
    }
}

TEST(pauli_codec, digit_accessors) {
    // XYZ: wire 0 is the most significant digit.
    EXPECT_EQ(pauli_at(27, 0, 3), Pauli::X);
    EXPECT_EQ(pauli_at(27, 1, 3), Pauli::Y);
    EXPECT_EQ(pauli_at(27, 2, 3), Pauli::Z);
    EXPECT_EQ(with_pauli_at(27, 0, 3, Pauli::I), 11u);  // IYZ
    EXPECT_EQ(index_to_label(27, 3), "XYZ");
}

TEST(gate_maps, table_rows) {
    const WeightVector x = {0, 1, 0, 0};
    const double theta = 0.3;

    // RY on X: cos(theta) X - sin(theta) Z.
    const WeightVector ry = apply_gate_to_weights(x, Gate::RY, theta);
    EXPECT_DOUBLE_EQ(ry[0], 0.0);
    EXPECT_DOUBLE_EQ(ry[1], std::cos(theta));
    EXPECT_DOUBLE_EQ(ry[2], 0.0);
    EXPECT_DOUBLE_EQ(ry[3], -std::sin(theta));

    // H swaps X and Z.
    const WeightVector h = apply_gate_to_weights(x, Gate::H, 0.0);
    EXPECT_EQ(h, (WeightVector{0, 0, 0, 1}));

    // S: X -> Y.
    const WeightVector s = apply_gate_to_weights(x, Gate::S, 0.0);
    EXPECT_EQ(s, (WeightVector{0, 0, 1, 0}));

    EXPECT_THROW(apply_gate_to_weights(x, Gate::CX, 0.0), std::invalid_argument);
}

TEST(gate_maps, identity_is_conserved) {
    const WeightVector identity = {1, 0, 0, 0};
    for (const Gate g : {Gate::H, Gate::S, Gate::RX, Gate::RY, Gate::RZ}) {
        EXPECT_EQ(apply_gate_to_weights(identity, g, 0.77), identity) << gate_name(g);
    }
}

TEST(gate_maps, norm_preserved_on_random_vectors) {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 200; ++trial) {
        WeightVector w = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
        const Gate g = std::array{Gate::H, Gate::S, Gate::RX, Gate::RY, Gate::RZ}[rng() % 5];
        const WeightVector out = apply_gate_to_weights(w, g, testing::random_angle(rng));
        double before = 0;
        double after = 0;
        for (std::size_t a = 0; a < 4; ++a) {
            before += w[a] * w[a];
            after += out[a] * out[a];
        }
        EXPECT_NEAR(before, after, 1e-12);
    }
}

// Every weight map must agree with dense conjugation g sigma g^dagger.
TEST(gate_maps, matches_dense_conjugation) {
    for (const Gate g : {Gate::H, Gate::S, Gate::RX, Gate::RY, Gate::RZ}) {
        for (const double theta : {0.0, kPi / 7, kPi / 3, 1.0, 2 * kPi}) {
            Circuit fragment;
            fragment.n_qubits = 1;
            fragment.instructors.push_back(gate_is_rotation(g) ? make_rotation(g, 0, theta)
                                                               : make_gate(g, 0));
            for (const Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                WeightVector one_hot{};
                one_hot[static_cast<std::size_t>(p)] = 1.0;
                const WeightVector mapped = apply_gate_to_weights(one_hot, g, theta);
                const WeightVector expected = testing::pauli_coefficients(
                    oracle::conjugate_pauli(static_cast<StringIndex>(p), fragment));
                for (std::size_t a = 0; a < 4; ++a) {
                    EXPECT_NEAR(mapped[a], expected[a], 1e-12)
                        << gate_name(g) << " theta=" << theta << " input=" << pauli_char(p);
                }
            }
        }
    }
}

TEST(cx_pairs, substitution_rules) {
    const CxPairResult xi = cx_pair_map(Pauli::X, Pauli::I);
    EXPECT_EQ(xi.control_after, Pauli::X);
    EXPECT_EQ(xi.target_after, Pauli::X);
    EXPECT_EQ(xi.sign, 1);

    const CxPairResult xz = cx_pair_map(Pauli::X, Pauli::Z);
    EXPECT_EQ(xz.control_after, Pauli::Y);
    EXPECT_EQ(xz.target_after, Pauli::Y);
    EXPECT_EQ(xz.sign, -1);

    const CxPairResult ii = cx_pair_map(Pauli::I, Pauli::I);
    EXPECT_EQ(ii.control_after, Pauli::I);
    EXPECT_EQ(ii.target_after, Pauli::I);
    EXPECT_EQ(ii.sign, 1);

    const CxPairResult yy = cx_pair_map(Pauli::Y, Pauli::Y);
    EXPECT_EQ(yy.control_after, Pauli::X);
    EXPECT_EQ(yy.target_after, Pauli::Z);
    EXPECT_EQ(yy.sign, -1);
}

TEST(cx_pairs, involution_with_positive_sign_product) {
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            const CxPairResult once = cx_pair_map(static_cast<Pauli>(a), static_cast<Pauli>(b));
            const CxPairResult twice = cx_pair_map(once.control_after, once.target_after);
            EXPECT_EQ(twice.control_after, static_cast<Pauli>(a));
            EXPECT_EQ(twice.target_after, static_cast<Pauli>(b));
            EXPECT_EQ(once.sign * twice.sign, 1);
        }
    }
}

// All 16 pairs against CX (P_a x P_b) CX^dagger computed densely.
TEST(cx_pairs, matches_dense_conjugation) {
    Circuit fragment;
    fragment.n_qubits = 2;
    fragment.instructors.push_back(make_cx(0, 1));
    for (StringIndex i = 0; i < 16; ++i) {
        const Pauli control = pauli_at(i, 0, 2);
        const Pauli target = pauli_at(i, 1, 2);
        const CxPairResult mapped = cx_pair_map(control, target);
        const std::array<Pauli, 2> after = {mapped.control_after, mapped.target_after};
        const Eigen::MatrixXcd expected =
            static_cast<double>(mapped.sign) * oracle::dense_pauli(string_to_index(after), 2);
        const Eigen::MatrixXcd actual = oracle::conjugate_pauli(i, fragment);
        EXPECT_LT((actual - expected).norm(), 1e-12) << index_to_label(i, 2);
    }
}

}  // namespace
}  // namespace pstab
