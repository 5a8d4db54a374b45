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

#include "pstab/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>

#include "gtest/gtest.h"
#include "pstab/lut.hpp"
#include "pstab/oracle.hpp"
#include "pstab/simulate.hpp"
#include "test_support.hpp"

namespace pstab {
namespace {

TEST(add, initial_z_generator) {
    const StabilizerState z = StabilizerState::one_hot(1, 3);
    const Eigen::MatrixXcd m = add_terms(z);
    Eigen::MatrixXcd expected(2, 2);
    expected << 2, 0, 0, 0;
    EXPECT_LT((m - expected).norm(), 1e-15);
}

TEST(add, post_ry_generator) {
    const double theta = 0.9;
    StabilizerState s = StabilizerState::zero(1);
    s.lambda[1] = std::cos(theta);
    s.lambda[3] = -std::sin(theta);
    const Eigen::MatrixXcd m = add_terms(s);
    const Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(2, 2) +
                                      std::cos(theta) * oracle::dense_pauli(1, 1) -
                                      std::sin(theta) * oracle::dense_pauli(3, 1);
    EXPECT_LT((m - expected).norm(), 1e-15);
}

// Tree reduction vs naive sequential summation on a full-order stabilizer.
TEST(add, dense_random_stabilizer_matches_naive_sum) {
    std::mt19937_64 rng(71);
    std::normal_distribution<double> gauss;
    for (const std::size_t n : {1u, 2u, 3u}) {
        StabilizerState s = StabilizerState::zero(n);
        for (double& v : s.lambda) {
            v = gauss(rng);
        }
        const Eigen::MatrixXcd tree = add_terms(s);

        const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
        Eigen::MatrixXcd naive = Eigen::MatrixXcd::Identity(dim, dim);
        for (StringIndex i = 0; i < s.lambda.size(); ++i) {
            naive += s.lambda[i] * oracle::dense_pauli(i, n);
        }
        EXPECT_LT((tree - naive).norm(), 1e-12) << "n=" << n;
    }
}

TEST(multiply, single_matrix_and_shape_mismatch) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(4, 4);
    EXPECT_LT((multiply_chain({m}) - m).norm(), 1e-15);
    EXPECT_THROW(multiply_chain({}), std::invalid_argument);
    EXPECT_THROW(multiply_chain({m, Eigen::MatrixXcd::Identity(2, 2)}), std::invalid_argument);
}

TEST(multiply, initial_generator_product) {
    // (I + ZI)(I + IZ) = 4 |00><00|.
    const auto stabs = init_stabilizers(2);
    const Eigen::MatrixXcd product = multiply_chain({add_terms(stabs[0]), add_terms(stabs[1])});
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 0) = 4.0;
    EXPECT_LT((product - expected).norm(), 1e-15);
}

TEST(multiply, tree_matches_left_fold_on_commuting_inputs) {
    std::mt19937_64 rng(73);
    std::normal_distribution<double> gauss;
    for (const std::size_t count : {2u, 3u, 5u, 8u}) {
        // Powers of one matrix commute pairwise.
        Eigen::MatrixXcd base = Eigen::MatrixXcd::Zero(8, 8);
        for (Eigen::Index r = 0; r < 8; ++r) {
            for (Eigen::Index c = 0; c < 8; ++c) {
                base(r, c) = std::complex<double>(gauss(rng), gauss(rng)) / 4.0;
            }
        }
        std::vector<Eigen::MatrixXcd> ms;
        Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(8, 8);
        for (std::size_t i = 0; i < count; ++i) {
            power = power * base;
            ms.push_back(power);
        }
        Eigen::MatrixXcd fold = ms[0];
        for (std::size_t i = 1; i < count; ++i) {
            fold = fold * ms[i];
        }
        EXPECT_LT((multiply_chain(ms) - fold).norm(), 1e-10) << "count=" << count;
    }
}

TEST(to_density, empty_circuit_projects_to_zero_state) {
    const DensityMatrix rho = to_density(init_stabilizers(2));
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 0) = 1.0;
    EXPECT_LT((rho.rho - expected).norm(), 1e-15);
    EXPECT_DOUBLE_EQ(rho00(rho), 1.0);
}

TEST(to_density, hadamard_single_qubit) {
    Circuit c;
    c.n_qubits = 1;
    c.instructors = {make_gate(Gate::H, 0)};
    const SimulationResult result = simulate(c);
    Eigen::MatrixXcd expected(2, 2);
    expected << 0.5, 0.5, 0.5, 0.5;
    EXPECT_LT((result.density.rho - expected).norm(), 1e-12);
}

TEST(to_density, random_circuits_match_oracle) {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const Circuit c = testing::random_circuit(n, 50, rng);
        const SimulationResult result = simulate(c);
        const DensityMatrix expected =
            oracle::density_from_statevector(oracle::simulate_statevector(c));
        ASSERT_LT((result.density.rho - expected.rho).norm(), 1e-9) << "trial " << trial;
    }
}

// Dual route: the product of (I + stabilizer) factors must equal the
// group-element sum 2^-n * sum over subsets S of prod_{j in S} stab_j.
TEST(to_density, product_form_equals_group_sum) {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const Circuit c = testing::random_circuit(n, 60, rng);
        const OperatorSequence seq = split_operators(c);
        const auto stabs = run_map_stage(init_stabilizers(n), seq, construct_lut(seq));
        const DensityMatrix rho = to_density(stabs);

        const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
        for (std::size_t subset = 0; subset < (std::size_t{1} << n); ++subset) {
            Eigen::MatrixXcd product = Eigen::MatrixXcd::Identity(dim, dim);
            for (std::size_t j = 0; j < n; ++j) {
                if ((subset >> j) & 1) {
                    product = product * testing::stabilizer_to_dense(stabs[j]);
                }
            }
            sum += product;
        }
        sum /= static_cast<double>(std::size_t{1} << n);
        ASSERT_LT((rho.rho - sum).norm(), 1e-9) << "trial " << trial;
    }
}

TEST(to_density, invariants_on_random_circuits) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const Circuit c = testing::random_circuit(n, 150, rng);
        const DensityMatrix rho = simulate(c).density;
        ASSERT_NEAR(rho.rho.trace().real(), 1.0, 1e-9);
        ASSERT_NEAR(rho.rho.trace().imag(), 0.0, 1e-9);
        ASSERT_LT((rho.rho - rho.rho.adjoint()).norm(), 1e-9);
        ASSERT_LT((rho.rho * rho.rho - rho.rho).norm(), 1e-9);

        // Spectrum of a pure state: one 1, rest 0.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.rho);
        const Eigen::VectorXd eigenvalues = solver.eigenvalues();
        for (Eigen::Index i = 0; i + 1 < eigenvalues.size(); ++i) {
            ASSERT_NEAR(eigenvalues(i), 0.0, 1e-6);
        }
        ASSERT_NEAR(eigenvalues(eigenvalues.size() - 1), 1.0, 1e-6);
    }
}

TEST(measure, z_probabilities) {
    const DensityMatrix zero = to_density(init_stabilizers(3));
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_NEAR(measure_z(zero, k), 1.0, 1e-12);
    }
    EXPECT_THROW(measure_z(zero, 3), std::out_of_range);

    Circuit c;
    c.n_qubits = 1;
    c.instructors = {make_gate(Gate::H, 0)};
    EXPECT_NEAR(measure_z(simulate(c).density, 0), 0.5, 1e-12);

    const double theta = 1.3;
    Circuit ry;
    ry.n_qubits = 1;
    ry.instructors = {make_rotation(Gate::RY, 0, theta)};
    const double expected = std::cos(theta / 2) * std::cos(theta / 2);
    EXPECT_NEAR(measure_z(simulate(ry).density, 0), expected, 1e-12);
}

TEST(measure, outcome_probabilities_sum_to_one) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const Circuit c = testing::random_circuit(n, 80, rng);
        const DensityMatrix rho = simulate(c).density;
        for (std::size_t k = 0; k < n; ++k) {
            // tr([ (I - Z_k) / 2 ] rho) is the complement.
            const Eigen::MatrixXcd z_k =
                oracle::dense_pauli(with_pauli_at(0, k, n, Pauli::Z), n);
            const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
            const double p1 =
                (0.5 * (Eigen::MatrixXcd::Identity(dim, dim) - z_k) * rho.rho).trace().real();
            ASSERT_NEAR(measure_z(rho, k) + p1, 1.0, 1e-9);
        }
    }
}

TEST(rho00_entry, matches_oracle_population) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        const Circuit c = testing::random_circuit(2, 60, rng);
        const SimulationResult result = simulate(c);
        const oracle::StateVector psi = oracle::simulate_statevector(c);
        ASSERT_NEAR(rho00(result.density), std::norm(psi.amp(0)), 1e-9);
    }
}

TEST(exporting, csv_shape_and_header) {
    const DensityMatrix rho = to_density(init_stabilizers(2));
    const std::string csv = density_to_csv(rho);
    EXPECT_EQ(csv.rfind("row,col,re,im\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 16);
    EXPECT_NE(csv.find("0,0,1,0\n"), std::string::npos);

    const std::vector<std::byte> blob = density_to_binary(rho);
    EXPECT_EQ(blob.size(), 16u * 2 * sizeof(double));
    double first = 0.0;
    std::memcpy(&first, blob.data(), sizeof(double));
    EXPECT_DOUBLE_EQ(first, 1.0);
}

}  // namespace
}  // namespace pstab
