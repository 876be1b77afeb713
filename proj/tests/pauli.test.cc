// Copyright 2026 The corrqec Authors
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

#include "corrqec/pauli.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "corrqec/codes.h"
#include "support/dense.h"

using namespace corrqec;

namespace {

// All 4^n * 4 phased Paulis on n qubits.
std::vector<PauliString> all_paulis(std::size_t n) {
    std::vector<PauliString> out;
    for (BasisIndex x = 0; x < (BasisIndex{1} << n); ++x) {
        for (BasisIndex z = 0; z < (BasisIndex{1} << n); ++z) {
            for (std::uint8_t k = 0; k < 4; ++k) {
                out.emplace_back(n, x, z, Phase{k});
            }
        }
    }
    return out;
}

SparseState plus_minus(std::size_t n, BasisIndex minus_mask) {
    SparseState s(n);
    double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
    for (BasisIndex i = 0; i < (BasisIndex{1} << n); ++i) {
        s.add(i, (std::popcount(i & minus_mask) & 1) ? -amp : amp);
    }
    return s;
}

}  // namespace

TEST(pauli, multiply_matches_dense_products_exhaustively) {
    for (std::size_t n = 1; n <= 3; ++n) {
        auto ops = all_paulis(n);
        for (const auto &a : ops) {
            if (a.phase.exponent != 0) continue;
            for (const auto &b : ops) {
                Eigen::MatrixXcd expected = oracle::dense(a) * oracle::dense(b);
                Eigen::MatrixXcd got = oracle::dense(multiply(a, b));
                ASSERT_LT((expected - got).norm(), 1e-12) << a.label() << " * " << b.label();
            }
        }
    }
}

TEST(pauli, multiply_small_cases) {
    auto x1 = PauliString::from_label(2, "X1");
    EXPECT_EQ(multiply(x1, x1), PauliString::identity(2));

    auto z = PauliString::z_string(1, 1);
    auto x = PauliString::x_string(1, 1);
    auto zx = multiply(z, x);
    EXPECT_EQ(zx.x_mask, 1u);
    EXPECT_EQ(zx.z_mask, 1u);
    EXPECT_EQ(zx.phase, Phase::minus_one());
    EXPECT_EQ(multiply(zx, zx), PauliString(1, 0, 0, Phase::minus_one()));

    auto prod = multiply(PauliString::from_label(6, "X1X2X3"), PauliString::from_label(6, "X3X4"));
    EXPECT_EQ(prod, PauliString::from_label(6, "X1X2X4"));
}

TEST(pauli, multiply_is_associative) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<BasisIndex> mask(0, 63);
    std::uniform_int_distribution<int> k(0, 3);
    for (int trial = 0; trial < 2000; ++trial) {
        PauliString a(6, mask(rng), mask(rng), Phase{static_cast<std::uint8_t>(k(rng))});
        PauliString b(6, mask(rng), mask(rng), Phase{static_cast<std::uint8_t>(k(rng))});
        PauliString c(6, mask(rng), mask(rng), Phase{static_cast<std::uint8_t>(k(rng))});
        ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    }
}

TEST(pauli, apply_to_basis_convention) {
    auto x1 = PauliString::from_label(3, "X1");
    auto img = apply_to_basis(x1, 0);
    EXPECT_EQ(img.index, 1u);
    EXPECT_EQ(img.phase, Complex(1));

    auto z1 = PauliString::from_label(3, "Z1");
    img = apply_to_basis(z1, 1);
    EXPECT_EQ(img.index, 1u);
    EXPECT_EQ(img.phase, Complex(-1));

    // |110000> in ket order has qubits 1 and 2 set.
    auto x12 = PauliString::from_label(6, "X1X2");
    img = apply_to_basis(x12, qubit_bit(1) | qubit_bit(2));
    EXPECT_EQ(img.index, 0u);
    EXPECT_EQ(img.phase, Complex(1));

    EXPECT_THROW(apply_to_basis(x1, 8), std::out_of_range);
}

TEST(pauli, apply_to_basis_matches_dense_columns) {
    for (const auto &p : all_paulis(3)) {
        Eigen::MatrixXcd m = oracle::dense(p);
        for (BasisIndex i = 0; i < 8; ++i) {
            auto img = apply_to_basis(p, i);
            for (Eigen::Index r = 0; r < 8; ++r) {
                Complex expected = static_cast<BasisIndex>(r) == img.index ? img.phase : Complex(0);
                ASSERT_LT(std::abs(m(r, static_cast<Eigen::Index>(i)) - expected), 1e-12);
            }
        }
    }
}

TEST(pauli, apply_to_state_examples) {
    auto s = plus_minus(3, 0b010);
    EXPECT_TRUE(apply_to_state(PauliString::identity(3), s).approx_equal(s, 1e-12));

    auto dfs_zero = plus_minus(2, qubit_bit(2));
    auto xx = PauliString::from_label(2, "X1X2");
    EXPECT_TRUE(apply_to_state(xx, dfs_zero).approx_equal(dfs_zero.scaled(-1), 1e-12));

    auto code = concat6(Flavor::bit);
    auto x123 = PauliString::from_label(6, "X1X2X3");
    EXPECT_TRUE(apply_to_state(x123, code.logical_zero).approx_equal(code.logical_zero, 1e-12));
    EXPECT_TRUE(apply_to_state(x123, code.logical_one).approx_equal(code.logical_one.scaled(-1), 1e-12));
}

TEST(pauli, matrix_element_examples) {
    auto code = concat6(Flavor::bit);
    EXPECT_NEAR(std::abs(matrix_element(code.logical_zero, PauliString::identity(6), code.logical_zero) - 1.0), 0,
                1e-12);
    Complex v = matrix_element(code.logical_zero, PauliString::from_label(6, "X4X5X6"), code.logical_zero);
    EXPECT_NEAR(v.real(), -1, 1e-12);
    EXPECT_NEAR(v.imag(), 0, 1e-12);

    auto bit = bitflip3();
    EXPECT_EQ(matrix_element(bit.logical_zero, PauliString::from_label(3, "X1"), bit.logical_one), Complex(0));
}

TEST(pauli, paulis_preserve_norm_and_square_to_sign) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    SparseState s(4);
    for (BasisIndex i = 0; i < 16; ++i) s.add(i, Complex(g(rng), g(rng)));
    s = s.normalized();
    for (const auto &p : all_paulis(4)) {
        auto once = apply_to_state(p, s);
        ASSERT_NEAR(once.norm_squared(), 1.0, 1e-12);
        if (p.phase.exponent == 0 && (p.x_mask & p.z_mask) == 0) {
            ASSERT_TRUE(apply_to_state(p, once).approx_equal(s, 1e-12)) << p.label();
        }
    }
}

TEST(pauli, hadamard_conjugate_matches_dense) {
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    Eigen::MatrixXcd hn = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 0; q < 3; ++q) hn = oracle::dense_kron(hn, h);
    for (const auto &p : all_paulis(3)) {
        Eigen::MatrixXcd expected = hn * oracle::dense(p) * hn.adjoint();
        ASSERT_LT((expected - oracle::dense(hadamard_conjugate(p))).norm(), 1e-12) << p.label();
        ASSERT_EQ(hadamard_conjugate(hadamard_conjugate(p)), p);
    }
    EXPECT_EQ(hadamard_conjugate(PauliString::from_label(1, "X1")), PauliString::from_label(1, "Z1"));
    EXPECT_EQ(hadamard_conjugate(PauliString::identity(3)), PauliString::identity(3));
    EXPECT_EQ(hadamard_conjugate(PauliString::from_label(3, "X1X2X3")), PauliString::from_label(3, "Z1Z2Z3"));
}

TEST(pauli, adjoint_matches_dense) {
    for (const auto &p : all_paulis(2)) {
        ASSERT_LT((oracle::dense(p).adjoint() - oracle::dense(adjoint(p))).norm(), 1e-12) << p.label();
    }
}

TEST(pauli, labels_round_trip) {
    for (const auto &p : all_paulis(3)) {
        ASSERT_EQ(PauliString::from_label(3, p.label()), p) << p.label();
    }
    EXPECT_EQ(PauliString::from_label(6, "X1X2X3").label(), "X1X2X3");
    EXPECT_THROW(PauliString::from_label(3, "X4"), std::invalid_argument);
    EXPECT_THROW(PauliString::from_label(3, "Q1"), std::invalid_argument);
}

TEST(pauli, weight_and_ordering) {
    EXPECT_EQ(PauliString::from_label(6, "X1X4").weight(), 2u);
    EXPECT_EQ(PauliString(3, 0b011, 0b110).weight(), 3u);
    EXPECT_TRUE(weight_order_less(PauliString::from_label(3, "X3"), PauliString::from_label(3, "X1X2")));
    EXPECT_THROW(PauliString(2, 0b100, 0), std::invalid_argument);
}

TEST(sparse_state, pruning_tensor_and_inner) {
    SparseState s(2);
    s.add(1, 0.5);
    s.add(1, -0.5);
    EXPECT_TRUE(s.amplitudes().empty());

    auto low = SparseState::basis(1, 1);
    auto high = SparseState::basis(2, 2);
    auto t = SparseState::tensor(low, high);
    EXPECT_EQ(t.num_qubits(), 3u);
    EXPECT_EQ(t.amplitude(0b101), Complex(1));

    auto a = plus_minus(3, 0);
    auto b = plus_minus(3, 0b111);
    EXPECT_NEAR(std::abs(a.inner(b)), 0, 1e-12);
    EXPECT_NEAR(a.inner(a).real(), 1, 1e-12);
    EXPECT_THROW(SparseState(kMaxQubits + 1), std::length_error);
}

TEST(phase, algebra_and_text) {
    EXPECT_EQ(Phase::plus_i() * Phase::plus_i(), Phase::minus_one());
    EXPECT_EQ(Phase::minus_i() * Phase::plus_i(), Phase::plus_one());
    for (std::uint8_t k = 0; k < 4; ++k) {
        EXPECT_EQ(Phase::from_str(Phase{k}.str()), Phase{k});
    }
    EXPECT_EQ(Phase::minus_one().value(), Complex(-1));
}
