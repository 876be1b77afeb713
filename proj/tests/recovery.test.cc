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

#include "corrqec/recovery.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "corrqec/codes.h"
#include "support/dense.h"

using namespace corrqec;

namespace {

NoiseChannel support_channel(std::size_t n, Flavor flavor = Flavor::bit) {
    return model1_channel({0.5, 0.0, n, flavor, Model::model1});
}

std::vector<std::string> labels(const std::vector<PauliString> &ops) {
    std::vector<std::string> out;
    for (const auto &op : ops) out.push_back(op.label());
    return out;
}

Eigen::MatrixXcd codeword_matrix(const QuantumCode &code) {
    Eigen::MatrixXcd m(Eigen::Index{1} << code.n, 2);
    m.col(0) = oracle::dense(code.logical_zero);
    m.col(1) = oracle::dense(code.logical_one);
    return m;
}

// Dense Knill-Laflamme test: C^dagger a^dagger b C must be a multiple of the identity.
bool dense_kl(const QuantumCode &code, const PauliString &a, const PauliString &b) {
    Eigen::MatrixXcd c = codeword_matrix(code);
    Eigen::MatrixXcd m = c.adjoint() * oracle::dense(a).adjoint() * oracle::dense(b) * c;
    return std::abs(m(0, 1)) < 1e-10 && std::abs(m(1, 0)) < 1e-10 && std::abs(m(0, 0) - m(1, 1)) < 1e-10;
}

Eigen::MatrixXcd dense_recovery(const RecoverySet &rs, const RecoveryOperator &r) {
    return oracle::dense(rs.logical_zero) * oracle::dense(r.syndrome_zero).adjoint() +
           oracle::dense(rs.logical_one) * oracle::dense(r.syndrome_one).adjoint();
}

}  // namespace

TEST(recovery, detectability_examples) {
    auto bit = bitflip3();
    EXPECT_FALSE(is_detectable(bit, PauliString::from_label(3, "X1X2X3")).detectable);
    auto id = is_detectable(bit, PauliString::identity(3));
    EXPECT_TRUE(id.detectable);
    EXPECT_NEAR(std::abs(id.lambda - Complex(1)), 0, 1e-12);
    EXPECT_TRUE(is_detectable(bit, PauliString::from_label(3, "X1")).detectable);

    auto concat = concat6(Flavor::bit);
    EXPECT_FALSE(is_detectable(concat, PauliString::from_label(6, "X1X2X3")).detectable);
    EXPECT_FALSE(is_detectable(concat, PauliString::from_label(6, "X4X5X6")).detectable);
    auto all = is_detectable(concat, PauliString::from_label(6, "X1X2X3X4X5X6"));
    EXPECT_TRUE(all.detectable);
    EXPECT_NEAR(all.lambda.real(), -1, 1e-12);
}

TEST(recovery, detectable_count_on_concat6) {
    auto concat = concat6(Flavor::bit);
    int detectable = 0;
    for (BasisIndex mask = 0; mask < 64; ++mask) {
        detectable += is_detectable(concat, PauliString::x_string(6, mask)).detectable;
    }
    EXPECT_EQ(detectable, 62);
}

TEST(recovery, correctable_sets_of_small_codes) {
    EXPECT_EQ(labels(correctable_set(bitflip3(), support_channel(3))),
              (std::vector<std::string>{"I", "X1", "X2", "X3"}));
    EXPECT_EQ(labels(correctable_set(dfs2(Flavor::bit), support_channel(2))),
              (std::vector<std::string>{"I", "X1X2"}));
    EXPECT_EQ(labels(correctable_set(phaseflip3(), support_channel(3, Flavor::phase))),
              (std::vector<std::string>{"I", "Z1", "Z2", "Z3"}));
}

TEST(recovery, dfs2_correctable_equals_detectable) {
    auto code = dfs2(Flavor::bit);
    auto ch = support_channel(2);
    std::vector<std::string> detectable;
    for (const auto &t : ch.kraus) {
        if (is_detectable(code, t.op).detectable) detectable.push_back(t.op.label());
    }
    EXPECT_EQ(labels(correctable_set(code, ch)), detectable);
}

TEST(recovery, concat6_correctable_set_matches_reference_lists) {
    auto got = labels(correctable_set(concat6(Flavor::bit), support_channel(6)));
    std::set<std::string> expected{
        "I",
        "X1", "X2", "X3", "X4", "X5", "X6",
        "X1X4", "X1X5", "X1X6", "X2X4", "X2X5", "X2X6", "X3X4", "X3X5", "X3X6",
        "X1X2X4X5", "X1X2X4X6", "X1X2X5X6", "X1X3X4X5", "X1X3X4X6", "X1X3X5X6", "X2X3X4X5", "X2X3X4X6",
        "X2X3X5X6",
        "X1X2X3X4X5", "X1X2X3X4X6", "X1X2X4X5X6", "X1X3X4X5X6", "X1X2X3X5X6", "X2X3X4X5X6",
        "X1X2X3X4X5X6",
    };
    EXPECT_EQ(got.size(), 32u);
    EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), [](const std::string &a, const std::string &b) {
        return PauliString::from_label(6, a).weight() < PauliString::from_label(6, b).weight();
    }));
}

TEST(recovery, correctable_sets_are_compatible_and_maximal) {
    for (const auto &code : {bitflip3(), dfs2(Flavor::bit), concat6(Flavor::bit), concat6(Flavor::phase)}) {
        auto ch = support_channel(code.n, code.label.find("phase") != std::string::npos ? Flavor::phase : Flavor::bit);
        auto chosen = correctable_set(code, ch);
        for (const auto &a : chosen) {
            for (const auto &b : chosen) {
                ASSERT_TRUE(dense_kl(code, a, b)) << code.label << " " << a.label() << " " << b.label();
            }
        }
        for (const auto &t : ch.kraus) {
            if (std::find(chosen.begin(), chosen.end(), t.op) != chosen.end()) continue;
            bool conflicts = std::any_of(chosen.begin(), chosen.end(),
                                         [&](const PauliString &c) { return !dense_kl(code, c, t.op); });
            ASSERT_TRUE(conflicts) << code.label << " could also take " << t.op.label();
        }
    }
}

TEST(recovery, correctable_set_rejects_empty_channel) {
    NoiseChannel empty;
    empty.params.n = 3;
    EXPECT_THROW(correctable_set(bitflip3(), empty), std::invalid_argument);
}

TEST(recovery, bitflip3_recovery_fills_space) {
    auto code = bitflip3();
    auto rs = build_recovery(code, correctable_set(code, support_channel(3)));
    EXPECT_EQ(rs.recovery_ops.size(), 4u);
    EXPECT_FALSE(rs.has_complement());
    // The first operator is the code projector itself.
    EXPECT_TRUE(rs.recovery_ops[0].syndrome_zero.approx_equal(code.logical_zero, 1e-12));
    EXPECT_TRUE(rs.recovery_ops[0].syndrome_one.approx_equal(code.logical_one, 1e-12));
    EXPECT_TRUE(verify_trace_preserving(rs).trace_preserving);
}

TEST(recovery, dfs2_recovery_uses_complement) {
    auto code = dfs2(Flavor::bit);
    auto rs = build_recovery(code, correctable_set(code, support_channel(2)));
    ASSERT_EQ(rs.recovery_ops.size(), 1u);
    EXPECT_EQ(rs.recovery_ops[0].corrects.size(), 2u);
    for (const auto &c : rs.recovery_ops[0].corrects) {
        EXPECT_NEAR(std::abs(c.factor), 1, 1e-12);
    }
    ASSERT_EQ(rs.complement.size(), 2u);
    // The complement spans |++> and |-->.
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(4, 4);
    for (const auto &v : rs.complement) {
        Eigen::VectorXcd d = oracle::dense(v);
        proj += d * d.adjoint();
    }
    Eigen::Vector4cd pp, mm;
    pp << 0.5, 0.5, 0.5, 0.5;
    mm << 0.5, -0.5, -0.5, 0.5;
    Eigen::MatrixXcd expected = pp * pp.adjoint() + mm * mm.adjoint();
    EXPECT_LT((proj - expected).norm(), 1e-12);
    EXPECT_TRUE(verify_trace_preserving(rs).trace_preserving);
}

TEST(recovery, concat6_recovery_pairs_degenerate_errors) {
    auto code = concat6(Flavor::bit);
    auto rs = build_recovery(code, correctable_set(code, support_channel(6)));
    EXPECT_EQ(rs.recovery_ops.size(), 16u);
    EXPECT_EQ(rs.complement.size(), 32u);
    auto all = PauliString::from_label(6, "X1X2X3X4X5X6");
    for (const auto &r : rs.recovery_ops) {
        ASSERT_EQ(r.corrects.size(), 2u);
        EXPECT_EQ(multiply(r.corrects[0].op, r.corrects[1].op), all);
    }
    EXPECT_TRUE(verify_trace_preserving(rs).trace_preserving);
}

TEST(recovery, each_error_is_undone_by_its_operator_only) {
    for (const auto &code : {bitflip3(), dfs2(Flavor::bit), concat6(Flavor::bit)}) {
        auto rs = build_recovery(code, correctable_set(code, support_channel(code.n)));
        Eigen::MatrixXcd c = codeword_matrix(code);
        for (std::size_t l = 0; l < rs.recovery_ops.size(); ++l) {
            Eigen::MatrixXcd r = dense_recovery(rs, rs.recovery_ops[l]);
            for (std::size_t m = 0; m < rs.recovery_ops.size(); ++m) {
                for (const auto &fix : rs.recovery_ops[m].corrects) {
                    Eigen::MatrixXcd block = c.adjoint() * r * oracle::dense(fix.op) * c;
                    if (l == m) {
                        ASSERT_LT((block - fix.factor * Eigen::Matrix2cd::Identity()).norm(), 1e-10);
                        ASSERT_NEAR(std::abs(fix.factor), 1, 1e-12);
                    } else {
                        ASSERT_LT(std::abs(block.trace()), 1e-10) << code.label;
                    }
                }
            }
        }
    }
}

TEST(recovery, removing_an_operator_breaks_trace_preservation) {
    auto code = bitflip3();
    auto rs = build_recovery(code, correctable_set(code, support_channel(3)));
    rs.recovery_ops.pop_back();
    auto check = verify_trace_preserving(rs);
    EXPECT_FALSE(check.trace_preserving);
    EXPECT_GT(check.max_deviation, 0.5);
}

TEST(recovery, partial_overlap_is_rejected) {
    // X1 sends |000> to |100>; the custom code below puts |100> partly inside the code.
    SparseState zero(3);
    zero.add(0, 1);
    SparseState one(3);
    one.add(1, std::sqrt(0.5));
    one.add(7, std::sqrt(0.5));
    QuantumCode odd{"odd", 3, zero, one};
    std::vector<PauliString> ops{PauliString::identity(3), PauliString::from_label(3, "X1")};
    EXPECT_THROW(build_recovery(odd, ops), std::logic_error);
}
