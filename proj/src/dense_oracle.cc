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

#include <Eigen/Dense>
#include <stdexcept>

#include "corrqec/fidelity.h"

namespace corrqec {

namespace {

constexpr std::size_t kMaxOracleQubits = 6;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Single-qubit factor X^x Z^z as an explicit 2x2 matrix.
Eigen::Matrix2cd factor(bool x, bool z) {
    Eigen::Matrix2cd X;
    X << 0, 1, 1, 0;
    Eigen::Matrix2cd Z;
    Z << 1, 0, 0, -1;
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    if (x) m = m * X;
    if (z) m = m * Z;
    return m;
}

// Qubit 1 is the least significant index bit, so it is the rightmost Kronecker factor.
Eigen::MatrixXcd dense_pauli(const PauliString &p) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = p.n; q >= 1; --q) {
        BasisIndex bit = qubit_bit(q);
        out = kron(out, factor((p.x_mask & bit) != 0, (p.z_mask & bit) != 0));
    }
    return p.phase.value() * out;
}

Eigen::VectorXcd dense_state(const SparseState &s) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << s.num_qubits());
    for (const auto &[index, amp] : s.amplitudes()) {
        v(static_cast<Eigen::Index>(index)) = amp;
    }
    return v;
}

}  // namespace

double dense_oracle_fidelity(const QuantumCode &code, const NoiseChannel &channel, const RecoverySet &rs) {
    if (code.n > kMaxOracleQubits) {
        throw std::length_error("dense oracle limited to " + std::to_string(kMaxOracleQubits) + " qubits");
    }
    if (channel.num_qubits() != code.n || rs.n != code.n) {
        throw std::invalid_argument("dense oracle: code, channel and recovery qubit counts differ");
    }
    const Eigen::Index dim = Eigen::Index{1} << code.n;

    Eigen::MatrixXcd codewords(dim, 2);
    codewords.col(0) = dense_state(code.logical_zero);
    codewords.col(1) = dense_state(code.logical_one);
    const Eigen::MatrixXcd code_projector = codewords * codewords.adjoint();

    std::vector<Eigen::MatrixXcd> recovery;
    for (const auto &r : rs.recovery_ops) {
        recovery.push_back(dense_state(rs.logical_zero) * dense_state(r.syndrome_zero).adjoint() +
                           dense_state(rs.logical_one) * dense_state(r.syndrome_one).adjoint());
    }
    if (rs.has_complement()) {
        Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(dim, dim);
        for (const auto &c : rs.complement) {
            Eigen::VectorXcd v = dense_state(c);
            projector += v * v.adjoint();
        }
        recovery.push_back(projector);
    }

    // tr(P_C R A P_C) = tr((P_C R) A), so P_C R is formed once per recovery operator.
    std::vector<Eigen::MatrixXcd> projected;
    for (const auto &r : recovery) {
        projected.push_back(code_projector * r);
    }

    double total = 0;
    for (const auto &term : channel.kraus) {
        Eigen::MatrixXcd kraus = std::sqrt(term.weight) * dense_pauli(term.op);
        for (const auto &m : projected) {
            Complex trace = m.cwiseProduct(kraus.transpose()).sum();
            total += std::norm(trace);
        }
    }
    return total / 4.0;
}

}  // namespace corrqec
