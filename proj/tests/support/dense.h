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

#ifndef CORRQEC_TESTS_DENSE_H
#define CORRQEC_TESTS_DENSE_H

// Dense reference matrices for small registers. Built from explicit 2x2 factors
// so that tests do not share code with the bitmask implementation.

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>

#include "corrqec/pauli.h"

namespace corrqec::oracle {

inline Eigen::MatrixXcd dense_kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Operator i^k * prod_q X^{x_q} Z^{z_q}, qubit 1 being the rightmost factor.
inline Eigen::MatrixXcd dense_from_masks(std::size_t n, std::uint64_t x, std::uint64_t z, int k) {
    Eigen::Matrix2cd X, Z;
    X << 0, 1, 1, 0;
    Z << 1, 0, 0, -1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = n; q >= 1; --q) {
        Eigen::Matrix2cd f = Eigen::Matrix2cd::Identity();
        if ((x >> (q - 1)) & 1) f = f * X;
        if ((z >> (q - 1)) & 1) f = f * Z;
        out = dense_kron(out, f);
    }
    const Complex phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return phases[k & 3] * out;
}

inline Eigen::MatrixXcd dense(const PauliString &p) {
    return dense_from_masks(p.n, p.x_mask, p.z_mask, p.phase.exponent);
}

inline Eigen::VectorXcd dense(const SparseState &s) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << s.num_qubits());
    for (const auto &[index, amp] : s.amplitudes()) {
        v(static_cast<Eigen::Index>(index)) = amp;
    }
    return v;
}

}  // namespace corrqec::oracle

#endif  // CORRQEC_TESTS_DENSE_H
