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

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

namespace corrqec {

namespace {

constexpr std::size_t kMaxDenseQubits = 10;

// Gram-Schmidt acceptance threshold for complement candidates.
constexpr double kResidualThreshold = 1e-8;

bool near(Complex a, Complex b) { return std::abs(a - b) < kSubspaceTolerance; }
bool near_zero(Complex a) { return std::abs(a) < kSubspaceTolerance; }

std::vector<PauliString> distinct_ops(const NoiseChannel &channel) {
    std::vector<PauliString> ops;
    for (const auto &term : channel.kraus) {
        if (std::find(ops.begin(), ops.end(), term.op) == ops.end()) {
            ops.push_back(term.op);
        }
    }
    std::stable_sort(ops.begin(), ops.end(), weight_order_less);
    return ops;
}

void require_matching(const QuantumCode &code, const PauliString &op) {
    if (code.n != op.n) {
        throw std::invalid_argument("operator acts on " + std::to_string(op.n) + " qubits but code " + code.label +
                                    " has " + std::to_string(code.n));
    }
}

Eigen::VectorXcd dense(const SparseState &s) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << s.num_qubits());
    for (const auto &[index, amp] : s.amplitudes()) {
        v(static_cast<Eigen::Index>(index)) = amp;
    }
    return v;
}

}  // namespace

DetectabilityReport is_detectable(const QuantumCode &code, const PauliString &op) {
    require_matching(code, op);
    Complex e00 = matrix_element(code.logical_zero, op, code.logical_zero);
    Complex e11 = matrix_element(code.logical_one, op, code.logical_one);
    Complex e01 = matrix_element(code.logical_zero, op, code.logical_one);
    Complex e10 = matrix_element(code.logical_one, op, code.logical_zero);
    DetectabilityReport report{op, near(e00, e11) && near_zero(e01) && near_zero(e10), {}};
    if (report.detectable) {
        report.lambda = 0.5 * (e00 + e11);
    }
    return report;
}

bool knill_laflamme_compatible(const QuantumCode &code, const PauliString &a, const PauliString &b) {
    return is_detectable(code, multiply(adjoint(a), b)).detectable;
}

std::vector<PauliString> correctable_set(const QuantumCode &code, const NoiseChannel &channel) {
    if (channel.kraus.empty()) {
        throw std::invalid_argument("correctable_set: channel has no Kraus operators");
    }
    std::vector<PauliString> chosen;
    for (const auto &candidate : distinct_ops(channel)) {
        require_matching(code, candidate);
        if (!knill_laflamme_compatible(code, candidate, candidate)) {
            continue;
        }
        bool compatible = std::all_of(chosen.begin(), chosen.end(), [&](const PauliString &existing) {
            return knill_laflamme_compatible(code, existing, candidate);
        });
        if (compatible) {
            chosen.push_back(candidate);
        }
    }
    return chosen;
}

std::vector<SwapAlternative> single_swap_alternatives(const QuantumCode &code, const NoiseChannel &channel,
                                                      const std::vector<PauliString> &chosen) {
    std::vector<SwapAlternative> out;
    for (const auto &candidate : distinct_ops(channel)) {
        if (std::find(chosen.begin(), chosen.end(), candidate) != chosen.end()) continue;
        if (!knill_laflamme_compatible(code, candidate, candidate)) continue;
        const PauliString *conflict = nullptr;
        std::size_t conflicts = 0;
        for (const auto &existing : chosen) {
            if (!knill_laflamme_compatible(code, existing, candidate)) {
                conflict = &existing;
                if (++conflicts > 1) break;
            }
        }
        if (conflicts == 1) {
            out.push_back({candidate, *conflict});
        }
    }
    return out;
}

RecoverySet build_recovery(const QuantumCode &code, const std::vector<PauliString> &correctable) {
    RecoverySet rs;
    rs.n = code.n;
    rs.logical_zero = code.logical_zero;
    rs.logical_one = code.logical_one;

    for (const auto &op : correctable) {
        require_matching(code, op);
        // Paulis are unitary, so these already have unit norm; normalizing by the
        // positive root keeps eigenvalue signs inside the syndrome states.
        SparseState image_zero = apply_to_state(op, code.logical_zero).normalized();
        SparseState image_one = apply_to_state(op, code.logical_one).normalized();
        if (!near_zero(image_zero.inner(image_one))) {
            throw std::logic_error(op.label() + " maps the two codewords onto overlapping states");
        }

        bool placed = false;
        for (auto &existing : rs.recovery_ops) {
            Complex o00 = existing.syndrome_zero.inner(image_zero);
            Complex o11 = existing.syndrome_one.inner(image_one);
            Complex o01 = existing.syndrome_zero.inner(image_one);
            Complex o10 = existing.syndrome_one.inner(image_zero);
            if (near_zero(o00) && near_zero(o11) && near_zero(o01) && near_zero(o10)) {
                continue;
            }
            bool same_subspace = near_zero(o01) && near_zero(o10) && near(o00, o11) &&
                                 std::abs(std::abs(o00) - 1.0) < kSubspaceTolerance;
            if (!same_subspace) {
                throw std::logic_error("syndrome subspace of " + op.label() + " partially overlaps that of " +
                                       existing.corrects.front().op.label());
            }
            // R A|i_L> = <v^i|A|i_L> |i_L> = o_ii |i_L>.
            existing.corrects.push_back({op, o00});
            placed = true;
            break;
        }
        if (!placed) {
            rs.recovery_ops.push_back({image_zero, image_one, {{op, Complex{1.0}}}});
        }
    }

    const BasisIndex dim = BasisIndex{1} << code.n;
    const BasisIndex target = dim - 2 * rs.recovery_ops.size();
    std::vector<const SparseState *> basis;
    for (const auto &r : rs.recovery_ops) {
        basis.push_back(&r.syndrome_zero);
        basis.push_back(&r.syndrome_one);
    }
    for (BasisIndex seed = 0; seed < dim && rs.complement.size() < target; ++seed) {
        SparseState residual = SparseState::basis(code.n, seed);
        for (const auto *b : basis) {
            residual = residual - b->scaled(b->inner(residual));
        }
        for (const auto &c : rs.complement) {
            residual = residual - c.scaled(c.inner(residual));
        }
        if (residual.norm_squared() > kResidualThreshold) {
            rs.complement.push_back(residual.normalized());
        }
    }
    if (rs.complement.size() != target) {
        throw std::logic_error("failed to complete the syndrome basis");
    }
    return rs;
}

TraceCheck verify_trace_preserving(const RecoverySet &rs) {
    if (rs.n > kMaxDenseQubits) {
        throw std::length_error("dense trace check limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << rs.n;
    const Eigen::VectorXcd zero = dense(rs.logical_zero);
    const Eigen::VectorXcd one = dense(rs.logical_one);

    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &r : rs.recovery_ops) {
        Eigen::MatrixXcd op = zero * dense(r.syndrome_zero).adjoint() + one * dense(r.syndrome_one).adjoint();
        total += op.adjoint() * op;
    }
    if (rs.has_complement()) {
        Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(dim, dim);
        for (const auto &c : rs.complement) {
            Eigen::VectorXcd v = dense(c);
            projector += v * v.adjoint();
        }
        total += projector.adjoint() * projector;
    }
    double deviation = (total - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    return {deviation < kSubspaceTolerance, deviation};
}

}  // namespace corrqec
