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

#ifndef CORRQEC_RECOVERY_H
#define CORRQEC_RECOVERY_H

#include <cstddef>
#include <vector>

#include "corrqec/channels.h"
#include "corrqec/codes.h"
#include "corrqec/pauli.h"

namespace corrqec {

/// Tolerance for every subspace, overlap and detectability comparison.
inline constexpr double kSubspaceTolerance = 1e-10;

struct DetectabilityReport {
    PauliString op;
    bool detectable = false;
    /// Scalar the operator acts as on the code space; meaningful only when detectable.
    Complex lambda{};
};

/// P_C A P_C = lambda P_C, checked through the four logical matrix elements.
DetectabilityReport is_detectable(const QuantumCode &code, const PauliString &op);

/// Knill-Laflamme condition for the pair: <i_L| a^dagger b |j_L> = alpha delta_ij.
bool knill_laflamme_compatible(const QuantumCode &code, const PauliString &a, const PauliString &b);

/// Greedy maximal Knill-Laflamme-compatible subset of the channel's distinct Pauli
/// operators, scanning candidates by ascending weight, then x_mask, then z_mask.
/// Zero-weight Kraus terms are still candidates.
std::vector<PauliString> correctable_set(const QuantumCode &code, const NoiseChannel &channel);

struct SwapAlternative {
    PauliString incoming;
    PauliString outgoing;
};

/// Candidates outside `chosen` that conflict with exactly one chosen operator, so that
/// exchanging the two gives another compatible set of the same size.
std::vector<SwapAlternative> single_swap_alternatives(const QuantumCode &code, const NoiseChannel &channel,
                                                      const std::vector<PauliString> &chosen);

struct CorrectedError {
    PauliString op;
    /// R A |i_L> = factor |i_L> for both logical states.
    Complex factor{1.0};
};

/// Partial isometry |0_L><v^0| + |1_L><v^1| sending one syndrome subspace to the code.
struct RecoveryOperator {
    SparseState syndrome_zero;
    SparseState syndrome_one;
    /// Correctable errors whose images land in this syndrome subspace. More than one
    /// entry means the code is degenerate for those errors.
    std::vector<CorrectedError> corrects;
};

struct RecoverySet {
    std::size_t n = 0;
    SparseState logical_zero;
    SparseState logical_one;
    std::vector<RecoveryOperator> recovery_ops;
    /// Orthonormal basis of the part of the space no correctable error reaches;
    /// together they form the projector R_perp. Empty when the syndromes fill the space.
    std::vector<SparseState> complement;

    bool has_complement() const { return !complement.empty(); }
};

/// Builds one recovery operator per syndrome subspace. Errors whose images coincide with
/// an existing syndrome subspace (up to a common phase) share its operator. Throws
/// std::logic_error if two syndrome subspaces overlap partially.
RecoverySet build_recovery(const QuantumCode &code, const std::vector<PauliString> &correctable);

struct TraceCheck {
    bool trace_preserving = false;
    double max_deviation = 0;
};

/// Dense check of sum_l R_l^dagger R_l + R_perp^dagger R_perp = I; supports n <= 10.
TraceCheck verify_trace_preserving(const RecoverySet &rs);

}  // namespace corrqec

#endif  // CORRQEC_RECOVERY_H
