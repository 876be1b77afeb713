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

#ifndef CORRQEC_CODES_H
#define CORRQEC_CODES_H

#include <cstddef>
#include <string>

#include "corrqec/channels.h"
#include "corrqec/pauli.h"

namespace corrqec {

/// One logical qubit encoded in n physical qubits, given by its two codewords.
struct QuantumCode {
    std::string label;
    std::size_t n = 0;
    SparseState logical_zero;
    SparseState logical_one;

    const SparseState &codeword(int logical) const { return logical == 0 ? logical_zero : logical_one; }
};

/// Throws std::invalid_argument unless both codewords are normalized and orthogonal (tol 1e-12).
void validate(const QuantumCode &code);

/// |0> -> |0>, |1> -> |1> on one qubit. Concatenating with it changes nothing.
QuantumCode trivial_code();

/// |000>, |111>.
QuantumCode bitflip3();

/// |+++>, |--->.
QuantumCode phaseflip3();

/// Two-qubit error-avoiding code: |+->, |-+> for bit flips; |01>, |10> for phase flips.
QuantumCode dfs2(Flavor flavor);

/// Replaces every physical qubit of `top` by a block of `bottom` qubits holding
/// bottom's codeword for that qubit's basis value. Top qubit j (1-based) occupies
/// qubits (j-1)*bottom.n + 1 .. j*bottom.n of the result.
QuantumCode concatenate(const QuantumCode &top, const QuantumCode &bottom, std::size_t max_qubits = kMaxQubits);

/// Applies H to every qubit of both codewords.
QuantumCode hadamard_image(const QuantumCode &code, std::string label);

/// The six-qubit code: dfs2 over bit3. The phase flavor is its Hadamard image,
/// which keeps phase-flip fidelities identical to the bit-flip ones. Note that
/// concatenate(dfs2(phase), phaseflip3()) gives |+++---> and |---+++> instead, a
/// different code on which Z^6 acts as a logical X.
QuantumCode concat6(Flavor flavor);

}  // namespace corrqec

#endif  // CORRQEC_CODES_H
