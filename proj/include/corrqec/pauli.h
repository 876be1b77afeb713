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

#ifndef CORRQEC_PAULI_H
#define CORRQEC_PAULI_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace corrqec {

using Complex = std::complex<double>;
using BasisIndex = std::uint64_t;

/// Amplitudes with magnitude below this are dropped from a SparseState.
inline constexpr double kPruneTolerance = 1e-14;

/// Largest register a SparseState or PauliString may describe.
inline constexpr std::size_t kMaxQubits = 24;

/// Qubit convention used throughout the library: qubit 1 is the least
/// significant bit of a basis index. A ket written |q1 q2 ... qn> (qubit 1
/// leftmost) therefore has index q1 + 2*q2 + ... + 2^(n-1)*qn.
constexpr BasisIndex qubit_bit(std::size_t qubit) { return BasisIndex{1} << (qubit - 1); }

/// Overall phase i^k of a Pauli string, k in {0, 1, 2, 3}.
struct Phase {
    std::uint8_t exponent = 0;

    static constexpr Phase plus_one() { return {0}; }
    static constexpr Phase plus_i() { return {1}; }
    static constexpr Phase minus_one() { return {2}; }
    static constexpr Phase minus_i() { return {3}; }

    constexpr Phase operator*(Phase other) const {
        return {static_cast<std::uint8_t>((exponent + other.exponent) & 3)};
    }
    constexpr bool operator==(const Phase &) const = default;

    Complex value() const;
    std::string str() const;
    static Phase from_str(std::string_view text);
};

/// Signed tensor product of I, X, Z and XZ factors on n qubits.
///
/// The operator is phase * prod_q X_q^{x_q} Z_q^{z_q}; on each qubit Z acts
/// before X, so a basis state first picks up (-1)^{z.b} and is then flipped.
struct PauliString {
    std::size_t n = 0;
    BasisIndex x_mask = 0;
    BasisIndex z_mask = 0;
    Phase phase{};

    PauliString() = default;
    PauliString(std::size_t num_qubits, BasisIndex x, BasisIndex z, Phase sign = {});

    static PauliString identity(std::size_t num_qubits);
    static PauliString x_string(std::size_t num_qubits, BasisIndex mask);
    static PauliString z_string(std::size_t num_qubits, BasisIndex mask);

    /// Parses labels such as "I", "X1X2X3", "-Z2", "X1(XZ)3" with 1-based qubits.
    static PauliString from_label(std::size_t num_qubits, std::string_view label);

    std::size_t weight() const;
    bool is_identity() const { return x_mask == 0 && z_mask == 0; }

    /// Label in the same syntax accepted by from_label; the sign is omitted when +1.
    std::string label() const;

    bool operator==(const PauliString &) const = default;
};

/// Deterministic ordering: ascending weight, then x_mask, then z_mask.
bool weight_order_less(const PauliString &a, const PauliString &b);

/// Sparse complex amplitude vector over the 2^n computational basis.
class SparseState {
   public:
    SparseState() = default;
    explicit SparseState(std::size_t num_qubits);

    static SparseState basis(std::size_t num_qubits, BasisIndex index);

    std::size_t num_qubits() const { return n_; }
    const std::map<BasisIndex, Complex> &amplitudes() const { return amplitudes_; }

    Complex amplitude(BasisIndex index) const;
    /// Adds to an amplitude, dropping the entry if the result falls below kPruneTolerance.
    void add(BasisIndex index, Complex value);

    double norm_squared() const;
    SparseState normalized() const;
    SparseState scaled(Complex factor) const;
    SparseState operator+(const SparseState &other) const;
    SparseState operator-(const SparseState &other) const;

    /// <this|other>, conjugating this state's amplitudes.
    Complex inner(const SparseState &other) const;

    /// Tensor product with `low` occupying qubits 1..low.n and `high` the qubits above.
    static SparseState tensor(const SparseState &low, const SparseState &high);

    bool approx_equal(const SparseState &other, double tol) const;

   private:
    std::size_t n_ = 0;
    std::map<BasisIndex, Complex> amplitudes_;
};

struct BasisImage {
    BasisIndex index;
    Complex phase;
};

PauliString multiply(const PauliString &a, const PauliString &b);
BasisImage apply_to_basis(const PauliString &p, BasisIndex index);
SparseState apply_to_state(const PauliString &p, const SparseState &s);
Complex matrix_element(const SparseState &bra, const PauliString &p, const SparseState &ket);
PauliString hadamard_conjugate(const PauliString &p);
/// Hermitian adjoint; equal to p itself for the real-signed X/Z strings of the noise models.
PauliString adjoint(const PauliString &p);

}  // namespace corrqec

#endif  // CORRQEC_PAULI_H
