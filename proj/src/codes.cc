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

#include "corrqec/codes.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace corrqec {

namespace {

constexpr double kCodeTolerance = 1e-12;

QuantumCode make_code(std::string label, SparseState zero, SparseState one) {
    QuantumCode code{std::move(label), zero.num_qubits(), std::move(zero), std::move(one)};
    validate(code);
    return code;
}

// Product state with qubit q (1-based) in |+> or |-> according to bit q-1 of minus_mask.
SparseState plus_minus_product(std::size_t n, BasisIndex minus_mask) {
    SparseState out(n);
    const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
    for (BasisIndex index = 0; index < (BasisIndex{1} << n); ++index) {
        bool negative = std::popcount(index & minus_mask) & 1;
        out.add(index, negative ? -amp : amp);
    }
    return out;
}

}  // namespace

void validate(const QuantumCode &code) {
    for (int i = 0; i < 2; ++i) {
        const auto &word = code.codeword(i);
        if (word.num_qubits() != code.n) {
            throw std::invalid_argument(code.label + ": codeword qubit count differs from code size");
        }
        if (std::abs(word.norm_squared() - 1.0) > kCodeTolerance) {
            throw std::invalid_argument(code.label + ": codeword |" + std::to_string(i) + "_L> is not normalized");
        }
    }
    if (std::abs(code.logical_zero.inner(code.logical_one)) > kCodeTolerance) {
        throw std::invalid_argument(code.label + ": codewords are not orthogonal");
    }
}

QuantumCode trivial_code() { return make_code("trivial", SparseState::basis(1, 0), SparseState::basis(1, 1)); }

QuantumCode bitflip3() { return make_code("bit3", SparseState::basis(3, 0b000), SparseState::basis(3, 0b111)); }

QuantumCode phaseflip3() {
    return make_code("phase3", plus_minus_product(3, 0b000), plus_minus_product(3, 0b111));
}

QuantumCode dfs2(Flavor flavor) {
    if (flavor == Flavor::bit) {
        // |+-> has qubit 2 in |->; |-+> has qubit 1 in |->.
        return make_code("dfs2", plus_minus_product(2, qubit_bit(2)), plus_minus_product(2, qubit_bit(1)));
    }
    // |01>: qubit 2 set; |10>: qubit 1 set.
    return make_code("dfs2-phase", SparseState::basis(2, qubit_bit(2)), SparseState::basis(2, qubit_bit(1)));
}

QuantumCode concatenate(const QuantumCode &top, const QuantumCode &bottom, std::size_t max_qubits) {
    const std::size_t n = top.n * bottom.n;
    if (n > max_qubits || n > kMaxQubits) {
        throw std::length_error("concatenated code needs " + std::to_string(n) + " qubits, limit is " +
                                std::to_string(std::min(max_qubits, kMaxQubits)));
    }

    auto substitute = [&](const SparseState &word) {
        SparseState out(n);
        for (const auto &[index, amp] : word.amplitudes()) {
            SparseState block_state(0);
            block_state.add(0, amp);
            for (std::size_t q = 1; q <= top.n; ++q) {
                int value = static_cast<int>((index >> (q - 1)) & 1);
                block_state = SparseState::tensor(block_state, bottom.codeword(value));
            }
            out = out + block_state;
        }
        return out.normalized();
    };

    QuantumCode code{top.label + "*" + bottom.label, n, substitute(top.logical_zero), substitute(top.logical_one)};
    validate(code);
    return code;
}

QuantumCode hadamard_image(const QuantumCode &code, std::string label) {
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(code.n));
    auto transform = [&](const SparseState &in) {
        SparseState out(code.n);
        for (BasisIndex target = 0; target < (BasisIndex{1} << code.n); ++target) {
            Complex sum = 0;
            for (const auto &[index, amp] : in.amplitudes()) {
                sum += (std::popcount(index & target) & 1) ? -amp : amp;
            }
            out.add(target, sum * scale);
        }
        return out;
    };
    QuantumCode image{std::move(label), code.n, transform(code.logical_zero), transform(code.logical_one)};
    validate(image);
    return image;
}

QuantumCode concat6(Flavor flavor) {
    QuantumCode code = concatenate(dfs2(Flavor::bit), bitflip3());
    if (flavor == Flavor::phase) {
        return hadamard_image(code, "concat6-phase");
    }
    code.label = "concat6";
    return code;
}

}  // namespace corrqec
