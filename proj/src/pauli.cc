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

#include <bit>
#include <cctype>
#include <stdexcept>

namespace corrqec {

namespace {

BasisIndex low_mask(std::size_t n) {
    return n >= 64 ? ~BasisIndex{0} : (BasisIndex{1} << n) - 1;
}

int parity(BasisIndex bits) { return std::popcount(bits) & 1; }

void require_same_size(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": qubit count mismatch (" + std::to_string(a) +
                                    " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

Complex Phase::value() const {
    switch (exponent & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

std::string Phase::str() const {
    static const char *const names[] = {"+1", "+i", "-1", "-i"};
    return names[exponent & 3];
}

Phase Phase::from_str(std::string_view text) {
    if (text == "+1" || text == "1") return plus_one();
    if (text == "+i" || text == "i") return plus_i();
    if (text == "-1") return minus_one();
    if (text == "-i") return minus_i();
    throw std::invalid_argument("unrecognized phase '" + std::string(text) + "'");
}

PauliString::PauliString(std::size_t num_qubits, BasisIndex x, BasisIndex z, Phase sign)
    : n(num_qubits), x_mask(x), z_mask(z), phase(sign) {
    if (num_qubits > 64) {
        throw std::invalid_argument("PauliString supports at most 64 qubits");
    }
    BasisIndex allowed = low_mask(num_qubits);
    if ((x & ~allowed) != 0 || (z & ~allowed) != 0) {
        throw std::invalid_argument("PauliString mask uses bits above qubit " + std::to_string(num_qubits));
    }
}

PauliString PauliString::identity(std::size_t num_qubits) { return {num_qubits, 0, 0}; }

PauliString PauliString::x_string(std::size_t num_qubits, BasisIndex mask) { return {num_qubits, mask, 0}; }

PauliString PauliString::z_string(std::size_t num_qubits, BasisIndex mask) { return {num_qubits, 0, mask}; }

PauliString PauliString::from_label(std::size_t num_qubits, std::string_view label) {
    Phase sign{};
    std::size_t pos = 0;
    if (label.starts_with("-i")) {
        sign = Phase::minus_i();
        pos = 2;
    } else if (label.starts_with("+i")) {
        sign = Phase::plus_i();
        pos = 2;
    } else if (label.starts_with("i")) {
        sign = Phase::plus_i();
        pos = 1;
    } else if (label.starts_with("-")) {
        sign = Phase::minus_one();
        pos = 1;
    } else if (label.starts_with("+")) {
        pos = 1;
    }
    std::string_view body = label.substr(pos);
    if (body == "I") {
        return PauliString(num_qubits, 0, 0, sign);
    }
    if (body.empty()) {
        throw std::invalid_argument("empty Pauli label");
    }

    BasisIndex x = 0;
    BasisIndex z = 0;
    std::size_t i = 0;
    while (i < body.size()) {
        bool has_x = false;
        bool has_z = false;
        if (body.substr(i).starts_with("(XZ)")) {
            has_x = has_z = true;
            i += 4;
        } else if (body[i] == 'X') {
            has_x = true;
            ++i;
        } else if (body[i] == 'Z') {
            has_z = true;
            ++i;
        } else {
            throw std::invalid_argument("bad Pauli label '" + std::string(label) + "'");
        }
        std::size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
            ++i;
        }
        if (start == i) {
            throw std::invalid_argument("missing qubit number in Pauli label '" + std::string(label) + "'");
        }
        std::size_t qubit = std::stoul(std::string(body.substr(start, i - start)));
        if (qubit < 1 || qubit > num_qubits) {
            throw std::invalid_argument("qubit " + std::to_string(qubit) + " out of range in '" +
                                        std::string(label) + "'");
        }
        BasisIndex bit = qubit_bit(qubit);
        if (((x | z) & bit) != 0) {
            throw std::invalid_argument("qubit repeated in Pauli label '" + std::string(label) + "'");
        }
        if (has_x) x |= bit;
        if (has_z) z |= bit;
    }
    return PauliString(num_qubits, x, z, sign);
}

std::size_t PauliString::weight() const { return static_cast<std::size_t>(std::popcount(x_mask | z_mask)); }

std::string PauliString::label() const {
    std::string out;
    switch (phase.exponent & 3) {
        case 1:
            out = "i";
            break;
        case 2:
            out = "-";
            break;
        case 3:
            out = "-i";
            break;
        default:
            break;
    }
    if (is_identity()) {
        return out + "I";
    }
    for (std::size_t q = 1; q <= n; ++q) {
        BasisIndex bit = qubit_bit(q);
        bool has_x = (x_mask & bit) != 0;
        bool has_z = (z_mask & bit) != 0;
        if (has_x && has_z) {
            out += "(XZ)";
        } else if (has_x) {
            out += "X";
        } else if (has_z) {
            out += "Z";
        } else {
            continue;
        }
        out += std::to_string(q);
    }
    return out;
}

bool weight_order_less(const PauliString &a, const PauliString &b) {
    auto wa = a.weight();
    auto wb = b.weight();
    if (wa != wb) return wa < wb;
    if (a.x_mask != b.x_mask) return a.x_mask < b.x_mask;
    return a.z_mask < b.z_mask;
}

SparseState::SparseState(std::size_t num_qubits) : n_(num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw std::length_error("SparseState supports at most " + std::to_string(kMaxQubits) + " qubits");
    }
}

SparseState SparseState::basis(std::size_t num_qubits, BasisIndex index) {
    SparseState s(num_qubits);
    if (index > low_mask(num_qubits)) {
        throw std::out_of_range("basis index out of range");
    }
    s.add(index, 1.0);
    return s;
}

Complex SparseState::amplitude(BasisIndex index) const {
    auto it = amplitudes_.find(index);
    return it == amplitudes_.end() ? Complex{} : it->second;
}

void SparseState::add(BasisIndex index, Complex value) {
    if (index > low_mask(n_)) {
        throw std::out_of_range("basis index out of range");
    }
    auto [it, inserted] = amplitudes_.try_emplace(index, value);
    if (!inserted) {
        it->second += value;
    }
    if (std::abs(it->second) < kPruneTolerance) {
        amplitudes_.erase(it);
    }
}

double SparseState::norm_squared() const {
    double total = 0;
    for (const auto &[index, amp] : amplitudes_) {
        total += std::norm(amp);
    }
    return total;
}

SparseState SparseState::normalized() const {
    double norm = std::sqrt(norm_squared());
    if (norm == 0) {
        throw std::invalid_argument("cannot normalize the zero state");
    }
    return scaled(1.0 / norm);
}

SparseState SparseState::scaled(Complex factor) const {
    SparseState out(n_);
    for (const auto &[index, amp] : amplitudes_) {
        out.add(index, amp * factor);
    }
    return out;
}

SparseState SparseState::operator+(const SparseState &other) const {
    require_same_size(n_, other.n_, "SparseState addition");
    SparseState out = *this;
    for (const auto &[index, amp] : other.amplitudes_) {
        out.add(index, amp);
    }
    return out;
}

SparseState SparseState::operator-(const SparseState &other) const { return *this + other.scaled(-1.0); }

Complex SparseState::inner(const SparseState &other) const {
    require_same_size(n_, other.n_, "inner product");
    Complex total{};
    if (amplitudes_.size() <= other.amplitudes_.size()) {
        for (const auto &[index, amp] : amplitudes_) {
            auto it = other.amplitudes_.find(index);
            if (it != other.amplitudes_.end()) total += std::conj(amp) * it->second;
        }
    } else {
        for (const auto &[index, amp] : other.amplitudes_) {
            auto it = amplitudes_.find(index);
            if (it != amplitudes_.end()) total += std::conj(it->second) * amp;
        }
    }
    return total;
}

SparseState SparseState::tensor(const SparseState &low, const SparseState &high) {
    SparseState out(low.n_ + high.n_);
    for (const auto &[hi_index, hi_amp] : high.amplitudes_) {
        for (const auto &[lo_index, lo_amp] : low.amplitudes_) {
            out.add((hi_index << low.n_) | lo_index, hi_amp * lo_amp);
        }
    }
    return out;
}

bool SparseState::approx_equal(const SparseState &other, double tol) const {
    if (n_ != other.n_) return false;
    for (const auto &[index, amp] : amplitudes_) {
        if (std::abs(amp - other.amplitude(index)) > tol) return false;
    }
    for (const auto &[index, amp] : other.amplitudes_) {
        if (std::abs(amp - amplitude(index)) > tol) return false;
    }
    return true;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    require_same_size(a.n, b.n, "Pauli multiply");
    // Moving b's X factors left past a's Z factors costs one sign per shared qubit.
    Phase sign = a.phase * b.phase;
    if (parity(a.z_mask & b.x_mask)) {
        sign = sign * Phase::minus_one();
    }
    return PauliString(a.n, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask, sign);
}

BasisImage apply_to_basis(const PauliString &p, BasisIndex index) {
    if (index > low_mask(p.n)) {
        throw std::out_of_range("basis index out of range for " + std::to_string(p.n) + " qubits");
    }
    Complex phase = p.phase.value();
    if (parity(p.z_mask & index)) {
        phase = -phase;
    }
    return {index ^ p.x_mask, phase};
}

SparseState apply_to_state(const PauliString &p, const SparseState &s) {
    require_same_size(p.n, s.num_qubits(), "apply_to_state");
    SparseState out(s.num_qubits());
    for (const auto &[index, amp] : s.amplitudes()) {
        auto image = apply_to_basis(p, index);
        out.add(image.index, image.phase * amp);
    }
    return out;
}

Complex matrix_element(const SparseState &bra, const PauliString &p, const SparseState &ket) {
    require_same_size(bra.num_qubits(), p.n, "matrix_element");
    require_same_size(ket.num_qubits(), p.n, "matrix_element");
    Complex total{};
    for (const auto &[index, amp] : ket.amplitudes()) {
        auto image = apply_to_basis(p, index);
        Complex target = bra.amplitude(image.index);
        if (target != Complex{}) {
            total += std::conj(target) * image.phase * amp;
        }
    }
    return total;
}

PauliString hadamard_conjugate(const PauliString &p) {
    // H X^x Z^z H = Z^x X^z = (-1)^{x.z} X^z Z^x per qubit.
    Phase sign = p.phase;
    if (parity(p.x_mask & p.z_mask)) {
        sign = sign * Phase::minus_one();
    }
    return PauliString(p.n, p.z_mask, p.x_mask, sign);
}

PauliString adjoint(const PauliString &p) {
    // (X^x Z^z)^dagger = Z^z X^x = (-1)^{x.z} X^x Z^z, and the phase is conjugated.
    Phase sign{static_cast<std::uint8_t>((4 - p.phase.exponent) & 3)};
    if (parity(p.x_mask & p.z_mask)) {
        sign = sign * Phase::minus_one();
    }
    return PauliString(p.n, p.x_mask, p.z_mask, sign);
}

}  // namespace corrqec
