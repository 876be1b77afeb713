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

#ifndef CORRQEC_CHANNELS_H
#define CORRQEC_CHANNELS_H

#include <cstddef>
#include <string>
#include <vector>

#include "corrqec/pauli.h"

namespace corrqec {

enum class Model { model1, model2 };
enum class Flavor { bit, phase };

/// Which decomposition of a channel's Kraus list to produce.
///
/// The unmerged form keeps the identity (and all-qubit flip) terms of each mixed
/// component separate. Fidelity only depends on total weight per distinct Pauli,
/// so both forms evaluate identically.
enum class KrausForm { merged, unmerged };

std::string to_string(Model model);
std::string to_string(Flavor flavor);
Model parse_model(const std::string &text);
Flavor parse_flavor(const std::string &text);

struct ChannelParams {
    double p = 0;
    double mu = 0;
    std::size_t n = 1;
    Flavor flavor = Flavor::bit;
    Model model = Model::model1;

    /// Throws std::invalid_argument unless p, mu are in [0,1] and n >= 1.
    void validate() const;
};

struct KrausTerm {
    /// Probability weight; the Kraus operator is sqrt(weight) * op.
    double weight = 0;
    PauliString op;
};

struct NoiseChannel {
    ChannelParams params;
    std::vector<KrausTerm> kraus;
    bool merged = true;

    std::size_t num_qubits() const { return params.n; }
    double total_weight() const;
};

/// p_{i_k | i_j} = (1 - mu) p_{i_k} + mu delta(i_k, i_j), with p_0 = 1 - p and p_1 = p.
double conditional_probability(int i_k, int i_j, double p, double mu);

/// Markov-correlated flip channel. Term for index bits (i_1..i_n), qubit 1 = LSB,
/// has weight p_{i_n|i_{n-1}} ... p_{i_2|i_1} p_{i_1}. Terms are ordered by index.
NoiseChannel model1_channel(const ChannelParams &params);

/// (1 - mu) * memoryless channel + mu * {identity: (1-p)^n, all-qubit flip: 1-(1-p)^n}.
/// A component whose mixing coefficient is exactly zero contributes no terms.
NoiseChannel model2_channel(const ChannelParams &params, KrausForm form = KrausForm::merged);

/// Dispatches on params.model.
NoiseChannel make_channel(const ChannelParams &params, KrausForm form = KrausForm::merged);

/// Hadamard-conjugates every Kraus operator (X strings become Z strings).
NoiseChannel phase_flavor(const NoiseChannel &channel);

/// Sums weights of identical Pauli operators; first occurrence fixes the order.
NoiseChannel merge(const NoiseChannel &channel);

}  // namespace corrqec

#endif  // CORRQEC_CHANNELS_H
