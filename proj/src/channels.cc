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

#include "corrqec/channels.h"

#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace corrqec {

namespace {

void require_probability(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
    }
}

BasisIndex all_qubits(std::size_t n) { return n >= 64 ? ~BasisIndex{0} : (BasisIndex{1} << n) - 1; }

PauliString flip_string(std::size_t n, BasisIndex mask, Flavor flavor) {
    return flavor == Flavor::bit ? PauliString::x_string(n, mask) : PauliString::z_string(n, mask);
}

// Largest register for which 2^n Kraus terms are enumerated.
constexpr std::size_t kMaxChannelQubits = 20;

}  // namespace

std::string to_string(Model model) { return model == Model::model1 ? "1" : "2"; }

std::string to_string(Flavor flavor) { return flavor == Flavor::bit ? "bit" : "phase"; }

Model parse_model(const std::string &text) {
    if (text == "1" || text == "I" || text == "model1") return Model::model1;
    if (text == "2" || text == "II" || text == "model2") return Model::model2;
    throw std::invalid_argument("unknown model '" + text + "' (expected 1 or 2)");
}

Flavor parse_flavor(const std::string &text) {
    if (text == "bit") return Flavor::bit;
    if (text == "phase") return Flavor::phase;
    throw std::invalid_argument("unknown flavor '" + text + "' (expected bit or phase)");
}

void ChannelParams::validate() const {
    require_probability(p, "p");
    require_probability(mu, "mu");
    if (n < 1) {
        throw std::invalid_argument("channel needs at least one qubit");
    }
    if (n > kMaxChannelQubits) {
        throw std::length_error("channel enumeration limited to " + std::to_string(kMaxChannelQubits) + " qubits");
    }
}

double NoiseChannel::total_weight() const {
    double total = 0;
    for (const auto &term : kraus) {
        total += term.weight;
    }
    return total;
}

double conditional_probability(int i_k, int i_j, double p, double mu) {
    require_probability(p, "p");
    require_probability(mu, "mu");
    if ((i_k != 0 && i_k != 1) || (i_j != 0 && i_j != 1)) {
        throw std::invalid_argument("conditional_probability indices must be 0 or 1");
    }
    double marginal = i_k == 1 ? p : 1.0 - p;
    return (1.0 - mu) * marginal + mu * (i_k == i_j ? 1.0 : 0.0);
}

NoiseChannel model1_channel(const ChannelParams &params) {
    params.validate();
    NoiseChannel channel;
    channel.params = params;
    channel.params.model = Model::model1;
    channel.merged = true;

    const std::size_t n = params.n;
    const BasisIndex count = BasisIndex{1} << n;
    channel.kraus.reserve(count);
    for (BasisIndex bits = 0; bits < count; ++bits) {
        int previous = static_cast<int>(bits & 1);
        double weight = previous ? params.p : 1.0 - params.p;
        for (std::size_t k = 1; k < n; ++k) {
            int current = static_cast<int>((bits >> k) & 1);
            weight *= conditional_probability(current, previous, params.p, params.mu);
            previous = current;
        }
        channel.kraus.push_back({weight, flip_string(n, bits, params.flavor)});
    }
    return channel;
}

NoiseChannel model2_channel(const ChannelParams &params, KrausForm form) {
    params.validate();
    const std::size_t n = params.n;

    NoiseChannel channel;
    channel.params = params;
    channel.params.model = Model::model2;
    channel.merged = false;

    if (params.mu != 1.0) {
        ChannelParams memoryless = params;
        memoryless.mu = 0;
        for (const auto &term : model1_channel(memoryless).kraus) {
            channel.kraus.push_back({(1.0 - params.mu) * term.weight, term.op});
        }
    }
    if (params.mu != 0.0) {
        double no_error = std::pow(1.0 - params.p, static_cast<double>(n));
        channel.kraus.push_back({params.mu * no_error, PauliString::identity(n)});
        channel.kraus.push_back({params.mu * (1.0 - no_error), flip_string(n, all_qubits(n), params.flavor)});
    }

    return form == KrausForm::merged ? merge(channel) : channel;
}

NoiseChannel make_channel(const ChannelParams &params, KrausForm form) {
    return params.model == Model::model1 ? model1_channel(params) : model2_channel(params, form);
}

NoiseChannel phase_flavor(const NoiseChannel &channel) {
    NoiseChannel out = channel;
    out.params.flavor = channel.params.flavor == Flavor::bit ? Flavor::phase : Flavor::bit;
    for (auto &term : out.kraus) {
        term.op = hadamard_conjugate(term.op);
    }
    return out;
}

NoiseChannel merge(const NoiseChannel &channel) {
    NoiseChannel out;
    out.params = channel.params;
    out.merged = true;
    std::map<std::tuple<BasisIndex, BasisIndex, std::uint8_t>, std::size_t> position;
    for (const auto &term : channel.kraus) {
        auto key = std::make_tuple(term.op.x_mask, term.op.z_mask, term.op.phase.exponent);
        auto [it, inserted] = position.try_emplace(key, out.kraus.size());
        if (inserted) {
            out.kraus.push_back(term);
        } else {
            out.kraus[it->second].weight += term.weight;
        }
    }
    return out;
}

}  // namespace corrqec
