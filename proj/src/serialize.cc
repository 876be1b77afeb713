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

#include "corrqec/serialize.h"

#include <stdexcept>

namespace corrqec {

Json channel_to_json(const NoiseChannel &channel) {
    Json kraus = Json::array();
    for (const auto &term : channel.kraus) {
        kraus.push_back({{"weight", term.weight},
                         {"x_mask", term.op.x_mask},
                         {"z_mask", term.op.z_mask},
                         {"sign", term.op.phase.str()}});
    }
    return {{"model", to_string(channel.params.model)},
            {"flavor", to_string(channel.params.flavor)},
            {"n", channel.params.n},
            {"p", channel.params.p},
            {"mu", channel.params.mu},
            {"merged", channel.merged},
            {"kraus", kraus}};
}

NoiseChannel channel_from_json(const Json &doc) {
    NoiseChannel channel;
    channel.params.model = parse_model(doc.at("model").get<std::string>());
    channel.params.flavor = parse_flavor(doc.at("flavor").get<std::string>());
    channel.params.n = doc.at("n").get<std::size_t>();
    channel.params.p = doc.at("p").get<double>();
    channel.params.mu = doc.at("mu").get<double>();
    channel.params.validate();
    channel.merged = doc.value("merged", true);
    for (const auto &term : doc.at("kraus")) {
        channel.kraus.push_back({term.at("weight").get<double>(),
                                 PauliString(channel.params.n, term.at("x_mask").get<BasisIndex>(),
                                             term.at("z_mask").get<BasisIndex>(),
                                             Phase::from_str(term.at("sign").get<std::string>()))});
    }
    return channel;
}

Json state_to_json(const SparseState &state) {
    Json out = Json::array();
    for (const auto &[index, amp] : state.amplitudes()) {
        out.push_back({{"index", index}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    return out;
}

SparseState state_from_json(std::size_t n, const Json &doc) {
    SparseState state(n);
    for (const auto &entry : doc) {
        state.add(entry.at("index").get<BasisIndex>(), {entry.at("re").get<double>(), entry.at("im").get<double>()});
    }
    return state;
}

Json code_to_json(const QuantumCode &code) {
    return {{"label", code.label},
            {"n", code.n},
            {"codewords", Json::array({state_to_json(code.logical_zero), state_to_json(code.logical_one)})}};
}

QuantumCode code_from_json(const Json &doc) {
    QuantumCode code;
    code.label = doc.at("label").get<std::string>();
    code.n = doc.at("n").get<std::size_t>();
    const auto &words = doc.at("codewords");
    if (words.size() != 2) {
        throw std::invalid_argument("code document must list exactly two codewords");
    }
    code.logical_zero = state_from_json(code.n, words[0]);
    code.logical_one = state_from_json(code.n, words[1]);
    validate(code);
    return code;
}

Json recovery_to_json(const std::vector<PauliString> &correctable, const RecoverySet &rs) {
    Json labels = Json::array();
    for (const auto &op : correctable) {
        labels.push_back(op.label());
    }
    Json ops = Json::array();
    for (const auto &r : rs.recovery_ops) {
        Json corrects = Json::array();
        for (const auto &c : r.corrects) {
            corrects.push_back({{"op", c.op.label()}, {"factor_re", c.factor.real()}, {"factor_im", c.factor.imag()}});
        }
        ops.push_back({{"corrects", corrects},
                       {"syndrome_zero", state_to_json(r.syndrome_zero)},
                       {"syndrome_one", state_to_json(r.syndrome_one)}});
    }
    Json complement = Json::array();
    for (const auto &c : rs.complement) {
        complement.push_back(state_to_json(c));
    }
    return {{"n", rs.n}, {"correctable", labels}, {"recovery_ops", ops}, {"complement", complement}};
}

}  // namespace corrqec
