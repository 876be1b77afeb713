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

#ifndef CORRQEC_SERIALIZE_H
#define CORRQEC_SERIALIZE_H

#include <json.hpp>

#include "corrqec/channels.h"
#include "corrqec/codes.h"
#include "corrqec/recovery.h"

namespace corrqec {

using Json = nlohmann::ordered_json;

/// {model, flavor, n, p, mu, merged, kraus: [{weight, x_mask, z_mask, sign}]}
Json channel_to_json(const NoiseChannel &channel);
NoiseChannel channel_from_json(const Json &doc);

/// {label, n, codewords: [[{index, re, im}, ...] for |0_L>, [...] for |1_L>]}
Json code_to_json(const QuantumCode &code);
QuantumCode code_from_json(const Json &doc);

Json state_to_json(const SparseState &state);
SparseState state_from_json(std::size_t n, const Json &doc);

/// {n, correctable: [labels], recovery_ops: [{corrects: [{op, factor}], syndrome_zero, syndrome_one}], complement: [...]}
Json recovery_to_json(const std::vector<PauliString> &correctable, const RecoverySet &rs);

}  // namespace corrqec

#endif  // CORRQEC_SERIALIZE_H
