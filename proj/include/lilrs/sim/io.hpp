// Copyright 2026 The lilrs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include "lilrs/channel.hpp"
#include "lilrs/code.hpp"
#include "lilrs/decoders.hpp"

namespace lilrs::sim {

using Json = nlohmann::json;

// Field elements are written as packed base-q integers (digit j has weight q^j).
Json to_json(const FqmMatrix& m);
FqmMatrix fqm_matrix_from_json(const ExtensionField& f, const Json& j, std::size_t cols);

// {"shots": [matrix, ...]}, each matrix n_i x (s + 1).
Json to_json(const CodeSpec& spec, const LiftedWord& w);
LiftedWord lifted_word_from_json(const CodeSpec& spec, const Json& j);

// [[coefficients of f_1], ...]
Json to_json(const MessageVector& f);
MessageVector message_from_json(const CodeSpec& spec, const Json& j);

// Subspace as {"ambient": N, "rows": ["0120", ...]}.
Json to_json(const Subspace& v);
Subspace subspace_from_json(unsigned q, const Json& j);

Json to_json(const ChannelRealization& r);
ChannelRealization realization_from_json(unsigned q, const Json& j);

Json to_json(const DecodeOutcome& out);

Json spec_summary(const CodeSpec& spec);

}  // namespace lilrs::sim
