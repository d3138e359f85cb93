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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lilrs/code.hpp"

namespace lilrs::sim {

enum class DecoderKind { Lo, List, Unique, Complementary };

std::string to_string(DecoderKind d);
DecoderKind parse_decoder(const std::string& name);

struct FieldConfig {
  unsigned q = 3;
  unsigned m = 3;
  unsigned r = 1;
  std::vector<unsigned> modulus;  // empty: built-in choice
};

struct CodeConfig {
  std::size_t interleaving = 1;
  std::vector<std::size_t> shot_dims{1};
  std::size_t k = 1;
  // Field elements as packed base-q integers; empty means defaults.
  std::vector<std::vector<std::uint32_t>> locators;
  std::vector<std::uint32_t> params;
};

struct ExperimentConfig {
  FieldConfig field;
  CodeConfig code;
  std::vector<std::size_t> gammas{0};
  std::vector<std::size_t> deltas{0};
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  DecoderKind decoder = DecoderKind::Unique;
  std::string out;            // empty: stdout
  unsigned workers = 1;
  std::string dump_failures;  // directory, empty: off
  std::optional<std::uint64_t> stop_after_failures;
  std::uint64_t exhaustive_cap = 10000;
  std::size_t max_list = 4096;
};

// YAML text or file. Unknown keys are rejected so typos do not pass silently.
ExperimentConfig parse_config(const std::string& yaml_text);
ExperimentConfig load_config(const std::string& path);
std::string dump_config(const ExperimentConfig& cfg);

CodeSpec build_code(const ExperimentConfig& cfg);

}  // namespace lilrs::sim
