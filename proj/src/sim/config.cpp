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

#include "lilrs/sim/config.hpp"

#include <set>
#include <stdexcept>

#include <yaml-cpp/yaml.h>

namespace lilrs::sim {

std::string to_string(DecoderKind d) {
  switch (d) {
    case DecoderKind::Lo: return "lo";
    case DecoderKind::List: return "list";
    case DecoderKind::Unique: return "unique";
    case DecoderKind::Complementary: return "complementary";
  }
  return "unknown";
}

DecoderKind parse_decoder(const std::string& name) {
  if (name == "lo") return DecoderKind::Lo;
  if (name == "list") return DecoderKind::List;
  if (name == "unique") return DecoderKind::Unique;
  if (name == "complementary") return DecoderKind::Complementary;
  throw std::invalid_argument("unknown decoder '" + name + "' (lo, list, unique, complementary)");
}

namespace {

void reject_unknown(const YAML::Node& node, const std::set<std::string>& allowed, const std::string& where) {
  if (!node.IsMap()) throw std::invalid_argument(where + " must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) throw std::invalid_argument("unknown key '" + key + "' in " + where);
  }
}

// Scalar or list of non-negative integers.
std::vector<std::size_t> size_list(const YAML::Node& n) {
  if (n.IsSequence()) return n.as<std::vector<std::size_t>>();
  return {n.as<std::size_t>()};
}

}  // namespace

ExperimentConfig parse_config(const std::string& yaml_text) {
  ExperimentConfig cfg;
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("config is not valid YAML: ") + e.what());
  }
  if (!root || root.IsNull()) return cfg;
  try {
    reject_unknown(root, {"field", "code", "channel", "trials", "seed", "decoder", "out", "workers",
                          "dump_failures", "stop_after_failures", "exhaustive_cap", "max_list"},
                   "config");
    if (auto f = root["field"]) {
      reject_unknown(f, {"q", "m", "r", "modulus"}, "field");
      if (f["q"]) cfg.field.q = f["q"].as<unsigned>();
      if (f["m"]) cfg.field.m = f["m"].as<unsigned>();
      if (f["r"]) cfg.field.r = f["r"].as<unsigned>();
      if (f["modulus"]) cfg.field.modulus = f["modulus"].as<std::vector<unsigned>>();
    }
    if (auto c = root["code"]) {
      reject_unknown(c, {"s", "shots", "k", "locators", "params"}, "code");
      if (c["s"]) cfg.code.interleaving = c["s"].as<std::size_t>();
      if (c["shots"]) cfg.code.shot_dims = c["shots"].as<std::vector<std::size_t>>();
      if (c["k"]) cfg.code.k = c["k"].as<std::size_t>();
      if (c["locators"]) cfg.code.locators = c["locators"].as<std::vector<std::vector<std::uint32_t>>>();
      if (c["params"]) cfg.code.params = c["params"].as<std::vector<std::uint32_t>>();
    }
    if (auto ch = root["channel"]) {
      reject_unknown(ch, {"gamma", "delta"}, "channel");
      if (ch["gamma"]) cfg.gammas = size_list(ch["gamma"]);
      if (ch["delta"]) cfg.deltas = size_list(ch["delta"]);
    }
    if (root["trials"]) cfg.trials = root["trials"].as<std::uint64_t>();
    if (root["seed"]) cfg.seed = root["seed"].as<std::uint64_t>();
    if (root["decoder"]) cfg.decoder = parse_decoder(root["decoder"].as<std::string>());
    if (root["out"]) cfg.out = root["out"].as<std::string>();
    if (root["workers"]) cfg.workers = root["workers"].as<unsigned>();
    if (root["dump_failures"]) cfg.dump_failures = root["dump_failures"].as<std::string>();
    if (root["stop_after_failures"]) cfg.stop_after_failures = root["stop_after_failures"].as<std::uint64_t>();
    if (root["exhaustive_cap"]) cfg.exhaustive_cap = root["exhaustive_cap"].as<std::uint64_t>();
    if (root["max_list"]) cfg.max_list = root["max_list"].as<std::size_t>();
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (cfg.gammas.empty() || cfg.deltas.empty()) throw std::invalid_argument("channel sweep lists must be nonempty");
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  YAML::Node n;
  try {
    n = YAML::LoadFile(path);
  } catch (const YAML::BadFile&) {
    throw std::invalid_argument("cannot read config file " + path);
  }
  return parse_config(YAML::Dump(n));
}

std::string dump_config(const ExperimentConfig& cfg) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "field" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "q" << YAML::Value << cfg.field.q;
  out << YAML::Key << "m" << YAML::Value << cfg.field.m;
  out << YAML::Key << "r" << YAML::Value << cfg.field.r;
  if (!cfg.field.modulus.empty()) out << YAML::Key << "modulus" << YAML::Value << YAML::Flow << cfg.field.modulus;
  out << YAML::EndMap;
  out << YAML::Key << "code" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "s" << YAML::Value << cfg.code.interleaving;
  out << YAML::Key << "shots" << YAML::Value << YAML::Flow << cfg.code.shot_dims;
  out << YAML::Key << "k" << YAML::Value << cfg.code.k;
  if (!cfg.code.locators.empty()) out << YAML::Key << "locators" << YAML::Value << YAML::Flow << cfg.code.locators;
  if (!cfg.code.params.empty()) out << YAML::Key << "params" << YAML::Value << YAML::Flow << cfg.code.params;
  out << YAML::EndMap;
  out << YAML::Key << "channel" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "gamma" << YAML::Value << YAML::Flow << cfg.gammas;
  out << YAML::Key << "delta" << YAML::Value << YAML::Flow << cfg.deltas;
  out << YAML::EndMap;
  out << YAML::Key << "trials" << YAML::Value << cfg.trials;
  out << YAML::Key << "seed" << YAML::Value << cfg.seed;
  out << YAML::Key << "decoder" << YAML::Value << to_string(cfg.decoder);
  out << YAML::Key << "workers" << YAML::Value << cfg.workers;
  if (!cfg.out.empty()) out << YAML::Key << "out" << YAML::Value << cfg.out;
  if (!cfg.dump_failures.empty()) out << YAML::Key << "dump_failures" << YAML::Value << cfg.dump_failures;
  if (cfg.stop_after_failures) out << YAML::Key << "stop_after_failures" << YAML::Value << *cfg.stop_after_failures;
  out << YAML::Key << "exhaustive_cap" << YAML::Value << cfg.exhaustive_cap;
  out << YAML::Key << "max_list" << YAML::Value << cfg.max_list;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

CodeSpec build_code(const ExperimentConfig& cfg) {
  std::shared_ptr<const ExtensionField> field;
  if (cfg.field.modulus.empty()) {
    field = ExtensionField::make_shared(cfg.field.q, cfg.field.m, cfg.field.r);
  } else {
    field = std::make_shared<const ExtensionField>(cfg.field.q, cfg.field.m, cfg.field.modulus, cfg.field.r);
  }
  if (cfg.code.locators.empty() && cfg.code.params.empty()) {
    return CodeSpec::with_defaults(field, cfg.code.interleaving, cfg.code.shot_dims, cfg.code.k);
  }
  auto element = [&](std::uint32_t v) {
    if (v >= field->order()) throw std::invalid_argument("field element out of range in code block");
    return FieldElement{v};
  };
  std::vector<std::vector<FieldElement>> locs;
  if (cfg.code.locators.empty()) {
    for (std::size_t n : cfg.code.shot_dims) {
      std::vector<FieldElement> b;
      for (std::size_t t = 0; t < n; ++t) b.push_back(field->alpha_pow(static_cast<std::int64_t>(t)));
      locs.push_back(std::move(b));
    }
  } else {
    for (const auto& block : cfg.code.locators) {
      std::vector<FieldElement> b;
      for (auto v : block) b.push_back(element(v));
      locs.push_back(std::move(b));
    }
  }
  std::vector<FieldElement> params;
  if (cfg.code.params.empty()) {
    params = conjugacy_representatives(*field, locs.size());
  } else {
    for (auto v : cfg.code.params) params.push_back(element(v));
  }
  return CodeSpec(field, cfg.code.interleaving, cfg.code.k, std::move(locs), std::move(params));
}

}  // namespace lilrs::sim
