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

// lilrs: command-line front end for LILRS code experiments.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lilrs/sim/experiment.hpp"

namespace {

using namespace lilrs;
using namespace lilrs::sim;

struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::vector<std::size_t> gammas;
  std::vector<std::size_t> deltas;
  std::optional<std::string> decoder;
  std::optional<unsigned> workers;
  std::optional<std::string> out;
  std::optional<std::string> dump_failures;
  std::optional<std::uint64_t> stop_after;
  std::optional<std::uint64_t> message_index;
  std::string input;
};

ExperimentConfig resolve(const Overrides& o) {
  ExperimentConfig cfg = o.config_path.empty() ? ExperimentConfig{} : load_config(o.config_path);
  if (o.seed) cfg.seed = *o.seed;
  if (o.trials) {
    if (*o.trials < 1) throw std::invalid_argument("--trials must be at least 1");
    cfg.trials = *o.trials;
  }
  if (!o.gammas.empty()) cfg.gammas = o.gammas;
  if (!o.deltas.empty()) cfg.deltas = o.deltas;
  if (o.decoder) cfg.decoder = parse_decoder(*o.decoder);
  if (o.workers) cfg.workers = std::max(1u, *o.workers);
  if (o.out) cfg.out = *o.out;
  if (o.dump_failures) cfg.dump_failures = *o.dump_failures;
  if (o.stop_after) cfg.stop_after_failures = *o.stop_after;
  return cfg;
}

// Writes to cfg.out when set, stdout otherwise.
void emit(const ExperimentConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

int cmd_simulate(const ExperimentConfig& cfg) {
  const CodeSpec spec = build_code(cfg);
  const auto rows = simulate(cfg, spec);
  std::ostringstream os;
  write_simulate_csv(os, rows);
  emit(cfg, os.str());
  int status = 0;
  for (const auto& r : rows) {
    if (r.error) {
      std::cerr << "gamma=" << r.gamma << " delta=" << r.delta << ": " << *r.error << "\n";
      status = 1;
    }
  }
  return status;
}

int cmd_bounds(const ExperimentConfig& cfg) {
  const CodeSpec spec = build_code(cfg);
  std::ostringstream os;
  write_bounds_csv(os, bounds_table(cfg, spec));
  emit(cfg, os.str());
  return 0;
}

int cmd_roundtrip(const ExperimentConfig& cfg) {
  const CodeSpec spec = build_code(cfg);
  const RoundtripReport rep = roundtrip(cfg, spec);
  emit(cfg, to_json(rep).dump(2) + "\n");
  return rep.passed ? 0 : 1;
}

int cmd_exhaustive(const ExperimentConfig& cfg) {
  const CodeSpec spec = build_code(cfg);
  const ExhaustiveReport rep = exhaustive(cfg, spec);
  emit(cfg, to_json(rep).dump(2) + "\n");
  return rep.passed ? 0 : 1;
}

int cmd_encode(const ExperimentConfig& cfg, std::optional<std::uint64_t> message_index) {
  const CodeSpec spec = build_code(cfg);
  Rng rng(trial_seed(cfg.seed, 0));
  const MessageVector f = message_index ? message_from_index(spec, *message_index) : random_message(spec, rng);
  Json doc{{"code", spec_summary(spec)}, {"message", to_json(f)}, {"codeword", to_json(spec, encode_lifted(spec, f))}};
  const std::size_t gamma = cfg.gammas.front(), delta = cfg.deltas.front();
  if (cfg.decoder == DecoderKind::Complementary) {
    const SubspaceTuple sent = complement(encode(spec, f));
    const ChannelOutput out = transmit(sent, {gamma, delta}, rng);
    Json shots = Json::array();
    for (const auto& v : out.received.shots) shots.push_back(to_json(v));
    Json dual = Json::array();
    for (const auto& v : sent.shots) dual.push_back(to_json(v));
    doc["dual_codeword"] = dual;
    doc["received_subspaces"] = shots;
    doc["realization"] = to_json(out.realization);
  } else if (gamma > 0 || delta > 0) {
    const ChannelOutput out = transmit(encode(spec, f), {gamma, delta}, rng);
    doc["received"] = to_json(spec, to_lifted(spec, out.received));
    doc["realization"] = to_json(out.realization);
  }
  emit(cfg, doc.dump(2) + "\n");
  return 0;
}

int cmd_decode(const ExperimentConfig& cfg, const std::string& input) {
  const CodeSpec spec = build_code(cfg);
  Json doc;
  if (input.empty() || input == "-") {
    doc = Json::parse(std::cin);
  } else {
    std::ifstream f(input);
    if (!f) throw std::invalid_argument("cannot read " + input);
    doc = Json::parse(f);
  }
  Json result;
  bool ok = false;
  if (cfg.decoder == DecoderKind::Complementary) {
    const Json& shots = doc.contains("received_subspaces") ? doc.at("received_subspaces") : doc.at("dual_codeword");
    SubspaceTuple received;
    for (const auto& v : shots) received.shots.push_back(subspace_from_json(spec.field().q(), v));
    const ComplementaryResult res = complementary_decode(spec, received);
    result = to_json(res.outcome);
    if (res.dual_codeword) {
      Json dual = Json::array();
      for (const auto& v : res.dual_codeword->shots) dual.push_back(to_json(v));
      result["dual_codeword"] = dual;
    }
    ok = res.dual_codeword.has_value();
  } else {
    const Json& word = doc.contains("received") ? doc.at("received") : doc.contains("codeword") ? doc.at("codeword") : doc;
    const LiftedWord rw = lifted_word_from_json(spec, word);
    DecodeOutcome out;
    switch (cfg.decoder) {
      case DecoderKind::Lo: out = lo_decode(spec, rw); break;
      case DecoderKind::List: out = list_decode(spec, rw, RootFindingOptions{cfg.max_list}); break;
      default: out = unique_decode(spec, rw); break;
    }
    result = to_json(out);
    ok = !out.is_failure();
  }
  result["decoder"] = to_string(cfg.decoder);
  emit(cfg, result.dump(2) + "\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LILRS codes: encoding, channel simulation and decoding"};
  app.require_subcommand(1);
  app.fallthrough();
  Overrides o;
  app.add_option("--config", o.config_path, "YAML experiment file")->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed, "base RNG seed");
  app.add_option("--trials", o.trials, "trials per sweep point");
  app.add_option("--gamma", o.gammas, "insertions, comma separated for a sweep")->delimiter(',');
  app.add_option("--delta", o.deltas, "deletions, comma separated for a sweep")->delimiter(',');
  app.add_option("--decoder", o.decoder, "lo | list | unique | complementary");
  app.add_option("--workers", o.workers, "worker threads");
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--dump-failures", o.dump_failures, "directory for failing-trial JSON dumps");
  app.add_option("--stop-after", o.stop_after, "stop a sweep point after this many failures");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo failure rates as CSV");
  auto* bnd = app.add_subcommand("bounds", "failure-probability bounds as CSV");
  auto* rt = app.add_subcommand("roundtrip", "encode, transmit, decode and compare");
  auto* ex = app.add_subcommand("exhaustive", "codebook-wide distance and list checks");
  auto* enc = app.add_subcommand("encode", "encode a message to JSON, optionally through the channel");
  enc->add_option("--message-index", o.message_index, "message number instead of a random one");
  auto* dec = app.add_subcommand("decode", "decode a JSON received word");
  dec->add_option("--input", o.input, "JSON file from 'encode' (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    const ExperimentConfig cfg = resolve(o);
    if (sim->parsed()) return cmd_simulate(cfg);
    if (bnd->parsed()) return cmd_bounds(cfg);
    if (rt->parsed()) return cmd_roundtrip(cfg);
    if (ex->parsed()) return cmd_exhaustive(cfg);
    if (enc->parsed()) return cmd_encode(cfg, o.message_index);
    if (dec->parsed()) return cmd_decode(cfg, o.input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
