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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lilrs/sim/config.hpp"
#include "lilrs/sim/io.hpp"

namespace lilrs::sim {

struct TrialRecord {
  std::uint64_t trial = 0;
  std::vector<std::size_t> insertions;  // realized per-shot partition
  std::vector<std::size_t> deletions;
  std::string outcome;                  // DecodeOutcome tag
  std::size_t list_size = 0;
  double wall_seconds = 0;
  bool success = false;
};

// Seed of sweep point (gamma, delta); trial t then uses trial_seed(point, t).
std::uint64_t point_seed(std::uint64_t seed, std::size_t gamma, std::size_t delta);

// One transmit -> decode round. `dump` receives the full instance when the
// trial fails and is non-null.
TrialRecord run_trial(const CodeSpec& spec, DecoderKind decoder, ChannelParams channel, std::uint64_t seed,
                      std::uint64_t trial, std::size_t max_list, Json* dump = nullptr);

struct SweepRow {
  std::size_t gamma = 0;
  std::size_t delta = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double rate = 0;
  std::optional<double> strict_bound;     // absent outside the unique region
  std::optional<double> heuristic_bound;
  double ci_low = 0;
  double ci_high = 1;
  std::optional<std::string> error;       // infeasible sweep point
};

// Bounds for the decoder's view of (gamma, delta); roles swap for the
// complementary decoder.
std::optional<double> strict_bound_for(const CodeSpec& spec, DecoderKind d, std::size_t gamma, std::size_t delta);
std::optional<double> heuristic_bound_for(const CodeSpec& spec, DecoderKind d, std::size_t gamma, std::size_t delta);

SweepRow simulate_point(const ExperimentConfig& cfg, const CodeSpec& spec, std::size_t gamma, std::size_t delta);
std::vector<SweepRow> simulate(const ExperimentConfig& cfg, const CodeSpec& spec);

extern const char* const kSimulateCsvHeader;
void write_simulate_csv(std::ostream& os, const std::vector<SweepRow>& rows);

struct BoundRow {
  std::size_t gamma;
  std::size_t delta;
  std::optional<double> strict_bound;
  std::optional<double> heuristic_bound;
  bool list_region;
  bool unique_region;
};

extern const char* const kBoundsCsvHeader;
std::vector<BoundRow> bounds_table(const ExperimentConfig& cfg, const CodeSpec& spec);
void write_bounds_csv(std::ostream& os, const std::vector<BoundRow>& rows);

struct RoundtripReport {
  std::uint64_t trials = 0;
  std::uint64_t decoded = 0;      // correct message returned
  std::uint64_t failures = 0;     // decoder declared failure
  std::uint64_t wrong = 0;        // decoder returned something else
  std::uint64_t lo_successes = 0;
  std::uint64_t implication_violations = 0;  // LO succeeded, unique did not match
  bool passed = false;
};

// Uses the first gamma/delta of the sweep. Passes when nothing decodes to a
// wrong message, the LO => unique implication holds, and a noiseless run has
// no failures at all.
RoundtripReport roundtrip(const ExperimentConfig& cfg, const CodeSpec& spec);
Json to_json(const RoundtripReport& r);

struct ExhaustiveReport {
  std::uint64_t codebook_size = 0;
  std::size_t min_distance = 0;
  std::size_t designed_distance = 0;
  std::uint64_t pairs_at_minimum = 0;
  bool distance_ok = false;
  bool dual_ok = false;           // complement keeps size and distances
  std::uint64_t list_instances = 0;
  std::uint64_t list_mismatches = 0;
  std::size_t max_list_size = 0;
  std::uint64_t list_size_bound = 0;
  bool list_ok = false;
  bool passed = false;
};

// Throws if the codebook exceeds cfg.exhaustive_cap.
ExhaustiveReport exhaustive(const ExperimentConfig& cfg, const CodeSpec& spec);
Json to_json(const ExhaustiveReport& r);

}  // namespace lilrs::sim
