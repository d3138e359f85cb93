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
#include <random>

#include "lilrs/subspace.hpp"

namespace lilrs {

std::uint64_t splitmix64(std::uint64_t x);

// Seed of trial t in a run seeded with `seed`. Independent of how trials are
// spread over workers.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed + trial);
}

// mt19937_64 with portable bounded draws (std distributions differ between
// standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  BigInt below(const BigInt& n);
  std::uint8_t element(unsigned q) { return static_cast<std::uint8_t>(below(q)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lilrs
