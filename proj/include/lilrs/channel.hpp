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

// Multishot operator channel: per shot, keep a random subspace of the
// transmitted space and add a random error space meeting it trivially.

#pragma once

#include <string>
#include <vector>

#include "lilrs/rng.hpp"
#include "lilrs/subspace.hpp"

namespace lilrs {

struct ChannelParams {
  std::size_t insertions = 0;  // total over all shots
  std::size_t deletions = 0;
};

struct ChannelRealization {
  std::vector<std::size_t> insertions;  // per shot
  std::vector<std::size_t> deletions;
  std::vector<Subspace> kept;    // what survives of each transmitted shot
  std::vector<Subspace> errors;  // inserted space of each shot

  // Canonical text form; equal realizations give equal keys.
  std::string key() const;
  friend bool operator==(const ChannelRealization&, const ChannelRealization&) = default;
};

struct ChannelOutput {
  SubspaceTuple received;
  ChannelRealization realization;
};

// Number of tuples of `shots` subspaces of F_q^ambient with dimensions
// summing to `dim`.
BigInt num_subspace_tuples(std::size_t ambient, std::size_t dim, std::size_t shots, unsigned q);

// Dimension split drawn so the induced subspace tuple is uniform.
std::vector<std::size_t> draw_dimension_partition(std::size_t ambient, std::size_t dim,
                                                  std::size_t shots, unsigned q, Rng& rng);

// All shots of `sent` must share one dimension and one ambient dimension.
ChannelOutput transmit(const SubspaceTuple& sent, ChannelParams params, Rng& rng);

// Applies a fixed realization.
SubspaceTuple apply_realization(const ChannelRealization& r);

bool is_reachable(const SubspaceTuple& received, const SubspaceTuple& sent, std::size_t insertions,
                  std::size_t deletions);

// Every subspace of F_q^ambient of dimension dim (small cases only).
std::vector<Subspace> all_subspaces(unsigned q, std::size_t ambient, std::size_t dim);
// Every realization the channel can produce from `sent` (small cases only).
std::vector<ChannelRealization> enumerate_realizations(const SubspaceTuple& sent, ChannelParams params);

}  // namespace lilrs
