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

#include <memory>
#include <optional>
#include <vector>

#include "lilrs/rng.hpp"
#include "lilrs/skew.hpp"
#include "lilrs/subspace.hpp"

namespace lilrs {

// s message polynomials, each of degree < k.
using MessageVector = std::vector<SkewPolynomial>;

// Per shot, a matrix over F_{q^m} with s + 1 columns: the locator column
// followed by one column per interleaved component.
struct LiftedWord {
  std::vector<FqmMatrix> shots;

  std::vector<std::size_t> partition() const;
  std::size_t total_rows() const;
};

class CodeSpec {
 public:
  // locators: one block per shot, each F_q-independent. params: one
  // evaluation parameter per shot, pairwise non-conjugate.
  CodeSpec(std::shared_ptr<const ExtensionField> field, std::size_t interleaving, std::size_t k,
           std::vector<std::vector<FieldElement>> locators, std::vector<FieldElement> params);

  // Locators 1, alpha, alpha^2, ... in every shot and parameters 1, alpha, ...
  static CodeSpec with_defaults(std::shared_ptr<const ExtensionField> field, std::size_t interleaving,
                                std::vector<std::size_t> shot_dims, std::size_t k);

  const ExtensionField& field() const { return *field_; }
  const std::shared_ptr<const ExtensionField>& field_ptr() const { return field_; }
  std::size_t shots() const { return locators_.size(); }
  std::size_t interleaving() const { return s_; }
  std::size_t k() const { return k_; }
  const std::vector<std::vector<FieldElement>>& locators() const { return locators_; }
  const std::vector<FieldElement>& params() const { return params_; }
  std::vector<std::size_t> shot_dims() const;
  std::size_t n_t() const;
  std::size_t ambient_dim(std::size_t shot) const;
  std::vector<std::size_t> ambient_dims() const;

  // Coefficients of x in the locator basis of `shot`, or nullopt if x is
  // outside their F_q-span.
  std::optional<std::vector<std::uint8_t>> locator_coords(std::size_t shot, FieldElement x) const;

 private:
  std::shared_ptr<const ExtensionField> field_;
  std::size_t s_;
  std::size_t k_;
  std::vector<std::vector<FieldElement>> locators_;
  std::vector<FieldElement> params_;
  std::vector<std::vector<std::int64_t>> span_index_;  // element -> packed coefficients
};

void validate_message(const CodeSpec& spec, const MessageVector& f);
MessageVector random_message(const CodeSpec& spec, Rng& rng);
// Message number `index` in a fixed enumeration of all q^{msk} messages.
MessageVector message_from_index(const CodeSpec& spec, std::uint64_t index);

LiftedWord encode_lifted(const CodeSpec& spec, const MessageVector& f);
SubspaceTuple encode(const CodeSpec& spec, const MessageVector& f);

// F_q vector of length n_t,i + s m  <->  lifted row of s + 1 entries.
// Only defined for vectors of the shot's ambient space.
SubspaceTuple to_subspaces(const CodeSpec& spec, const LiftedWord& w);
LiftedWord to_lifted(const CodeSpec& spec, const SubspaceTuple& t);

SubspaceTuple complement(const SubspaceTuple& t);

struct Region {
  // Weighted budget: insertions + s * deletions compared against `limit`.
  std::size_t limit;
  bool strict;  // true: sum < limit, false: sum <= limit
  bool contains(std::size_t insertions, std::size_t deletions, std::size_t s) const {
    std::size_t w = insertions + s * deletions;
    return strict ? w < limit : w <= limit;
  }
};

struct CodeMetrics {
  std::size_t min_distance;
  double rate;
  double dual_rate;
  double normalized_weight;    // n_t / N
  double normalized_distance;  // (n_t - k + 1) / n_t
  std::optional<double> singleton_rate_bound;  // equal-shot case only
  Region list_region;
  Region unique_region;
};

CodeMetrics code_metrics(const CodeSpec& spec);

}  // namespace lilrs
