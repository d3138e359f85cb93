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

#include <optional>
#include <string>
#include <vector>

#include "lilrs/code.hpp"

namespace lilrs {

enum class FailureReason { KernelTooLarge, InterpolationDeficient, RootFindingAmbiguous, Inconsistent };

std::string to_string(FailureReason r);

struct DecodeOutcome {
  enum class Kind { Unique, List, Failure };

  Kind kind = Kind::Failure;
  std::vector<MessageVector> messages;  // one entry for Unique
  FailureReason reason = FailureReason::Inconsistent;

  static DecodeOutcome unique(MessageVector f);
  static DecodeOutcome list(std::vector<MessageVector> fs);
  static DecodeOutcome failure(FailureReason r);

  bool is_unique() const { return kind == Kind::Unique; }
  bool is_list() const { return kind == Kind::List; }
  bool is_failure() const { return kind == Kind::Failure; }
  const MessageVector& message() const { return messages.at(0); }
  // Unique(f) or a list containing f.
  bool contains(const MessageVector& f) const;
  std::string tag() const;
};

// ---- Loidreau-Overbeck-like decoder --------------------------------------

FqmMatrix build_lo_matrix(const CodeSpec& spec, const LiftedWord& rw, std::size_t deletions);

struct LoTrace {
  std::size_t deletions = 0;
  std::size_t kernel_dim = 0;
  std::vector<FieldElement> kernel_vector;
  std::vector<std::size_t> kept_ranks;  // F_q-rank of each shot's part
  std::vector<FqmMatrix> transformed;   // T^{-1} U per shot
};

// Decodes assuming `deletions` total deletions.
DecodeOutcome lo_decode(const CodeSpec& spec, const LiftedWord& rw, std::size_t deletions,
                        LoTrace* trace = nullptr);
// Tries deletion counts in increasing order; the first whose kernel is
// one-dimensional and whose result re-encodes consistently wins.
DecodeOutcome lo_decode(const CodeSpec& spec, const LiftedWord& rw, LoTrace* trace = nullptr);

// ---- interpolation-based decoders ----------------------------------------

FqmMatrix build_interpolation_matrix(const CodeSpec& spec, const LiftedWord& rw, std::size_t degree);

struct InterpolationPolynomial {
  SkewPolynomial q0;               // degree < D
  std::vector<SkewPolynomial> qs;  // s entries, degree <= D - k
};

struct InterpolationBasis {
  std::size_t degree = 0;  // D
  std::size_t k = 0;
  std::vector<InterpolationPolynomial> members;

  std::size_t size() const { return members.size(); }
};

InterpolationBasis solve_interpolation(const CodeSpec& spec, const LiftedWord& rw, std::size_t degree);

// Value of the evaluation map of received row `row` of shot `shot` on q.
FieldElement evaluate_interpolation(const CodeSpec& spec, const InterpolationPolynomial& q,
                                    std::size_t shot, std::span<const FieldElement> row);

// Q_0 + sum_l Q_l f_l
SkewPolynomial compose_root_polynomial(const ExtensionField& f, const InterpolationPolynomial& q,
                                       const MessageVector& msg);

struct RootFindingSystem {
  FqmMatrix matrix;                // D * d_I rows, s * k columns
  std::vector<FieldElement> rhs;
};

RootFindingSystem build_root_finding_system(const CodeSpec& spec, const InterpolationBasis& basis);

struct RootFindingOptions {
  std::size_t max_solutions = 4096;
};

// All message vectors annihilating every basis member.
DecodeOutcome root_find(const CodeSpec& spec, const InterpolationBasis& basis,
                        RootFindingOptions opts = {});

std::size_t list_decoding_degree(const CodeSpec& spec, std::size_t received_dim);
std::size_t unique_decoding_degree(const CodeSpec& spec, std::size_t received_dim);

DecodeOutcome list_decode(const CodeSpec& spec, const LiftedWord& rw, RootFindingOptions opts = {});

struct UniqueDecodeOptions {
  // When the attempt at D_u is not unique, retry with D = n_t - delta for
  // every deletion count consistent with n_r and the unique region. A root
  // found this way is kept only if its codeword sits at exactly that
  // (insertions, deletions) from the received word.
  bool degree_fallback = true;
};

// Single attempt at a fixed interpolation degree.
DecodeOutcome unique_decode_at_degree(const CodeSpec& spec, const LiftedWord& rw, std::size_t degree);
DecodeOutcome unique_decode(const CodeSpec& spec, const LiftedWord& rw, UniqueDecodeOptions opts = {});

// ---- complementary code --------------------------------------------------

enum class InnerDecoder { Lo, List, Unique };

struct ComplementaryResult {
  DecodeOutcome outcome;
  std::optional<SubspaceTuple> dual_codeword;  // set when a unique message was found
};

// `received_dual` comes from transmitting complement(encode(spec, f)).
ComplementaryResult complementary_decode(const CodeSpec& spec, const SubspaceTuple& received_dual,
                                         InnerDecoder inner = InnerDecoder::Unique);

// ---- helpers -------------------------------------------------------------

struct ObservedErrors {
  std::size_t insertions;
  std::size_t deletions;
};

// Insertions/deletions that turn encode(f) into `received`.
ObservedErrors observed_errors(const SubspaceTuple& received, const SubspaceTuple& codeword);

// ---- failure-probability bounds ------------------------------------------

double strict_failure_bound(const CodeSpec& spec, std::size_t insertions, std::size_t deletions);
double heuristic_failure_bound(const CodeSpec& spec, std::size_t insertions, std::size_t deletions);

}  // namespace lilrs
