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
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lilrs/field.hpp"
#include "lilrs/linalg.hpp"

namespace lilrs {

using BigInt = boost::multiprecision::cpp_int;
using FqMatrix = Matrix<std::uint8_t>;
using FqmMatrix = Matrix<FieldElement>;

// F_q-subspace of F_q^N held as its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  // Any spanning set; rows of `generators` need not be independent.
  Subspace(unsigned q, std::size_t ambient, const FqMatrix& generators);

  static Subspace zero(unsigned q, std::size_t ambient);
  static Subspace full(unsigned q, std::size_t ambient);

  unsigned q() const { return q_; }
  PrimeField field() const { return PrimeField{q_}; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const FqMatrix& basis() const { return basis_; }

  bool contains(std::span<const std::uint8_t> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.q_ == b.q_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  unsigned q_ = 2;
  std::size_t ambient_ = 0;
  FqMatrix basis_;
};

Subspace sum_space(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace dual(const Subspace& a);
std::size_t subspace_distance(const Subspace& a, const Subspace& b);

struct SubspaceTuple {
  std::vector<Subspace> shots;

  std::size_t size() const { return shots.size(); }
  std::vector<std::size_t> dims() const;
  std::vector<std::size_t> ambient_dims() const;
  std::size_t sum_dim() const;

  friend bool operator==(const SubspaceTuple&, const SubspaceTuple&) = default;
};

SubspaceTuple sum_space(const SubspaceTuple& a, const SubspaceTuple& b);
SubspaceTuple intersect(const SubspaceTuple& a, const SubspaceTuple& b);
SubspaceTuple dual(const SubspaceTuple& a);
std::size_t sum_subspace_distance(const SubspaceTuple& a, const SubspaceTuple& b);

// Each entry becomes its m coordinates laid along the row.
FqMatrix expand_row_wise(const ExtensionField& f, const FqmMatrix& a);
// Each entry becomes its m coordinates laid down the column.
FqMatrix expand_column_wise(const ExtensionField& f, const FqmMatrix& a);
// F_q-rank of the column-wise expansion.
std::size_t rank_over_base(const ExtensionField& f, const FqmMatrix& a);

BigInt gaussian_binomial(unsigned n, unsigned l, unsigned q);
BigInt big_pow(unsigned base, unsigned exp);
// prod_{i=1}^{terms} (1 - q^{-i})^{-1}
double kappa(unsigned q, unsigned terms);
// Truncated where successive partial products differ by < 1e-12.
double kappa(unsigned q);

// Serialized basis rows as base-q digit strings.
std::vector<std::string> basis_digit_rows(const Subspace& s);
Subspace subspace_from_digit_rows(unsigned q, std::size_t ambient,
                                  const std::vector<std::string>& rows);

}  // namespace lilrs
