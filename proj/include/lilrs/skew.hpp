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
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "lilrs/field.hpp"
#include "lilrs/linalg.hpp"

namespace lilrs {

// Polynomial in F_{q^m}[x; sigma]. Trailing zero coefficients are stripped,
// so the zero polynomial has no coefficients.
class SkewPolynomial {
 public:
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  SkewPolynomial() = default;
  explicit SkewPolynomial(std::vector<FieldElement> coeffs);

  static SkewPolynomial monomial(FieldElement c, std::size_t power);

  long degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElement{}; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  // Coefficients padded (or checked) to exactly n entries.
  std::vector<FieldElement> padded(std::size_t n) const;

  friend bool operator==(const SkewPolynomial&, const SkewPolynomial&) = default;
  friend auto operator<=>(const SkewPolynomial& a, const SkewPolynomial& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  std::vector<FieldElement> coeffs_;
};

SkewPolynomial skew_add(const ExtensionField& f, const SkewPolynomial& a, const SkewPolynomial& b);
SkewPolynomial skew_sub(const ExtensionField& f, const SkewPolynomial& a, const SkewPolynomial& b);
SkewPolynomial skew_mul(const ExtensionField& f, const SkewPolynomial& a, const SkewPolynomial& b);
// c * a, coefficientwise from the left.
SkewPolynomial skew_scale(const ExtensionField& f, FieldElement c, const SkewPolynomial& a);

// b^{[i]} with b^{[0]} = b and b^{[i+1]} = sigma(b^{[i]}) * a.
FieldElement op_power(const ExtensionField& f, FieldElement a, FieldElement b, std::size_t i);
// sum_i f_i b^{[i]} with respect to a.
FieldElement gen_op_eval(const ExtensionField& f, const SkewPolynomial& p, FieldElement b,
                         FieldElement a);

// The first n of 1, alpha, alpha^2, ...; n must not exceed q - 1.
std::vector<FieldElement> conjugacy_representatives(const ExtensionField& f, std::size_t n);
bool are_conjugate(const ExtensionField& f, FieldElement a, FieldElement b);

// d x len(x) matrix with entry (j, t) = x_t^{[j]} taken w.r.t. the
// parameter of the block containing t.
Matrix<FieldElement> moore_matrix(const ExtensionField& f, std::span<const FieldElement> x,
                                  std::span<const std::size_t> partition,
                                  std::span<const FieldElement> params, std::size_t d);

// Sum over blocks of the F_q-rank of each block.
std::size_t sum_rank_weight(const ExtensionField& f, std::span<const FieldElement> x,
                            std::span<const std::size_t> partition);

struct EvalPoint {
  FieldElement b;
  FieldElement c;
  FieldElement a;
};

// Unique p with deg p < points.size() and gen_op_eval(p, b, a) = c at every
// point. try_ returns nullopt when the system is singular.
std::optional<SkewPolynomial> try_lagrange_interpolate(const ExtensionField& f,
                                                       std::span<const EvalPoint> points);
SkewPolynomial lagrange_interpolate(const ExtensionField& f, std::span<const EvalPoint> points);

}  // namespace lilrs
