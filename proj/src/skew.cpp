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

#include "lilrs/skew.hpp"

#include <numeric>
#include <stdexcept>

namespace lilrs {

SkewPolynomial::SkewPolynomial(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

SkewPolynomial SkewPolynomial::monomial(FieldElement c, std::size_t power) {
  std::vector<FieldElement> v(power + 1);
  v[power] = c;
  return SkewPolynomial(std::move(v));
}

std::vector<FieldElement> SkewPolynomial::padded(std::size_t n) const {
  if (coeffs_.size() > n) throw std::invalid_argument("polynomial degree exceeds padding");
  std::vector<FieldElement> out = coeffs_;
  out.resize(n);
  return out;
}

SkewPolynomial skew_add(const ExtensionField& f, const SkewPolynomial& a, const SkewPolynomial& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<FieldElement> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return SkewPolynomial(std::move(out));
}

SkewPolynomial skew_sub(const ExtensionField& f, const SkewPolynomial& a, const SkewPolynomial& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<FieldElement> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return SkewPolynomial(std::move(out));
}

SkewPolynomial skew_mul(const ExtensionField& f, const SkewPolynomial& a, const SkewPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<FieldElement> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].value == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(ac[i], f.sigma(bc[j], static_cast<std::int64_t>(i))));
    }
  }
  return SkewPolynomial(std::move(out));
}

SkewPolynomial skew_scale(const ExtensionField& f, FieldElement c, const SkewPolynomial& a) {
  std::vector<FieldElement> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(c, a.coeff(i));
  return SkewPolynomial(std::move(out));
}

FieldElement op_power(const ExtensionField& f, FieldElement a, FieldElement b, std::size_t i) {
  for (std::size_t t = 0; t < i; ++t) b = f.mul(f.sigma(b), a);
  return b;
}

FieldElement gen_op_eval(const ExtensionField& f, const SkewPolynomial& p, FieldElement b,
                         FieldElement a) {
  FieldElement acc{}, power = b;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    acc = f.add(acc, f.mul(p.coeff(i), power));
    power = f.mul(f.sigma(power), a);
  }
  return acc;
}

std::vector<FieldElement> conjugacy_representatives(const ExtensionField& f, std::size_t n) {
  if (n > f.q() - 1) {
    throw std::invalid_argument("at most q - 1 pairwise non-conjugate nonzero representatives");
  }
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(f.alpha_pow(static_cast<std::int64_t>(i)));
  return out;
}

bool are_conjugate(const ExtensionField& f, FieldElement a, FieldElement b) {
  for (std::uint32_t v = 1; v < f.order(); ++v) {
    FieldElement c{v};
    if (f.mul(f.mul(f.sigma(c), a), f.inv(c)) == b) return true;
  }
  return false;
}

Matrix<FieldElement> moore_matrix(const ExtensionField& f, std::span<const FieldElement> x,
                                  std::span<const std::size_t> partition,
                                  std::span<const FieldElement> params, std::size_t d) {
  if (partition.size() != params.size()) {
    throw std::invalid_argument("one evaluation parameter per block required");
  }
  if (std::accumulate(partition.begin(), partition.end(), std::size_t{0}) != x.size()) {
    throw std::invalid_argument("partition does not cover the vector");
  }
  Matrix<FieldElement> out(d, x.size());
  std::size_t col = 0;
  for (std::size_t blk = 0; blk < partition.size(); ++blk) {
    for (std::size_t t = 0; t < partition[blk]; ++t, ++col) {
      FieldElement v = x[col];
      for (std::size_t j = 0; j < d; ++j) {
        out(j, col) = v;
        v = f.mul(f.sigma(v), params[blk]);
      }
    }
  }
  return out;
}

std::size_t sum_rank_weight(const ExtensionField& f, std::span<const FieldElement> x,
                            std::span<const std::size_t> partition) {
  std::size_t total = 0, offset = 0;
  const PrimeField base = f.base();
  for (std::size_t n : partition) {
    Matrix<std::uint8_t> block(n, f.m());
    for (std::size_t t = 0; t < n; ++t) {
      for (unsigned j = 0; j < f.m(); ++j) block(t, j) = f.coord(x[offset + t], j);
    }
    total += rank(base, block);
    offset += n;
  }
  if (offset != x.size()) throw std::invalid_argument("partition does not cover the vector");
  return total;
}

std::optional<SkewPolynomial> try_lagrange_interpolate(const ExtensionField& f,
                                                       std::span<const EvalPoint> points) {
  const std::size_t n = points.size();
  if (n == 0) return SkewPolynomial{};
  // Row t holds b_t^{[j]}, so the system is (Moore)^T p = c.
  Matrix<FieldElement> system(n, n);
  std::vector<FieldElement> rhs(n);
  for (std::size_t t = 0; t < n; ++t) {
    FieldElement v = points[t].b;
    for (std::size_t j = 0; j < n; ++j) {
      system(t, j) = v;
      v = f.mul(f.sigma(v), points[t].a);
    }
    rhs[t] = points[t].c;
  }
  auto sol = solve_affine(f, system, rhs);
  if (!sol || sol->kernel.rows() != 0) return std::nullopt;
  return SkewPolynomial(std::move(sol->particular));
}

SkewPolynomial lagrange_interpolate(const ExtensionField& f, std::span<const EvalPoint> points) {
  auto p = try_lagrange_interpolate(f, points);
  if (!p) throw std::invalid_argument("interpolation points are not independent");
  return *p;
}

}  // namespace lilrs
