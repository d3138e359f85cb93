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

#include "lilrs/subspace.hpp"

#include <cmath>
#include <stdexcept>

namespace lilrs {

Subspace::Subspace(unsigned q, std::size_t ambient, const FqMatrix& generators)
    : q_(q), ambient_(ambient) {
  if (generators.rows() > 0 && generators.cols() != ambient) {
    throw std::invalid_argument("generator width differs from ambient dimension");
  }
  if (generators.rows() == 0) {
    basis_ = FqMatrix(0, ambient);
  } else {
    basis_ = rref(PrimeField{q}, generators);
  }
}

Subspace Subspace::zero(unsigned q, std::size_t ambient) { return Subspace(q, ambient, FqMatrix(0, ambient)); }

Subspace Subspace::full(unsigned q, std::size_t ambient) {
  FqMatrix id(ambient, ambient, 0);
  for (std::size_t i = 0; i < ambient; ++i) id(i, i) = 1;
  return Subspace(q, ambient, id);
}

bool Subspace::contains(std::span<const std::uint8_t> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length differs from ambient dimension");
  // Reduce v against the echelon basis; v is inside iff it reduces to zero.
  const PrimeField f{q_};
  std::vector<std::uint8_t> w(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t p = 0;
    while (basis_(r, p) == 0) ++p;
    auto c = w[p];
    if (c == 0) continue;
    for (std::size_t j = p; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(c, basis_(r, j)));
  }
  for (auto x : w) {
    if (x != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis().row(r))) return false;
  }
  return true;
}

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.q() != b.q() || a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspaces live in different ambient spaces");
  }
}

void require_compatible(const SubspaceTuple& a, const SubspaceTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuples have different shot counts");
}

}  // namespace

Subspace sum_space(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return Subspace(a.q(), a.ambient_dim(), FqMatrix::vstack(a.basis(), b.basis()));
}

Subspace dual(const Subspace& a) {
  if (a.dim() == 0) return Subspace::full(a.q(), a.ambient_dim());
  return Subspace(a.q(), a.ambient_dim(), right_kernel(a.field(), a.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.q(), a.ambient_dim());
  return dual(sum_space(dual(a), dual(b)));
}

std::size_t subspace_distance(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::size_t s = sum_space(a, b).dim();
  // dim(A ∩ B) = dim A + dim B - dim(A + B)
  return 2 * s - a.dim() - b.dim();
}

std::vector<std::size_t> SubspaceTuple::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : shots) out.push_back(s.dim());
  return out;
}

std::vector<std::size_t> SubspaceTuple::ambient_dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : shots) out.push_back(s.ambient_dim());
  return out;
}

std::size_t SubspaceTuple::sum_dim() const {
  std::size_t total = 0;
  for (const auto& s : shots) total += s.dim();
  return total;
}

SubspaceTuple sum_space(const SubspaceTuple& a, const SubspaceTuple& b) {
  require_compatible(a, b);
  SubspaceTuple out;
  for (std::size_t i = 0; i < a.size(); ++i) out.shots.push_back(sum_space(a.shots[i], b.shots[i]));
  return out;
}

SubspaceTuple intersect(const SubspaceTuple& a, const SubspaceTuple& b) {
  require_compatible(a, b);
  SubspaceTuple out;
  for (std::size_t i = 0; i < a.size(); ++i) out.shots.push_back(intersect(a.shots[i], b.shots[i]));
  return out;
}

SubspaceTuple dual(const SubspaceTuple& a) {
  SubspaceTuple out;
  for (const auto& s : a.shots) out.shots.push_back(dual(s));
  return out;
}

std::size_t sum_subspace_distance(const SubspaceTuple& a, const SubspaceTuple& b) {
  require_compatible(a, b);
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += subspace_distance(a.shots[i], b.shots[i]);
  return total;
}

FqMatrix expand_row_wise(const ExtensionField& f, const FqmMatrix& a) {
  const unsigned m = f.m();
  FqMatrix out(a.rows(), a.cols() * m);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (unsigned t = 0; t < m; ++t) out(i, j * m + t) = f.coord(a(i, j), t);
  return out;
}

FqMatrix expand_column_wise(const ExtensionField& f, const FqmMatrix& a) {
  const unsigned m = f.m();
  FqMatrix out(a.rows() * m, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (unsigned t = 0; t < m; ++t) out(i * m + t, j) = f.coord(a(i, j), t);
  return out;
}

std::size_t rank_over_base(const ExtensionField& f, const FqmMatrix& a) {
  return rank(f.base(), expand_column_wise(f, a));
}

BigInt big_pow(unsigned base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt gaussian_binomial(unsigned n, unsigned l, unsigned q) {
  if (l > n) throw std::invalid_argument("gaussian binomial needs 0 <= l <= N");
  if (q < 2) throw std::invalid_argument("gaussian binomial needs q >= 2");
  BigInt num = 1, den = 1;
  for (unsigned i = 1; i <= l; ++i) {
    num *= big_pow(q, n - l + i) - 1;
    den *= big_pow(q, i) - 1;
  }
  return num / den;
}

double kappa(unsigned q, unsigned terms) {
  double prod = 1.0;
  for (unsigned i = 1; i <= terms; ++i) prod /= 1.0 - std::pow(static_cast<double>(q), -static_cast<double>(i));
  return prod;
}

double kappa(unsigned q) {
  double prod = 1.0;
  for (unsigned i = 1; i < 2000; ++i) {
    double next = prod / (1.0 - std::pow(static_cast<double>(q), -static_cast<double>(i)));
    bool done = std::abs(next - prod) < 1e-12;
    prod = next;
    if (done) break;
  }
  return prod;
}

namespace {

char digit_char(unsigned d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

unsigned char_digit(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a' + 10);
  throw std::invalid_argument("bad digit in serialized row");
}

}  // namespace

std::vector<std::string> basis_digit_rows(const Subspace& s) {
  if (s.q() > 36) throw std::invalid_argument("digit serialization supports q <= 36");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) row.push_back(digit_char(s.basis()(i, j)));
    out.push_back(row);
  }
  return out;
}

Subspace subspace_from_digit_rows(unsigned q, std::size_t ambient, const std::vector<std::string>& rows) {
  FqMatrix m(0, ambient);
  for (const auto& r : rows) {
    if (r.size() != ambient) throw std::invalid_argument("serialized row has wrong length");
    std::vector<std::uint8_t> v;
    for (char c : r) {
      unsigned d = char_digit(c);
      if (d >= q) throw std::invalid_argument("digit exceeds field size");
      v.push_back(static_cast<std::uint8_t>(d));
    }
    m.append_row(v);
  }
  return Subspace(q, ambient, m);
}

}  // namespace lilrs
