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

#include "lilrs/field.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lilrs {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 20;

using Poly = std::vector<unsigned>;

std::map<std::pair<unsigned, unsigned>, Poly> const& known_moduli() {
  static const std::map<std::pair<unsigned, unsigned>, Poly> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{3, 8}, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
  };
  return table;
}

// Remainder of a modulo monic b over F_q. Both low-to-high.
Poly poly_mod(Poly a, const Poly& b, unsigned q) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    unsigned lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = (a[shift + i] + q * q - lead * b[i]) % q;
      }
    }
    a.pop_back();
  }
  return a;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

PrimeField::element_type PrimeField::inv(element_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  // Extended Euclid on (a, q).
  int t = 0, new_t = 1;
  int r = static_cast<int>(q), new_r = a;
  while (new_r != 0) {
    int quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<int>(q);
  return static_cast<element_type>(t);
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(unsigned q, const std::vector<unsigned>& poly) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = ipow(q, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % q);
        c /= q;
      }
      g[d] = 1;
      Poly rem = poly_mod(poly, g, q);
      bool zero = true;
      for (unsigned x : rem) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

ExtensionField::ExtensionField(unsigned q, unsigned m, std::vector<unsigned> modulus, unsigned r)
    : q_(q), m_(m), r_(r), order_(0), modulus_(std::move(modulus)) {
  if (!is_prime(q) || q > 255) {
    throw std::invalid_argument("base field order must be a prime below 256");
  }
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (r < 1 || r > m || std::gcd(r, m) != 1) {
    throw std::invalid_argument("automorphism exponent r needs 1 <= r <= m and gcd(r, m) = 1");
  }
  std::uint64_t order = ipow(q, m);
  if (order > kMaxOrder) throw std::invalid_argument("field too large for table arithmetic");
  order_ = static_cast<std::uint32_t>(order);
  if (modulus_.size() != m + 1 || modulus_.back() != 1) {
    throw std::invalid_argument("modulus must be monic of degree m");
  }
  for (unsigned c : modulus_) {
    if (c >= q) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (!is_irreducible(q, modulus_)) throw std::invalid_argument("modulus is reducible");
  build_tables();
}

void ExtensionField::build_tables() {
  const std::uint32_t Q = order_;
  digits_.assign(static_cast<std::size_t>(Q) * m_, 0);
  for (std::uint32_t v = 0; v < Q; ++v) {
    std::uint32_t x = v;
    for (unsigned j = 0; j < m_; ++j) {
      digits_[static_cast<std::size_t>(v) * m_ + j] = static_cast<std::uint8_t>(x % q_);
      x /= q_;
    }
  }

  auto encode = [&](const Poly& p) {
    std::uint32_t v = 0;
    for (std::size_t j = p.size(); j-- > 0;) v = v * q_ + p[j];
    return v;
  };
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Poly prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      unsigned ai = digits_[static_cast<std::size_t>(a) * m_ + i];
      if (ai == 0) continue;
      for (unsigned j = 0; j < m_; ++j) {
        prod[i + j] = (prod[i + j] + ai * digits_[static_cast<std::size_t>(b) * m_ + j]) % q_;
      }
    }
    Poly rem = poly_mod(prod, modulus_, q_);
    rem.resize(m_, 0);
    return encode(rem);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t result = 1, base = a;
    while (e) {
      if (e & 1) result = slow_mul(result, base);
      base = slow_mul(base, base);
      e >>= 1;
    }
    return result;
  };

  const std::uint64_t group = Q - 1;
  const auto factors = prime_factors(group);
  auto is_generator = [&](std::uint32_t g) {
    if (g == 0) return false;
    if (group == 1) return g == 1;
    for (std::uint64_t p : factors) {
      if (slow_pow(g, group / p) == 1) return false;
    }
    return true;
  };

  // Prefer x itself; otherwise the smallest generator.
  std::uint32_t gen = m_ > 1 ? q_ : 0;
  if (!is_generator(gen)) {
    gen = 0;
    for (std::uint32_t v = 1; v < Q; ++v) {
      if (is_generator(v)) {
        gen = v;
        break;
      }
    }
  }
  alpha_ = FieldElement{gen};

  exp_.assign(2 * group, 0);
  log_.assign(Q, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = cur;
    exp_[i + group] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = slow_mul(cur, gen);
  }

  zech_.assign(group, -1);
  for (std::uint64_t n = 0; n < group; ++n) {
    std::uint32_t a = exp_[n];
    Poly s(m_);
    for (unsigned j = 0; j < m_; ++j) s[j] = digits_[static_cast<std::size_t>(a) * m_ + j];
    s[0] = (s[0] + 1) % q_;
    std::uint32_t v = encode(s);
    zech_[n] = v == 0 ? -1 : static_cast<std::int64_t>(log_[v]);
  }

  frob_.assign(m_, std::vector<std::uint32_t>(Q, 0));
  for (std::uint32_t v = 0; v < Q; ++v) frob_[0][v] = v;
  for (unsigned j = 1; j < m_; ++j) {
    for (std::uint32_t v = 0; v < Q; ++v) frob_[j][v] = slow_pow(frob_[j - 1][v], q_);
  }
}

ExtensionField ExtensionField::standard(unsigned q, unsigned m, unsigned r) {
  const auto& known = known_moduli();
  if (auto it = known.find({q, m}); it != known.end()) return ExtensionField(q, m, it->second, r);
  if (!is_prime(q)) throw std::invalid_argument("base field order must be prime");
  if (ipow(q, m) > kMaxOrder) throw std::invalid_argument("field too large for table arithmetic");
  std::uint64_t count = ipow(q, m);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly p(m + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      p[i] = static_cast<unsigned>(c % q);
      c /= q;
    }
    p[m] = 1;
    if (p[0] == 0 && m > 1) continue;
    if (!is_irreducible(q, p)) continue;
    ExtensionField f(q, m, p, r);
    if (f.alpha().value == (m > 1 ? q : f.alpha().value)) return f;
  }
  throw std::logic_error("no primitive polynomial found");
}

std::shared_ptr<const ExtensionField> ExtensionField::make_shared(unsigned q, unsigned m,
                                                                 unsigned r) {
  return std::make_shared<const ExtensionField>(standard(q, m, r));
}

FieldElement ExtensionField::from_coords(std::span<const std::uint8_t> coords) const {
  if (coords.size() != m_) throw std::invalid_argument("coordinate vector length must be m");
  std::uint32_t v = 0;
  for (std::size_t j = coords.size(); j-- > 0;) {
    if (coords[j] >= q_) throw std::invalid_argument("coordinate out of range");
    v = v * q_ + coords[j];
  }
  return FieldElement{v};
}

FieldElement ExtensionField::add(FieldElement a, FieldElement b) const {
  if (a.value == 0) return b;
  if (b.value == 0) return a;
  if (q_ == 2) return FieldElement{a.value ^ b.value};
  const std::uint32_t group = order_ - 1;
  std::uint32_t la = log_[a.value], lb = log_[b.value];
  std::uint32_t d = lb >= la ? lb - la : lb + group - la;
  std::int64_t z = zech_[d];
  if (z < 0) return FieldElement{0};
  return FieldElement{exp_[la + static_cast<std::uint32_t>(z)]};
}

FieldElement ExtensionField::neg(FieldElement a) const {
  if (a.value == 0 || q_ == 2) return a;
  return FieldElement{exp_[log_[a.value] + (order_ - 1) / 2]};
}

FieldElement ExtensionField::mul(FieldElement a, FieldElement b) const {
  if (a.value == 0 || b.value == 0) return FieldElement{0};
  return FieldElement{exp_[log_[a.value] + log_[b.value]]};
}

FieldElement ExtensionField::inv(FieldElement a) const {
  if (a.value == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t group = order_ - 1;
  std::uint32_t l = log_[a.value];
  return FieldElement{exp_[l == 0 ? 0 : group - l]};
}

FieldElement ExtensionField::pow(FieldElement a, std::int64_t e) const {
  if (a.value == 0) {
    if (e == 0) return one();
    if (e < 0) throw std::domain_error("negative power of zero");
    return zero();
  }
  const std::int64_t group = order_ - 1;
  std::int64_t l = (static_cast<std::int64_t>(log_[a.value]) * (e % group)) % group;
  if (l < 0) l += group;
  return FieldElement{exp_[l]};
}

FieldElement ExtensionField::alpha_pow(std::int64_t e) const {
  const std::int64_t group = order_ - 1;
  std::int64_t l = e % group;
  if (l < 0) l += group;
  return FieldElement{exp_[l]};
}

FieldElement ExtensionField::sigma(FieldElement x, std::int64_t i) const {
  std::int64_t j = (static_cast<std::int64_t>(r_) * (i % static_cast<std::int64_t>(m_))) %
                   static_cast<std::int64_t>(m_);
  if (j < 0) j += m_;
  return FieldElement{frob_[j][x.value]};
}

std::string ExtensionField::to_string(FieldElement a) const {
  std::ostringstream os;
  os << '(';
  for (unsigned j = 0; j < m_; ++j) {
    if (j) os << ',';
    os << unsigned{coord(a, j)};
  }
  os << ')';
  return os.str();
}

}  // namespace lilrs
