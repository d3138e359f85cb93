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

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lilrs {

// Element of F_{q^m}. The value encodes the polynomial-basis coordinates as
// base-q digits, lowest degree first.
struct FieldElement {
  std::uint32_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

// Prime field F_q, q < 256. Elements are plain bytes.
struct PrimeField {
  using element_type = std::uint8_t;

  unsigned q = 2;

  constexpr element_type zero() const { return 0; }
  constexpr element_type one() const { return 1; }
  constexpr bool is_zero(element_type a) const { return a == 0; }
  constexpr element_type add(element_type a, element_type b) const {
    return static_cast<element_type>((a + b) % q);
  }
  constexpr element_type sub(element_type a, element_type b) const {
    return static_cast<element_type>((a + q - b) % q);
  }
  constexpr element_type neg(element_type a) const {
    return static_cast<element_type>((q - a) % q);
  }
  constexpr element_type mul(element_type a, element_type b) const {
    return static_cast<element_type>((unsigned{a} * b) % q);
  }
  element_type inv(element_type a) const;
  element_type div(element_type a, element_type b) const { return mul(a, inv(b)); }
};

class ExtensionField {
 public:
  using element_type = FieldElement;

  // modulus: monic degree-m polynomial, coefficients low-to-high in [0, q).
  ExtensionField(unsigned q, unsigned m, std::vector<unsigned> modulus, unsigned r = 1);

  // Uses a shipped Conway-style modulus when one is known, otherwise the
  // first primitive polynomial in lexicographic order.
  static ExtensionField standard(unsigned q, unsigned m, unsigned r = 1);
  static std::shared_ptr<const ExtensionField> make_shared(unsigned q, unsigned m,
                                                           unsigned r = 1);

  unsigned q() const { return q_; }
  unsigned m() const { return m_; }
  unsigned r() const { return r_; }
  std::uint32_t order() const { return order_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  PrimeField base() const { return PrimeField{q_}; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  FieldElement alpha() const { return alpha_; }
  bool is_zero(FieldElement a) const { return a.value == 0; }

  // Embedding of F_q.
  FieldElement from_base(unsigned c) const { return FieldElement{c % q_}; }
  FieldElement from_coords(std::span<const std::uint8_t> coords) const;
  std::uint8_t coord(FieldElement a, unsigned j) const { return digits_[a.value * m_ + j]; }
  std::span<const std::uint8_t> coords(FieldElement a) const {
    return {digits_.data() + static_cast<std::size_t>(a.value) * m_, m_};
  }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::int64_t e) const;
  FieldElement alpha_pow(std::int64_t e) const;
  // F_q scalar times element.
  FieldElement scale(std::uint8_t c, FieldElement a) const { return mul(from_base(c), a); }

  // sigma^i(x) = x^(q^(r*i mod m)); negative i gives inverse powers.
  FieldElement sigma(FieldElement x, std::int64_t i = 1) const;

  // Discrete log base alpha; a must be nonzero.
  std::uint32_t log(FieldElement a) const { return log_[a.value]; }

  std::string to_string(FieldElement a) const;

 private:
  void build_tables();

  unsigned q_;
  unsigned m_;
  unsigned r_;
  std::uint32_t order_;
  std::vector<unsigned> modulus_;
  FieldElement alpha_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::uint32_t> exp_;   // size 2(Q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::int64_t> zech_;   // log(1 + alpha^n), -1 when zero
  std::vector<std::vector<std::uint32_t>> frob_;  // frob_[j][x] = x^(q^j)
};

bool is_prime(unsigned n);
bool is_irreducible(unsigned q, const std::vector<unsigned>& poly);

}  // namespace lilrs
