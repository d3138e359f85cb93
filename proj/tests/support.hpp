// Shared helpers for the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "lilrs/channel.hpp"
#include "lilrs/code.hpp"
#include "lilrs/decoders.hpp"
#include "lilrs/field.hpp"
#include "lilrs/rng.hpp"
#include "lilrs/skew.hpp"
#include "lilrs/subspace.hpp"

namespace lilrs::testing {

inline FieldElement random_element(const ExtensionField& f, Rng& rng) {
  return FieldElement{static_cast<std::uint32_t>(rng.below(f.order()))};
}

inline FieldElement random_nonzero(const ExtensionField& f, Rng& rng) {
  return FieldElement{static_cast<std::uint32_t>(1 + rng.below(f.order() - 1))};
}

inline SkewPolynomial random_poly(const ExtensionField& f, std::size_t len, Rng& rng) {
  std::vector<FieldElement> c(len);
  for (auto& x : c) x = random_element(f, rng);
  return SkewPolynomial(std::move(c));
}

inline FqMatrix random_fq_matrix(unsigned q, std::size_t rows, std::size_t cols, Rng& rng) {
  FqMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.element(q);
  return m;
}

// Every vector in the F_q-span of the rows, as packed base-q integers.
inline std::vector<std::uint64_t> span_oracle(unsigned q, const FqMatrix& rows) {
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < rows.rows(); ++i) combos *= q;
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::vector<unsigned> v(rows.cols(), 0);
    std::uint64_t x = c;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      unsigned coef = static_cast<unsigned>(x % q);
      x /= q;
      for (std::size_t j = 0; j < rows.cols(); ++j) v[j] = (v[j] + coef * rows(i, j)) % q;
    }
    std::uint64_t key = 0;
    for (unsigned d : v) key = key * q + d;
    out.push_back(key);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Simulation-scale code: F_27, two shots of dimension 3, s = 3, k = 3.
inline CodeSpec simulation_code() {
  return CodeSpec::with_defaults(ExtensionField::make_shared(3, 3), 3, {3, 3}, 3);
}

// Smallest exhaustive code: F_9, two shots of dimension 1, s = 1, k = 1.
inline CodeSpec tiny_code() {
  return CodeSpec::with_defaults(ExtensionField::make_shared(3, 2), 1, {1, 1}, 1);
}

// Double-loop product with sigma computed by exponentiation, not the table.
inline SkewPolynomial naive_product(const ExtensionField& F, const SkewPolynomial& a, const SkewPolynomial& b) {
  std::vector<FieldElement> out(a.coeffs().size() + b.coeffs().size() + 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    std::int64_t e = 1;
    for (std::size_t t = 0; t < i; ++t) e *= F.q();
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(a.coeff(i), F.pow(b.coeff(j), e)));
    }
  }
  return SkewPolynomial(out);
}

inline SkewPolynomial poly_from_index(std::uint32_t idx, std::size_t len, unsigned order) {
  std::vector<FieldElement> c(len);
  for (auto& x : c) {
    x = FieldElement{idx % order};
    idx /= order;
  }
  return SkewPolynomial(c);
}

// Upper tail p-value of Pearson's statistic against a flat expectation.
inline double chi_square_p(const std::vector<std::size_t>& counts, double expected) {
  double stat = 0;
  for (std::size_t c : counts) stat += (c - expected) * (c - expected) / expected;
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace lilrs::testing
