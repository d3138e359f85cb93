#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace lilrs;
using lilrs::testing::random_element;

namespace {

// Independent schoolbook arithmetic on coordinate vectors.
std::vector<unsigned> poly_mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                                  const std::vector<unsigned>& mod, unsigned q) {
  const std::size_t m = mod.size() - 1;
  std::vector<unsigned> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
  for (std::size_t d = 2 * m - 1; d >= m; --d) {
    unsigned c = prod[d];
    for (std::size_t t = 0; t <= m; ++t) prod[d - m + t] = (prod[d - m + t] + q * q - c * mod[t]) % q;
  }
  prod.resize(m);
  return prod;
}

std::vector<unsigned> coords_of(const ExtensionField& f, FieldElement a) {
  std::vector<unsigned> out;
  for (unsigned j = 0; j < f.m(); ++j) out.push_back(f.coord(a, j));
  return out;
}

}  // namespace

TEST_CASE("F_4 representation and Frobenius") {
  const auto F = ExtensionField::standard(2, 2);
  CHECK(F.modulus() == std::vector<unsigned>{1, 1, 1});
  const FieldElement a = F.alpha();
  CHECK(coords_of(F, a) == std::vector<unsigned>{0, 1});
  // sigma(alpha) = alpha^2 = alpha + 1
  CHECK(coords_of(F, F.sigma(a, 1)) == std::vector<unsigned>{1, 1});
  CHECK(F.sigma(a, 0) == a);
  CHECK(F.mul(a, a) == F.add(a, F.one()));
}

TEST_CASE("sigma^m is the identity and negative powers invert") {
  const auto F = ExtensionField::standard(3, 3);
  CHECK(F.sigma(F.alpha(), 3) == F.alpha());
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    FieldElement x = random_element(F, rng);
    for (int i = -4; i <= 4; ++i) CHECK(F.sigma(F.sigma(x, i), -i) == x);
  }
}

TEST_CASE("shipped moduli have x as primitive element") {
  const std::vector<std::pair<unsigned, unsigned>> fields = {{2, 2}, {3, 2}, {3, 3}, {3, 8}, {2, 4}, {5, 2}, {7, 2}};
  for (auto [q, m] : fields) {
    const auto F = ExtensionField::standard(q, m);
    CHECK(F.alpha().value == q);
    std::set<std::uint32_t> seen;
    FieldElement x = F.one();
    for (std::uint32_t i = 0; i + 1 < F.order(); ++i) {
      seen.insert(x.value);
      x = F.mul(x, F.alpha());
    }
    CHECK(seen.size() == F.order() - 1);
  }
  CHECK(ExtensionField::standard(3, 8).modulus() == std::vector<unsigned>{2, 2, 2, 0, 1, 2, 0, 0, 1});
}

TEST_CASE("table arithmetic agrees with schoolbook arithmetic") {
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
    const auto F = ExtensionField::standard(q, m);
    for (std::uint32_t u = 0; u < F.order(); ++u) {
      for (std::uint32_t v = 0; v < F.order(); ++v) {
        FieldElement a{u}, b{v};
        auto ca = coords_of(F, a), cb = coords_of(F, b);
        std::vector<unsigned> sum(m);
        for (unsigned j = 0; j < m; ++j) sum[j] = (ca[j] + cb[j]) % q;
        CHECK(coords_of(F, F.add(a, b)) == sum);
        CHECK(coords_of(F, F.mul(a, b)) == poly_mulmod(ca, cb, F.modulus(), q));
        CHECK(F.add(F.sub(a, b), b) == a);
      }
      if (u != 0) CHECK(F.mul(FieldElement{u}, F.inv(FieldElement{u})) == F.one());
    }
  }
}

TEST_CASE("sigma is additive, multiplicative and F_q-linear") {
  for (auto [q, m, r] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 1}, {3, 3, 1}, {3, 3, 2}, {2, 4, 3}}) {
    const auto F = ExtensionField::standard(q, m, r);
    Rng rng(q * 100 + m * 10 + r);
    for (int t = 0; t < 300; ++t) {
      FieldElement x = random_element(F, rng), y = random_element(F, rng);
      CHECK(F.sigma(F.add(x, y)) == F.add(F.sigma(x), F.sigma(y)));
      CHECK(F.sigma(F.mul(x, y)) == F.mul(F.sigma(x), F.sigma(y)));
      FieldElement c = F.from_base(rng.element(q));
      CHECK(F.sigma(c) == c);
      // sigma(x) = x^(q^r)
      std::int64_t e = 1;
      for (unsigned i = 0; i < r; ++i) e *= q;
      CHECK(F.sigma(x) == F.pow(x, e));
    }
  }
}

TEST_CASE("construction rejects invalid parameters") {
  CHECK_THROWS_AS(ExtensionField(2, 2, {1, 0, 1}), std::invalid_argument);  // x^2 + 1 = (x+1)^2
  CHECK_THROWS_AS(ExtensionField(4, 2, {1, 1, 1}), std::invalid_argument);  // q not prime
  CHECK_THROWS_AS(ExtensionField(3, 4, {2, 0, 0, 2, 1}, 2), std::invalid_argument);  // gcd(r, m) != 1
  CHECK_THROWS_AS(ExtensionField(3, 2, {2, 2, 2}), std::invalid_argument);  // not monic
  CHECK_NOTHROW(ExtensionField(3, 4, {2, 0, 0, 2, 1}, 3));
}

TEST_CASE("fallback modulus search yields a primitive polynomial") {
  const auto F = ExtensionField::standard(11, 2);
  CHECK(F.alpha().value == 11);
  CHECK(is_irreducible(11, F.modulus()));
}

TEST_CASE("prime field inverse") {
  for (unsigned q : {2u, 3u, 5u, 7u, 251u}) {
    PrimeField f{q};
    for (unsigned a = 1; a < q; ++a) CHECK(f.mul(static_cast<std::uint8_t>(a), f.inv(static_cast<std::uint8_t>(a))) == 1);
  }
}
