#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "support.hpp"

using namespace lilrs;
using lilrs::testing::random_fq_matrix;
using lilrs::testing::span_oracle;

namespace {

std::vector<std::uint64_t> set_intersection(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t log_q(std::size_t n, unsigned q) {
  std::size_t d = 0;
  while (n > 1) {
    n /= q;
    ++d;
  }
  return d;
}

Subspace random_subspace(unsigned q, std::size_t N, Rng& rng) {
  return Subspace(q, N, random_fq_matrix(q, rng.below(N + 1), N, rng));
}

}  // namespace

TEST_CASE("expansions") {
  const auto F = ExtensionField::standard(2, 2);
  FqmMatrix zero(1, 1, F.zero()), one(1, 1, F.one());
  CHECK(expand_row_wise(F, zero).row(0) == std::vector<std::uint8_t>{0, 0});
  CHECK(expand_row_wise(F, one).row(0) == std::vector<std::uint8_t>{1, 0});
  CHECK(expand_column_wise(F, one).col(0) == std::vector<std::uint8_t>{1, 0});
  FqmMatrix v(1, 2);
  v(0, 0) = F.one();
  v(0, 1) = F.alpha();
  CHECK(rank_over_base(F, v) == 2);
  const auto F9 = ExtensionField::standard(3, 2);
  FqmMatrix w(1, 2);
  w(0, 0) = F9.alpha();
  w(0, 1) = F9.mul(F9.from_base(2), F9.alpha());
  CHECK(rank_over_base(F9, w) == 1);
}

TEST_CASE("row-wise expansion rank matches span enumeration") {
  const auto F = ExtensionField::standard(3, 2);
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    FqmMatrix M(1 + rng.below(3), 1 + rng.below(2));
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = testing::random_element(F, rng);
    FqMatrix E = expand_row_wise(F, M);
    CHECK(rank(PrimeField{3}, E) == log_q(span_oracle(3, E).size(), 3));
  }
}

TEST_CASE("distance, sum and intersection agree with enumeration") {
  for (unsigned q : {2u, 3u}) {
    Rng rng(q);
    for (int t = 0; t < 150; ++t) {
      const std::size_t N = 1 + rng.below(q == 2 ? 6 : 4);
      Subspace U = random_subspace(q, N, rng), V = random_subspace(q, N, rng);
      auto su = span_oracle(q, U.basis()), sv = span_oracle(q, V.basis());
      auto common = set_intersection(su, sv);
      std::size_t inter = log_q(common.size(), q);
      CHECK(intersect(U, V).dim() == inter);
      CHECK(span_oracle(q, intersect(U, V).basis()) == common);
      CHECK(sum_space(U, V).dim() + inter == U.dim() + V.dim());
      CHECK(subspace_distance(U, V) == sum_space(U, V).dim() - inter);
    }
  }
}

TEST_CASE("dual") {
  Rng rng(43);
  CHECK(dual(Subspace::zero(3, 4)) == Subspace::full(3, 4));
  CHECK(dual(Subspace::full(3, 4)) == Subspace::zero(3, 4));
  for (int t = 0; t < 200; ++t) {
    const unsigned q = t % 2 ? 2 : 3;
    const std::size_t N = 1 + rng.below(6);
    Subspace V = random_subspace(q, N, rng);
    Subspace W = dual(V);
    CHECK(W.dim() == N - V.dim());
    CHECK(dual(W) == V);
    PrimeField f{q};
    for (std::size_t i = 0; i < V.dim(); ++i)
      for (std::size_t j = 0; j < W.dim(); ++j) {
        std::uint8_t dot = 0;
        for (std::size_t c = 0; c < N; ++c) dot = f.add(dot, f.mul(V.basis()(i, c), W.basis()(j, c)));
        CHECK(dot == 0);
      }
    Subspace U = random_subspace(q, N, rng);
    CHECK(subspace_distance(dual(U), dual(V)) == subspace_distance(U, V));
  }
}

TEST_CASE("tuple distance and echelon idempotence") {
  Rng rng(47);
  for (int t = 0; t < 100; ++t) {
    SubspaceTuple A, B;
    for (int i = 0; i < 3; ++i) {
      A.shots.push_back(random_subspace(2, 5, rng));
      B.shots.push_back(random_subspace(2, 5, rng));
    }
    std::size_t manual = 0;
    for (int i = 0; i < 3; ++i) manual += subspace_distance(A.shots[i], B.shots[i]);
    CHECK(sum_subspace_distance(A, B) == manual);
    CHECK(sum_subspace_distance(A, A) == 0);
    CHECK(sum_subspace_distance(dual(A), dual(B)) == manual);
    CHECK(Subspace(2, 5, A.shots[0].basis()) == A.shots[0]);
  }
  SubspaceTuple L1{{Subspace(2, 2, FqMatrix(1, 2, 1))}};
  FqMatrix e1(1, 2, 0);
  e1(0, 0) = 1;
  SubspaceTuple L2{{Subspace(2, 2, e1)}};
  CHECK(sum_subspace_distance(L1, L2) == 2);
}

TEST_CASE("gaussian binomials and kappa") {
  CHECK(gaussian_binomial(5, 0, 2) == 1);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(2, 1, 3) == 4);
  CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), std::invalid_argument);
  for (unsigned q : {2u, 3u, 4u})
    for (unsigned N = 0; N <= 10; ++N)
      for (unsigned l = 0; l <= N; ++l) CHECK(gaussian_binomial(N, l, q) == gaussian_binomial(N, N - l, q));
  for (unsigned q : {2u, 3u, 4u}) {
    const double kq = kappa(q);
    for (unsigned N = 0; N <= 10; ++N)
      for (unsigned l = 0; l <= N; ++l) {
        const BigInt low = big_pow(q, (N - l) * l);
        const BigInt g = gaussian_binomial(N, l, q);
        CHECK(low <= g);
        CHECK(g.convert_to<double>() <= kq * low.convert_to<double>());
      }
  }
  // count subspaces by enumeration for q = 2, N = 4
  for (unsigned l = 0; l <= 4; ++l) CHECK(gaussian_binomial(4, l, 2) == all_subspaces(2, 4, l).size());
  CHECK(kappa(2) == doctest::Approx(3.463).epsilon(1e-3));
  CHECK(kappa(3) == doctest::Approx(1.785).epsilon(1e-3));
  CHECK(kappa(4) == doctest::Approx(1.452).epsilon(1e-3));
  CHECK(kappa(2) > kappa(3));
  CHECK(kappa(3, 1) == doctest::Approx(1.5));
}

TEST_CASE("digit-row serialization round trip") {
  Rng rng(53);
  for (int t = 0; t < 50; ++t) {
    Subspace V = random_subspace(3, 6, rng);
    CHECK(subspace_from_digit_rows(3, 6, basis_digit_rows(V)) == V);
  }
}
