#include <doctest.h>

#include <map>

#include "support.hpp"

using namespace lilrs;
using lilrs::testing::chi_square_p;

namespace {

SubspaceTuple random_tuple(unsigned q, std::size_t ambient, std::size_t dim, std::size_t shots, Rng& rng) {
  SubspaceTuple t;
  for (std::size_t i = 0; i < shots; ++i) {
    for (;;) {
      Subspace v(q, ambient, testing::random_fq_matrix(q, dim, ambient, rng));
      if (v.dim() == dim) {
        t.shots.push_back(v);
        break;
      }
    }
  }
  return t;
}

}  // namespace

TEST_CASE("num_subspace_tuples examples") {
  CHECK(num_subspace_tuples(4, 2, 1, 2) == gaussian_binomial(4, 2, 2));
  CHECK(num_subspace_tuples(1, 1, 2, 2) == 2);
  CHECK(num_subspace_tuples(2, 1, 2, 2) == 6);
  CHECK(num_subspace_tuples(2, 5, 2, 2) == 0);
  // brute force over all tuples of subspaces of F_2^2, two shots
  std::size_t brute = 0;
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      if (a + b == 2) brute += all_subspaces(2, 2, a).size() * all_subspaces(2, 2, b).size();
  CHECK(num_subspace_tuples(2, 2, 2, 2) == brute);
}

TEST_CASE("draw_dimension_partition") {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) CHECK(draw_dimension_partition(5, 3, 1, 2, rng) == std::vector<std::size_t>{3});
  for (int t = 0; t < 20; ++t) CHECK(draw_dimension_partition(1, 2, 2, 2, rng) == std::vector<std::size_t>{1, 1});
  CHECK_THROWS_AS(draw_dimension_partition(1, 3, 2, 2, rng), std::invalid_argument);

  const int draws = 100000;
  int first = 0;
  for (int t = 0; t < draws; ++t) first += draw_dimension_partition(1, 1, 2, 2, rng)[0] == 1;
  const double sigma = std::sqrt(draws * 0.25);
  CHECK(std::abs(first - draws / 2.0) < 3 * sigma);

  // weights 1 : 7 : 7 : 1 for (0,2),(1,1)... on ambient 3, q = 2, two shots, dim 2
  std::map<std::vector<std::size_t>, int> freq;
  for (int t = 0; t < draws; ++t) ++freq[draw_dimension_partition(3, 2, 2, 2, rng)];
  const double total = static_cast<double>(num_subspace_tuples(3, 2, 2, 2));
  REQUIRE(freq.size() == 3);
  for (const auto& [part, count] : freq) {
    const double p = static_cast<double>(gaussian_binomial(3, static_cast<unsigned>(part[0]), 2) *
                                         gaussian_binomial(3, static_cast<unsigned>(part[1]), 2)) / total;
    CHECK(std::abs(count - draws * p) < 4 * std::sqrt(draws * p * (1 - p)));
  }
}

TEST_CASE("transmit: distance, dimensions, reachability, determinism") {
  Rng rng(7);
  for (unsigned q : {2u, 3u}) {
    for (int t = 0; t < 100; ++t) {
      const std::size_t shots = 1 + rng.below(3), N = 2 + rng.below(4), n = 1 + rng.below(N - 1);
      SubspaceTuple V = random_tuple(q, N, n, shots, rng);
      ChannelParams p{rng.below(shots * (N - n) + 1), rng.below(shots * n + 1)};
      auto out = transmit(V, p, rng);
      const auto& r = out.realization;
      CHECK(sum_subspace_distance(out.received, V) == p.insertions + p.deletions);
      CHECK(is_reachable(out.received, V, p.insertions, p.deletions));
      CHECK(out.received.sum_dim() == shots * n - p.deletions + p.insertions);
      for (std::size_t i = 0; i < shots; ++i) {
        CHECK(out.received.shots[i].dim() == n - r.deletions[i] + r.insertions[i]);
        CHECK(intersect(r.errors[i], V.shots[i]).dim() == 0);
        CHECK(V.shots[i].contains(r.kept[i]));
      }
      CHECK(apply_realization(r) == out.received);
    }
  }
  SubspaceTuple V = random_tuple(3, 5, 2, 2, rng);
  Rng a(99), b(99);
  CHECK(transmit(V, {3, 1}, a).realization == transmit(V, {3, 1}, b).realization);
  Rng c(1);
  CHECK(transmit(V, {0, 0}, c).received == V);
  CHECK_THROWS_AS(transmit(V, {7, 0}, c), std::invalid_argument);
  CHECK_THROWS_AS(transmit(V, {0, 5}, c), std::invalid_argument);
}

TEST_CASE("is_reachable") {
  Rng rng(5);
  SubspaceTuple V = random_tuple(2, 4, 2, 2, rng);
  CHECK(is_reachable(V, V, 0, 0));
  CHECK_FALSE(is_reachable(V, V, 1, 0));
}

TEST_CASE("single-shot error space is uniform") {
  // N = 2, n = 1, q = 2: two admissible error lines.
  FqMatrix e1(1, 2, 0);
  e1(0, 0) = 1;
  SubspaceTuple V{{Subspace(2, 2, e1)}};
  Rng rng(8);
  std::map<std::string, std::size_t> freq;
  const int draws = 100000;
  for (int t = 0; t < draws; ++t) ++freq[transmit(V, {1, 0}, rng).realization.key()];
  REQUIRE(freq.size() == 2);
  for (const auto& [k, c] : freq) CHECK(std::abs(c - draws / 2.0) < 3 * std::sqrt(draws * 0.25));
}

TEST_CASE("realizations are uniform over the enumerated support") {
  for (unsigned q : {2u, 3u}) {
    for (std::size_t shots : {1u, 2u}) {
      for (ChannelParams p : {ChannelParams{1, 0}, ChannelParams{0, 1}, ChannelParams{1, 1}}) {
        if (p.insertions > shots || p.deletions > shots) continue;
        FqMatrix e1(1, 2, 0);
        e1(0, 1) = 1;
        SubspaceTuple V;
        for (std::size_t i = 0; i < shots; ++i) V.shots.emplace_back(q, 2, e1);
        auto support = enumerate_realizations(V, p);
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < support.size(); ++i) index[support[i].key()] = i;
        REQUIRE(index.size() == support.size());
        std::vector<std::size_t> counts(support.size(), 0);
        Rng rng(1000 + q * 10 + shots);
        const std::size_t draws = 20000 * support.size();
        bool outside = false;
        for (std::size_t t = 0; t < draws; ++t) {
          auto it = index.find(transmit(V, p, rng).realization.key());
          if (it == index.end()) {
            outside = true;
            break;
          }
          ++counts[it->second];
        }
        CHECK_FALSE(outside);
        if (counts.size() > 1) CHECK(chi_square_p(counts, static_cast<double>(draws) / counts.size()) > 0.001);
      }
    }
  }
}
