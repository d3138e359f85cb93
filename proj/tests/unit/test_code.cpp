#include <doctest.h>

#include <cmath>
#include <set>

#include "support.hpp"

using namespace lilrs;
using testing::simulation_code;
using testing::tiny_code;

namespace {

std::vector<SubspaceTuple> codebook(const CodeSpec& spec) {
  std::uint64_t size = 1;
  for (std::size_t t = 0; t < spec.interleaving() * spec.k(); ++t) size *= spec.field().order();
  std::vector<SubspaceTuple> out;
  for (std::uint64_t i = 0; i < size; ++i) out.push_back(encode(spec, message_from_index(spec, i)));
  return out;
}

}  // namespace

TEST_CASE("spec validation") {
  auto F = ExtensionField::make_shared(3, 3);
  const FieldElement one = F->one(), a = F->alpha();
  CHECK_THROWS_AS(CodeSpec(F, 1, 1, {{one, one}}, {one}), std::invalid_argument);
  CHECK_THROWS_AS(CodeSpec(F, 1, 4, {{one, a, F->alpha_pow(2)}}, {one}), std::invalid_argument);
  CHECK_THROWS_AS(CodeSpec(F, 1, 1, {{one}, {one}}, {one, one}), std::invalid_argument);
  CHECK_THROWS_AS(CodeSpec(F, 1, 1, {{one}, {one}, {one}}, {one, a, F->alpha_pow(2)}), std::invalid_argument);
  CHECK_THROWS_AS(CodeSpec(F, 0, 1, {{one}}, {one}), std::invalid_argument);
  CHECK_NOTHROW(CodeSpec(F, 2, 2, {{one, a}, {a}}, {one, a}));
  auto spec = simulation_code();
  CHECK_THROWS_AS(validate_message(spec, {SkewPolynomial{}}), std::invalid_argument);
  MessageVector big(3, SkewPolynomial::monomial(one, 3));
  CHECK_THROWS_AS(validate_message(spec, big), std::invalid_argument);
}

TEST_CASE("encoding shape and neutral space") {
  auto spec = simulation_code();
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    auto C = encode(spec, random_message(spec, rng));
    CHECK(C.dims() == std::vector<std::size_t>{3, 3});
    CHECK(C.ambient_dims() == std::vector<std::size_t>{12, 12});
  }
  MessageVector zero(3, SkewPolynomial{});
  auto C0 = encode(spec, zero);
  for (const auto& V : C0.shots) {
    for (std::size_t r = 0; r < V.dim(); ++r)
      for (std::size_t c = 3; c < 12; ++c) CHECK(V.basis()(r, c) == 0);
  }
}

TEST_CASE("lifted form round trip") {
  auto spec = simulation_code();
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    auto C = encode(spec, random_message(spec, rng));
    CHECK(to_subspaces(spec, to_lifted(spec, C)) == C);
  }
}

TEST_CASE("encoding is additive in the message") {
  auto spec = simulation_code();
  const auto& F = spec.field();
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    auto f = random_message(spec, rng), g = random_message(spec, rng);
    MessageVector h;
    for (std::size_t l = 0; l < 3; ++l) h.push_back(skew_add(F, f[l], g[l]));
    auto wf = encode_lifted(spec, f), wg = encode_lifted(spec, g), wh = encode_lifted(spec, h);
    for (std::size_t i = 0; i < spec.shots(); ++i)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 1; c <= 3; ++c) CHECK(wh.shots[i](r, c) == F.add(wf.shots[i](r, c), wg.shots[i](r, c)));
  }
}

TEST_CASE("single-shot tiny code is injective") {
  auto spec = CodeSpec::with_defaults(ExtensionField::make_shared(3, 2), 1, {1}, 1);
  auto book = codebook(spec);
  CHECK(book.size() == 9);
  std::set<std::string> keys;
  for (const auto& c : book) keys.insert(basis_digit_rows(c.shots[0]).at(0));
  CHECK(keys.size() == 9);
}

TEST_CASE("tiny two-shot code: distance, complement, rate") {
  auto spec = tiny_code();
  auto book = codebook(spec);
  REQUIRE(book.size() == 9);
  std::size_t dmin = 1000, dmin_dual = 1000;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < book.size(); ++i)
    for (std::size_t j = 0; j < book.size(); ++j) {
      ++pairs;
      if (i == j) continue;
      dmin = std::min(dmin, sum_subspace_distance(book[i], book[j]));
      dmin_dual = std::min(dmin_dual, sum_subspace_distance(complement(book[i]), complement(book[j])));
    }
  CHECK(pairs == 81);
  CHECK(dmin == 4);
  CHECK(dmin == code_metrics(spec).min_distance);
  CHECK(dmin_dual == dmin);
  std::set<std::string> duals;
  for (const auto& c : book) {
    auto d = complement(c);
    CHECK(complement(d) == c);
    CHECK(d.dims() == std::vector<std::size_t>{2, 2});
    std::string key;
    for (const auto& v : d.shots)
      for (const auto& row : basis_digit_rows(v)) key += row + ",";
    duals.insert(key);
  }
  CHECK(duals.size() == book.size());
  // log_q |C| / sum n_i N_i
  const double rate = std::log(static_cast<double>(book.size())) / std::log(3.0) / (1.0 * 3 + 1.0 * 3);
  CHECK(code_metrics(spec).rate == doctest::Approx(rate));
}

TEST_CASE("metrics of the simulation code") {
  auto spec = simulation_code();
  auto cm = code_metrics(spec);
  CHECK(cm.min_distance == 8);
  CHECK(cm.rate == doctest::Approx(27.0 / 72.0));
  CHECK(cm.dual_rate == doctest::Approx(27.0 / 216.0));
  CHECK(cm.normalized_weight == doctest::Approx(6.0 / 24.0));
  CHECK(cm.normalized_distance == doctest::Approx(4.0 / 6.0));
  REQUIRE(cm.singleton_rate_bound.has_value());
  CHECK(*cm.singleton_rate_bound >= cm.rate);
  CHECK(cm.unique_region.contains(6, 1, 3));
  CHECK_FALSE(cm.unique_region.contains(7, 1, 3));
  CHECK(cm.list_region.contains(8, 1, 3));
  CHECK_FALSE(cm.list_region.contains(9, 1, 3));

  auto s1 = CodeSpec::with_defaults(ExtensionField::make_shared(3, 3), 1, {3, 2}, 2);
  CHECK(code_metrics(s1).rate == doctest::Approx(3.0 * 2 / (3.0 * 6 + 2.0 * 5)));
  CHECK_FALSE(code_metrics(s1).singleton_rate_bound.has_value());
  CHECK(code_metrics(s1).unique_region.contains(2, 1, 1));
  CHECK_FALSE(code_metrics(s1).unique_region.contains(3, 1, 1));
}
