#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lilrs/sim/experiment.hpp"
#include "lilrs/sim/stats.hpp"
#include "support.hpp"

using namespace lilrs;
using namespace lilrs::sim;

#ifndef LILRS_GOLDEN_DIR
#error "LILRS_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

ExperimentConfig simulation_config() {
  return parse_config(R"(
field: {q: 3, m: 3}
code: {s: 3, shots: [3, 3], k: 3}
channel: {gamma: [5, 6], delta: 1}
trials: 3000
seed: 42
)");
}

std::string csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_simulate_csv(os, rows);
  return os.str();
}

}  // namespace

TEST_CASE("Clopper-Pearson interval") {
  auto iv = clopper_pearson(0, 10);
  CHECK(iv.low == 0);
  CHECK(iv.high == doctest::Approx(1 - std::pow(0.025, 0.1)));
  iv = clopper_pearson(10, 10);
  CHECK(iv.high == 1);
  CHECK(iv.low == doctest::Approx(std::pow(0.025, 0.1)));
  // reference values for 5 out of 100
  iv = clopper_pearson(5, 100);
  CHECK(iv.low == doctest::Approx(0.01643).epsilon(1e-3));
  CHECK(iv.high == doctest::Approx(0.11284).epsilon(1e-3));
  CHECK_THROWS_AS(clopper_pearson(1, 0), std::invalid_argument);
}

TEST_CASE("config parsing") {
  auto cfg = simulation_config();
  CHECK(cfg.field.q == 3);
  CHECK(cfg.code.shot_dims == std::vector<std::size_t>{3, 3});
  CHECK(cfg.gammas == std::vector<std::size_t>{5, 6});
  CHECK(cfg.deltas == std::vector<std::size_t>{1});
  CHECK(cfg.decoder == DecoderKind::Unique);
  CHECK_THROWS_AS(parse_config("trials: 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("trails: 5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("decoder: fast"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("field: [1"), std::invalid_argument);
  auto again = parse_config(dump_config(cfg));
  CHECK(dump_config(again) == dump_config(cfg));
  auto spec = build_code(cfg);
  CHECK(spec.n_t() == 6);
  auto custom = build_code(parse_config("field: {q: 3, m: 3, modulus: [1, 2, 0, 1]}\ncode: {s: 1, shots: [2], k: 1, locators: [[1, 3]], params: [1]}"));
  CHECK(custom.locators()[0][1].value == 3);
}

TEST_CASE("simulate CSV header matches the golden file") {
  std::ifstream f(std::filesystem::path(LILRS_GOLDEN_DIR) / "simulate_header.csv");
  std::string golden;
  std::getline(f, golden);
  CHECK(golden == kSimulateCsvHeader);
  auto cfg = simulation_config();
  cfg.trials = 10;
  std::string out = csv(simulate(cfg, build_code(cfg)));
  CHECK(out.substr(0, out.find('\n')) == golden);
}

TEST_CASE("simulation is deterministic and independent of the worker count") {
  auto cfg = simulation_config();
  auto spec = build_code(cfg);
  const std::string one = csv(simulate(cfg, spec));
  CHECK(one == csv(simulate(cfg, spec)));
  cfg.workers = 4;
  CHECK(one == csv(simulate(cfg, spec)));
  cfg.stop_after_failures = 5;
  auto a = simulate_point(cfg, spec, 6, 1);
  cfg.workers = 1;
  auto b = simulate_point(cfg, spec, 6, 1);
  CHECK(a.failures == 5);
  CHECK(a.trials == b.trials);
  CHECK(a.trials < 3000);
}

TEST_CASE("noiseless simulation never fails") {
  auto cfg = simulation_config();
  cfg.gammas = {0};
  cfg.deltas = {0};
  cfg.trials = 300;
  for (auto d : {DecoderKind::Lo, DecoderKind::List, DecoderKind::Unique, DecoderKind::Complementary}) {
    cfg.decoder = d;
    auto rows = simulate(cfg, build_code(cfg));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].failures == 0);
    CHECK(rows[0].trials == 300);
  }
}

TEST_CASE("infeasible points become error rows") {
  auto cfg = simulation_config();
  cfg.gammas = {6, 40};
  cfg.trials = 5;
  auto rows = simulate(cfg, build_code(cfg));
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].error.has_value());
  CHECK(rows[1].error.has_value());
  CHECK(csv(rows).find("40,1,0,0,error") != std::string::npos);
}

TEST_CASE("bounds table") {
  auto cfg = simulation_config();
  cfg.gammas = {6, 7};
  auto rows = bounds_table(cfg, build_code(cfg));
  REQUIRE(rows.size() == 2);
  CHECK(*rows[0].strict_bound == doctest::Approx(0.2107).epsilon(1e-3));
  CHECK(rows[0].unique_region);
  CHECK_FALSE(rows[1].unique_region);
  CHECK_FALSE(rows[1].strict_bound.has_value());
  // s = 1: gamma + delta = n_t - k sits on the unique boundary
  auto s1 = parse_config("field: {q: 3, m: 3}\ncode: {s: 1, shots: [3, 3], k: 2}\nchannel: {gamma: 3, delta: 1}");
  auto r1 = bounds_table(s1, build_code(s1));
  CHECK(r1[0].unique_region);
}

TEST_CASE("failure dumps replay") {
  auto cfg = simulation_config();
  cfg.gammas = {6};
  cfg.trials = 400;
  const auto dir = std::filesystem::temp_directory_path() / "lilrs_dump_test";
  std::filesystem::remove_all(dir);
  cfg.dump_failures = dir.string();
  auto spec = build_code(cfg);
  auto row = simulate_point(cfg, spec, 6, 1);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    std::ifstream f(e.path());
    Json j = Json::parse(f);
    auto r = realization_from_json(3, j.at("realization"));
    auto f_msg = message_from_json(spec, j.at("message"));
    const SubspaceTuple U = apply_realization(r);
    CHECK(is_reachable(U, encode(spec, f_msg), 6, 1));
    auto out = unique_decode(spec, to_lifted(spec, U));
    CHECK_FALSE((out.is_unique() && out.message() == f_msg));
  }
  CHECK(files == row.failures);
  std::filesystem::remove_all(dir);
}

TEST_CASE("roundtrip and exhaustive reports") {
  auto cfg = simulation_config();
  cfg.gammas = {0};
  cfg.deltas = {0};
  cfg.trials = 50;
  auto rep = roundtrip(cfg, build_code(cfg));
  CHECK(rep.passed);
  CHECK(rep.decoded == 50);
  cfg.gammas = {4};
  cfg.deltas = {1};
  rep = roundtrip(cfg, build_code(cfg));
  CHECK(rep.implication_violations == 0);
  CHECK(rep.wrong == 0);

  auto tiny = parse_config("field: {q: 3, m: 2}\ncode: {s: 1, shots: [1, 1], k: 1}");
  auto ex = exhaustive(tiny, build_code(tiny));
  CHECK(ex.passed);
  CHECK(ex.min_distance == 4);
  CHECK(ex.codebook_size == 9);
  tiny.exhaustive_cap = 5;
  CHECK_THROWS_AS(exhaustive(tiny, build_code(tiny)), std::invalid_argument);
}

TEST_CASE("JSON word round trip") {
  auto cfg = simulation_config();
  auto spec = build_code(cfg);
  Rng rng(3);
  auto f = random_message(spec, rng);
  auto w = encode_lifted(spec, f);
  Json j = to_json(spec, w);
  auto back = lifted_word_from_json(spec, Json::parse(j.dump()));
  CHECK(to_subspaces(spec, back) == to_subspaces(spec, w));
  CHECK(message_from_json(spec, to_json(f)) == f);
  Json bad = j;
  bad["shots"][0][1] = bad["shots"][0][0];
  CHECK_THROWS_AS(lifted_word_from_json(spec, bad), std::invalid_argument);
}
