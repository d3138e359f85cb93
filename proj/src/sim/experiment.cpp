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

#include "lilrs/sim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lilrs/sim/stats.hpp"

namespace lilrs::sim {

std::uint64_t point_seed(std::uint64_t seed, std::size_t gamma, std::size_t delta) {
  return splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(gamma) << 32) ^ delta));
}

namespace {

bool in_unique_region(const CodeSpec& spec, std::size_t ins, std::size_t del) {
  return code_metrics(spec).unique_region.contains(ins, del, spec.interleaving());
}

bool in_list_region(const CodeSpec& spec, std::size_t ins, std::size_t del) {
  return code_metrics(spec).list_region.contains(ins, del, spec.interleaving());
}

// Decoder-side (insertions, deletions) of a channel point.
std::pair<std::size_t, std::size_t> decoder_view(DecoderKind d, std::size_t gamma, std::size_t delta) {
  if (d == DecoderKind::Complementary) return {delta, gamma};
  return {gamma, delta};
}

}  // namespace

std::optional<double> strict_bound_for(const CodeSpec& spec, DecoderKind d, std::size_t gamma, std::size_t delta) {
  auto [ins, del] = decoder_view(d, gamma, delta);
  if (del + spec.k() > spec.n_t() || !in_unique_region(spec, ins, del)) return std::nullopt;
  return strict_failure_bound(spec, ins, del);
}

std::optional<double> heuristic_bound_for(const CodeSpec& spec, DecoderKind d, std::size_t gamma,
                                          std::size_t delta) {
  auto [ins, del] = decoder_view(d, gamma, delta);
  if (del + spec.k() > spec.n_t() || !in_unique_region(spec, ins, del)) return std::nullopt;
  return heuristic_failure_bound(spec, ins, del);
}

TrialRecord run_trial(const CodeSpec& spec, DecoderKind decoder, ChannelParams channel, std::uint64_t seed,
                      std::uint64_t trial, std::size_t max_list, Json* dump) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(trial_seed(seed, trial));
  TrialRecord rec;
  rec.trial = trial;
  const MessageVector f = random_message(spec, rng);
  const SubspaceTuple codeword = encode(spec, f);
  const SubspaceTuple sent = decoder == DecoderKind::Complementary ? complement(codeword) : codeword;
  const ChannelOutput out = transmit(sent, channel, rng);
  rec.insertions = out.realization.insertions;
  rec.deletions = out.realization.deletions;

  DecodeOutcome result;
  if (decoder == DecoderKind::Complementary) {
    ComplementaryResult c = complementary_decode(spec, out.received, InnerDecoder::Unique);
    result = c.outcome;
    rec.success = c.dual_codeword && *c.dual_codeword == sent;
  } else {
    const LiftedWord rw = to_lifted(spec, out.received);
    switch (decoder) {
      case DecoderKind::Lo: result = lo_decode(spec, rw); break;
      case DecoderKind::List: result = list_decode(spec, rw, RootFindingOptions{max_list}); break;
      default: result = unique_decode(spec, rw); break;
    }
    rec.success = decoder == DecoderKind::List ? result.is_list() && result.contains(f)
                                               : result.is_unique() && result.message() == f;
  }
  rec.outcome = result.tag();
  rec.list_size = result.messages.size();
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (dump && !rec.success) {
    *dump = Json{{"trial", trial},
                 {"seed", seed},
                 {"decoder", to_string(decoder)},
                 {"gamma", channel.insertions},
                 {"delta", channel.deletions},
                 {"message", to_json(f)},
                 {"realization", to_json(out.realization)},
                 {"outcome", to_json(result)}};
  }
  return rec;
}

SweepRow simulate_point(const ExperimentConfig& cfg, const CodeSpec& spec, std::size_t gamma, std::size_t delta) {
  SweepRow row;
  row.gamma = gamma;
  row.delta = delta;
  const std::uint64_t seed = point_seed(cfg.seed, gamma, delta);
  const ChannelParams channel{gamma, delta};
  // Probe feasibility once so a bad point becomes an error row.
  try {
    run_trial(spec, cfg.decoder, channel, seed, 0, cfg.max_list);
  } catch (const std::invalid_argument& e) {
    row.error = e.what();
    return row;
  }
  row.strict_bound = strict_bound_for(spec, cfg.decoder, gamma, delta);
  row.heuristic_bound = heuristic_bound_for(spec, cfg.decoder, gamma, delta);

  const bool dumping = !cfg.dump_failures.empty();
  if (dumping) std::filesystem::create_directories(cfg.dump_failures);
  const unsigned workers = std::max(1u, cfg.workers);
  const std::uint64_t batch = std::max<std::uint64_t>(1024, 256ull * workers);

  std::uint64_t done = 0, failures = 0;
  while (done < cfg.trials) {
    const std::uint64_t count = std::min(batch, cfg.trials - done);
    std::vector<char> failed(count, 0);
    std::vector<Json> dumps(dumping ? count : 0);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
        Json* d = dumping ? &dumps[i] : nullptr;
        failed[i] = !run_trial(spec, cfg.decoder, channel, seed, done + i, cfg.max_list, d).success;
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    // Scan in trial order so the stopping point does not depend on scheduling.
    std::uint64_t used = count;
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!failed[i]) continue;
      ++failures;
      if (dumping) {
        std::ostringstream name;
        name << "gamma" << gamma << "_delta" << delta << "_trial" << (done + i) << ".json";
        std::ofstream(std::filesystem::path(cfg.dump_failures) / name.str()) << dumps[i].dump(2) << "\n";
      }
      if (cfg.stop_after_failures && failures >= *cfg.stop_after_failures) {
        used = i + 1;
        break;
      }
    }
    done += used;
    if (cfg.stop_after_failures && failures >= *cfg.stop_after_failures) break;
  }
  row.trials = done;
  row.failures = failures;
  row.rate = static_cast<double>(failures) / static_cast<double>(done);
  const Interval iv = clopper_pearson(failures, done);
  row.ci_low = iv.low;
  row.ci_high = iv.high;
  return row;
}

std::vector<SweepRow> simulate(const ExperimentConfig& cfg, const CodeSpec& spec) {
  std::vector<SweepRow> rows;
  for (std::size_t d : cfg.deltas)
    for (std::size_t g : cfg.gammas) rows.push_back(simulate_point(cfg, spec, g, d));
  return rows;
}

const char* const kSimulateCsvHeader = "gamma,delta,trials,failures,rate,strict_bound,heuristic_bound,ci_low,ci_high";

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : "NA"; }

}  // namespace

void write_simulate_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSimulateCsvHeader << "\n";
  for (const auto& r : rows) {
    os << r.gamma << ',' << r.delta << ',';
    if (r.error) {
      os << "0,0,error,NA,NA,NA,NA\n";
      continue;
    }
    os << r.trials << ',' << r.failures << ',' << fmt(r.rate) << ',' << fmt(r.strict_bound) << ','
       << fmt(r.heuristic_bound) << ',' << fmt(r.ci_low) << ',' << fmt(r.ci_high) << "\n";
  }
}

const char* const kBoundsCsvHeader = "gamma,delta,strict_bound,heuristic_bound,list_region,unique_region";

std::vector<BoundRow> bounds_table(const ExperimentConfig& cfg, const CodeSpec& spec) {
  std::vector<BoundRow> rows;
  for (std::size_t d : cfg.deltas) {
    for (std::size_t g : cfg.gammas) {
      auto [ins, del] = decoder_view(cfg.decoder, g, d);
      rows.push_back(BoundRow{g, d, strict_bound_for(spec, cfg.decoder, g, d),
                              heuristic_bound_for(spec, cfg.decoder, g, d), in_list_region(spec, ins, del),
                              in_unique_region(spec, ins, del)});
    }
  }
  return rows;
}

void write_bounds_csv(std::ostream& os, const std::vector<BoundRow>& rows) {
  os << kBoundsCsvHeader << "\n";
  for (const auto& r : rows) {
    os << r.gamma << ',' << r.delta << ',' << fmt(r.strict_bound) << ',' << fmt(r.heuristic_bound) << ','
       << (r.list_region ? "yes" : "no") << ',' << (r.unique_region ? "yes" : "no") << "\n";
  }
}

RoundtripReport roundtrip(const ExperimentConfig& cfg, const CodeSpec& spec) {
  RoundtripReport rep;
  const std::size_t gamma = cfg.gammas.front(), delta = cfg.deltas.front();
  const std::uint64_t seed = point_seed(cfg.seed, gamma, delta);
  const bool cross_check = cfg.decoder == DecoderKind::Lo || cfg.decoder == DecoderKind::Unique;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(seed, t));
    const MessageVector f = random_message(spec, rng);
    const SubspaceTuple codeword = encode(spec, f);
    ++rep.trials;
    if (cfg.decoder == DecoderKind::Complementary) {
      const SubspaceTuple sent = complement(codeword);
      const ChannelOutput out = transmit(sent, {gamma, delta}, rng);
      const ComplementaryResult res = complementary_decode(spec, out.received);
      if (res.dual_codeword && *res.dual_codeword == sent) {
        ++rep.decoded;
      } else if (res.dual_codeword) {
        ++rep.wrong;
      } else {
        ++rep.failures;
      }
      continue;
    }
    const ChannelOutput out = transmit(codeword, {gamma, delta}, rng);
    const LiftedWord rw = to_lifted(spec, out.received);
    DecodeOutcome result;
    switch (cfg.decoder) {
      case DecoderKind::Lo: result = lo_decode(spec, rw); break;
      case DecoderKind::List: result = list_decode(spec, rw, RootFindingOptions{cfg.max_list}); break;
      default: result = unique_decode(spec, rw); break;
    }
    const bool ok = cfg.decoder == DecoderKind::List ? result.is_list() && result.contains(f)
                                                     : result.is_unique() && result.message() == f;
    if (ok) {
      ++rep.decoded;
    } else if (result.is_failure()) {
      ++rep.failures;
    } else {
      ++rep.wrong;
    }
    if (cross_check) {
      const DecodeOutcome lo = cfg.decoder == DecoderKind::Lo ? result : lo_decode(spec, rw);
      if (lo.is_unique()) {
        ++rep.lo_successes;
        const DecodeOutcome un = cfg.decoder == DecoderKind::Unique ? result : unique_decode(spec, rw);
        if (!un.is_unique() || !(un.message() == lo.message())) ++rep.implication_violations;
      }
    }
  }
  const bool noiseless = gamma == 0 && delta == 0;
  rep.passed = rep.wrong == 0 && rep.implication_violations == 0 && !(noiseless && rep.failures > 0);
  return rep;
}

Json to_json(const RoundtripReport& r) {
  return Json{{"trials", r.trials},
              {"decoded", r.decoded},
              {"failures", r.failures},
              {"wrong", r.wrong},
              {"lo_successes", r.lo_successes},
              {"implication_violations", r.implication_violations},
              {"passed", r.passed}};
}

ExhaustiveReport exhaustive(const ExperimentConfig& cfg, const CodeSpec& spec) {
  ExhaustiveReport rep;
  const std::size_t exponent = spec.interleaving() * spec.k();
  double size = std::pow(static_cast<double>(spec.field().order()), static_cast<double>(exponent));
  if (size > static_cast<double>(cfg.exhaustive_cap)) {
    throw std::invalid_argument("codebook of " + fmt(size) + " words exceeds the exhaustive cap");
  }
  rep.codebook_size = static_cast<std::uint64_t>(std::llround(size));
  std::vector<SubspaceTuple> book, duals;
  for (std::uint64_t i = 0; i < rep.codebook_size; ++i) {
    book.push_back(encode(spec, message_from_index(spec, i)));
    duals.push_back(complement(book.back()));
  }

  rep.designed_distance = code_metrics(spec).min_distance;
  rep.min_distance = std::numeric_limits<std::size_t>::max();
  bool isometry = true;
  for (std::size_t i = 0; i < book.size(); ++i) {
    for (std::size_t j = i + 1; j < book.size(); ++j) {
      const std::size_t d = sum_subspace_distance(book[i], book[j]);
      if (d < rep.min_distance) {
        rep.min_distance = d;
        rep.pairs_at_minimum = 0;
      }
      if (d == rep.min_distance) ++rep.pairs_at_minimum;
      if (sum_subspace_distance(duals[i], duals[j]) != d) isometry = false;
    }
  }
  if (book.size() < 2) rep.min_distance = 0;
  rep.distance_ok = book.size() < 2 || rep.min_distance == rep.designed_distance;
  std::set<std::string> dual_keys;
  for (const auto& d : duals) {
    std::string key;
    for (const auto& v : d.shots) {
      for (const auto& r : basis_digit_rows(v)) key += r + ",";
      key += ";";
    }
    dual_keys.insert(key);
  }
  rep.dual_ok = isometry && dual_keys.size() == book.size();

  // List completeness against brute force over every realization in the region.
  rep.list_size_bound = static_cast<std::uint64_t>(std::llround(
      std::pow(static_cast<double>(spec.field().q()),
               static_cast<double>(spec.field().m() * spec.k() * (spec.interleaving() - 1)))));
  const Region region = code_metrics(spec).list_region;
  const auto dims = spec.shot_dims();
  const bool uniform = std::all_of(dims.begin(), dims.end(), [&](std::size_t d) { return d == dims[0]; });
  if (uniform) {
    std::set<std::string> seen;
    const std::size_t max_ins = spec.shots() * (spec.ambient_dim(0) - dims[0]);
    const std::size_t max_del = spec.shots() * dims[0];
    for (std::uint64_t i = 0; i < book.size(); ++i) {
      for (std::size_t del = 0; del <= max_del; ++del) {
        for (std::size_t ins = 0; ins <= max_ins; ++ins) {
          if (!region.contains(ins, del, spec.interleaving())) continue;
          for (const auto& r : enumerate_realizations(book[i], {ins, del})) {
            const SubspaceTuple U = apply_realization(r);
            std::string key;
            for (const auto& v : U.shots) {
              for (const auto& row : basis_digit_rows(v)) key += row + ",";
              key += ";";
            }
            if (!seen.insert(key).second) continue;
            ++rep.list_instances;
            std::vector<MessageVector> expected;
            for (std::uint64_t j = 0; j < book.size(); ++j) {
              const ObservedErrors e = observed_errors(U, book[j]);
              if (region.contains(e.insertions, e.deletions, spec.interleaving())) {
                expected.push_back(message_from_index(spec, j));
              }
            }
            std::sort(expected.begin(), expected.end());
            const DecodeOutcome out = list_decode(spec, to_lifted(spec, U), RootFindingOptions{cfg.max_list});
            if (!out.is_list() || out.messages != expected) ++rep.list_mismatches;
            rep.max_list_size = std::max(rep.max_list_size, out.messages.size());
          }
        }
      }
    }
  }
  rep.list_ok = rep.list_mismatches == 0 && rep.max_list_size <= rep.list_size_bound;
  rep.passed = rep.distance_ok && rep.dual_ok && rep.list_ok;
  return rep;
}

Json to_json(const ExhaustiveReport& r) {
  return Json{{"codebook_size", r.codebook_size},
              {"min_distance", r.min_distance},
              {"designed_distance", r.designed_distance},
              {"pairs_at_minimum", r.pairs_at_minimum},
              {"distance_ok", r.distance_ok},
              {"dual_ok", r.dual_ok},
              {"list_instances", r.list_instances},
              {"list_mismatches", r.list_mismatches},
              {"max_list_size", r.max_list_size},
              {"list_size_bound", r.list_size_bound},
              {"list_ok", r.list_ok},
              {"passed", r.passed}};
}

}  // namespace lilrs::sim
