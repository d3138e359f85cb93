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

#include "lilrs/code.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lilrs {

std::vector<std::size_t> LiftedWord::partition() const {
  std::vector<std::size_t> out;
  for (const auto& m : shots) out.push_back(m.rows());
  return out;
}

std::size_t LiftedWord::total_rows() const {
  std::size_t n = 0;
  for (const auto& m : shots) n += m.rows();
  return n;
}

CodeSpec::CodeSpec(std::shared_ptr<const ExtensionField> field, std::size_t interleaving, std::size_t k,
                   std::vector<std::vector<FieldElement>> locators, std::vector<FieldElement> params)
    : field_(std::move(field)), s_(interleaving), k_(k), locators_(std::move(locators)),
      params_(std::move(params)) {
  if (!field_) throw std::invalid_argument("code needs a field");
  const ExtensionField& f = *field_;
  if (s_ < 1) throw std::invalid_argument("interleaving order must be at least 1");
  if (locators_.empty()) throw std::invalid_argument("code needs at least one shot");
  if (params_.size() != locators_.size()) throw std::invalid_argument("one evaluation parameter per shot");
  if (locators_.size() > f.q() - 1) throw std::invalid_argument("number of shots must not exceed q - 1");
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (f.is_zero(params_[i])) throw std::invalid_argument("evaluation parameters must be nonzero");
    for (std::size_t j = 0; j < i; ++j) {
      if (are_conjugate(f, params_[i], params_[j])) {
        throw std::invalid_argument("evaluation parameters must be pairwise non-conjugate");
      }
    }
  }
  for (const auto& block : locators_) {
    if (block.empty()) throw std::invalid_argument("every shot needs at least one locator");
    if (block.size() > f.m()) throw std::invalid_argument("a shot cannot hold more than m locators");
    std::vector<std::size_t> part{block.size()};
    if (sum_rank_weight(f, block, part) != block.size()) {
      throw std::invalid_argument("locators of a shot must be F_q-linearly independent");
    }
  }
  if (k_ < 1 || k_ > n_t()) throw std::invalid_argument("dimension k must satisfy 1 <= k <= n_t");

  const unsigned q = f.q();
  span_index_.resize(locators_.size());
  for (std::size_t i = 0; i < locators_.size(); ++i) {
    const auto& block = locators_[i];
    span_index_[i].assign(f.order(), -1);
    std::int64_t combos = 1;
    for (std::size_t t = 0; t < block.size(); ++t) combos *= q;
    for (std::int64_t code = 0; code < combos; ++code) {
      FieldElement x{};
      std::int64_t c = code;
      for (std::size_t t = 0; t < block.size(); ++t) {
        x = f.add(x, f.scale(static_cast<std::uint8_t>(c % q), block[t]));
        c /= q;
      }
      span_index_[i][x.value] = code;
    }
  }
}

CodeSpec CodeSpec::with_defaults(std::shared_ptr<const ExtensionField> field, std::size_t interleaving,
                                 std::vector<std::size_t> shot_dims, std::size_t k) {
  std::vector<std::vector<FieldElement>> locs;
  for (std::size_t n : shot_dims) {
    std::vector<FieldElement> block;
    for (std::size_t t = 0; t < n; ++t) block.push_back(field->alpha_pow(static_cast<std::int64_t>(t)));
    locs.push_back(std::move(block));
  }
  auto params = conjugacy_representatives(*field, shot_dims.size());
  return CodeSpec(std::move(field), interleaving, k, std::move(locs), std::move(params));
}

std::vector<std::size_t> CodeSpec::shot_dims() const {
  std::vector<std::size_t> out;
  for (const auto& b : locators_) out.push_back(b.size());
  return out;
}

std::size_t CodeSpec::n_t() const {
  std::size_t n = 0;
  for (const auto& b : locators_) n += b.size();
  return n;
}

std::size_t CodeSpec::ambient_dim(std::size_t shot) const { return locators_.at(shot).size() + s_ * field_->m(); }

std::vector<std::size_t> CodeSpec::ambient_dims() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < shots(); ++i) out.push_back(ambient_dim(i));
  return out;
}

std::optional<std::vector<std::uint8_t>> CodeSpec::locator_coords(std::size_t shot, FieldElement x) const {
  std::int64_t code = span_index_.at(shot).at(x.value);
  if (code < 0) return std::nullopt;
  std::vector<std::uint8_t> out(locators_[shot].size());
  for (auto& d : out) {
    d = static_cast<std::uint8_t>(code % field_->q());
    code /= field_->q();
  }
  return out;
}

void validate_message(const CodeSpec& spec, const MessageVector& f) {
  if (f.size() != spec.interleaving()) throw std::invalid_argument("message needs s components");
  for (const auto& p : f) {
    if (p.degree() >= static_cast<long>(spec.k())) throw std::invalid_argument("message component degree >= k");
  }
}

MessageVector random_message(const CodeSpec& spec, Rng& rng) {
  MessageVector f;
  for (std::size_t l = 0; l < spec.interleaving(); ++l) {
    std::vector<FieldElement> c(spec.k());
    for (auto& x : c) x = FieldElement{static_cast<std::uint32_t>(rng.below(spec.field().order()))};
    f.emplace_back(std::move(c));
  }
  return f;
}

MessageVector message_from_index(const CodeSpec& spec, std::uint64_t index) {
  MessageVector f;
  const std::uint64_t Q = spec.field().order();
  for (std::size_t l = 0; l < spec.interleaving(); ++l) {
    std::vector<FieldElement> c(spec.k());
    for (auto& x : c) {
      x = FieldElement{static_cast<std::uint32_t>(index % Q)};
      index /= Q;
    }
    f.emplace_back(std::move(c));
  }
  return f;
}

LiftedWord encode_lifted(const CodeSpec& spec, const MessageVector& f) {
  validate_message(spec, f);
  const ExtensionField& F = spec.field();
  LiftedWord w;
  for (std::size_t i = 0; i < spec.shots(); ++i) {
    const auto& block = spec.locators()[i];
    FqmMatrix m(block.size(), spec.interleaving() + 1);
    for (std::size_t t = 0; t < block.size(); ++t) {
      m(t, 0) = block[t];
      for (std::size_t l = 0; l < spec.interleaving(); ++l) {
        m(t, l + 1) = gen_op_eval(F, f[l], block[t], spec.params()[i]);
      }
    }
    w.shots.push_back(std::move(m));
  }
  return w;
}

SubspaceTuple encode(const CodeSpec& spec, const MessageVector& f) {
  return to_subspaces(spec, encode_lifted(spec, f));
}

SubspaceTuple to_subspaces(const CodeSpec& spec, const LiftedWord& w) {
  if (w.shots.size() != spec.shots()) throw std::invalid_argument("shot count mismatch");
  const ExtensionField& F = spec.field();
  const unsigned m = F.m();
  SubspaceTuple out;
  for (std::size_t i = 0; i < spec.shots(); ++i) {
    const auto& mat = w.shots[i];
    const std::size_t n = spec.locators()[i].size();
    const std::size_t N = spec.ambient_dim(i);
    if (mat.rows() > 0 && mat.cols() != spec.interleaving() + 1) {
      throw std::invalid_argument("lifted matrix needs s + 1 columns");
    }
    FqMatrix rows(mat.rows(), N, 0);
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      auto c = spec.locator_coords(i, mat(r, 0));
      if (!c) throw std::invalid_argument("first lifted column leaves the locator span");
      for (std::size_t t = 0; t < n; ++t) rows(r, t) = (*c)[t];
      for (std::size_t l = 0; l < spec.interleaving(); ++l) {
        for (unsigned d = 0; d < m; ++d) rows(r, n + l * m + d) = F.coord(mat(r, l + 1), d);
      }
    }
    out.shots.emplace_back(F.q(), N, rows);
  }
  return out;
}

LiftedWord to_lifted(const CodeSpec& spec, const SubspaceTuple& t) {
  if (t.size() != spec.shots()) throw std::invalid_argument("shot count mismatch");
  const ExtensionField& F = spec.field();
  const unsigned m = F.m();
  LiftedWord w;
  for (std::size_t i = 0; i < spec.shots(); ++i) {
    const auto& basis = t.shots[i].basis();
    const auto& block = spec.locators()[i];
    const std::size_t n = block.size();
    if (t.shots[i].ambient_dim() != spec.ambient_dim(i)) throw std::invalid_argument("ambient dimension mismatch");
    FqmMatrix mat(basis.rows(), spec.interleaving() + 1);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      FieldElement xi{};
      for (std::size_t j = 0; j < n; ++j) xi = F.add(xi, F.scale(basis(r, j), block[j]));
      mat(r, 0) = xi;
      std::vector<std::uint8_t> digits(m);
      for (std::size_t l = 0; l < spec.interleaving(); ++l) {
        for (unsigned d = 0; d < m; ++d) digits[d] = basis(r, n + l * m + d);
        mat(r, l + 1) = F.from_coords(digits);
      }
    }
    w.shots.push_back(std::move(mat));
  }
  return w;
}

SubspaceTuple complement(const SubspaceTuple& t) { return dual(t); }

CodeMetrics code_metrics(const CodeSpec& spec) {
  const double m = spec.field().m();
  const double s = static_cast<double>(spec.interleaving());
  const double k = static_cast<double>(spec.k());
  const std::size_t nt = spec.n_t();
  double denom = 0, dual_denom = 0, N = 0;
  for (std::size_t i = 0; i < spec.shots(); ++i) {
    double n = static_cast<double>(spec.locators()[i].size());
    double Ni = static_cast<double>(spec.ambient_dim(i));
    denom += n * Ni;
    dual_denom += (Ni - n) * Ni;
    N += Ni;
  }
  CodeMetrics cm{};
  cm.min_distance = 2 * (nt - spec.k() + 1);
  cm.rate = s * m * k / denom;
  cm.dual_rate = s * m * k / dual_denom;
  cm.normalized_weight = static_cast<double>(nt) / N;
  cm.normalized_distance = static_cast<double>(nt - spec.k() + 1) / static_cast<double>(nt);
  auto dims = spec.shot_dims();
  bool equal = std::all_of(dims.begin(), dims.end(), [&](std::size_t d) { return d == dims[0]; });
  if (equal) {
    const double ell = static_cast<double>(spec.shots());
    const double logk = std::log(kappa(spec.field().q())) / std::log(static_cast<double>(spec.field().q()));
    cm.singleton_rate_bound = ell * (logk + s * m * k) / (static_cast<double>(nt) * N);
  }
  cm.list_region = Region{spec.interleaving() * (nt - spec.k() + 1), true};
  cm.unique_region = Region{spec.interleaving() * (nt - spec.k()), false};
  return cm;
}

}  // namespace lilrs
