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

#include "lilrs/channel.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lilrs {

namespace {

struct Shape {
  std::size_t ambient;
  std::size_t dim;
};

Shape uniform_shape(const SubspaceTuple& t) {
  if (t.size() == 0) throw std::invalid_argument("empty subspace tuple");
  Shape s{t.shots[0].ambient_dim(), t.shots[0].dim()};
  for (const auto& v : t.shots) {
    if (v.ambient_dim() != s.ambient || v.dim() != s.dim) {
      throw std::invalid_argument("channel input needs equal per-shot dimensions");
    }
  }
  return s;
}

FqMatrix random_matrix(unsigned q, std::size_t rows, std::size_t cols, Rng& rng) {
  FqMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.element(q);
  return m;
}

// Uniform subspace of `v` with the given dimension.
Subspace random_subspace_of(const Subspace& v, std::size_t dim, Rng& rng) {
  if (dim == v.dim()) return v;
  const PrimeField f = v.field();
  for (;;) {
    FqMatrix coeffs = random_matrix(v.q(), dim, v.dim(), rng);
    if (rank(f, coeffs) != dim) continue;
    return Subspace(v.q(), v.ambient_dim(), multiply(f, coeffs, v.basis()));
  }
}

// Uniform subspace of the given dimension meeting `v` only in zero.
Subspace random_complement_part(const Subspace& v, std::size_t dim, Rng& rng) {
  if (dim == 0) return Subspace::zero(v.q(), v.ambient_dim());
  const PrimeField f = v.field();
  for (;;) {
    FqMatrix e = random_matrix(v.q(), dim, v.ambient_dim(), rng);
    if (rank(f, FqMatrix::vstack(v.basis(), e)) != v.dim() + dim) continue;
    return Subspace(v.q(), v.ambient_dim(), e);
  }
}

}  // namespace

std::string ChannelRealization::key() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    os << insertions[i] << '/' << deletions[i] << ':';
    for (const auto& r : basis_digit_rows(kept[i])) os << r << ',';
    os << '|';
    for (const auto& r : basis_digit_rows(errors[i])) os << r << ',';
    os << ';';
  }
  return os.str();
}

BigInt num_subspace_tuples(std::size_t ambient, std::size_t dim, std::size_t shots, unsigned q) {
  if (shots == 0) return dim == 0 ? 1 : 0;
  if (dim > ambient * shots) return 0;
  if (shots == 1) return gaussian_binomial(static_cast<unsigned>(ambient), static_cast<unsigned>(dim), q);
  BigInt total = 0;
  const std::size_t lo = dim > (shots - 1) * ambient ? dim - (shots - 1) * ambient : 0;
  for (std::size_t g = lo; g <= std::min(ambient, dim); ++g) {
    total += gaussian_binomial(static_cast<unsigned>(ambient), static_cast<unsigned>(g), q) *
             num_subspace_tuples(ambient, dim - g, shots - 1, q);
  }
  return total;
}

std::vector<std::size_t> draw_dimension_partition(std::size_t ambient, std::size_t dim,
                                                  std::size_t shots, unsigned q, Rng& rng) {
  const BigInt total = num_subspace_tuples(ambient, dim, shots, q);
  if (total == 0) throw std::invalid_argument("no subspace tuple has the requested sum-dimension");
  // Enumerative decoding of a uniform index in [1, total].
  BigInt index = rng.below(total) + 1;
  std::vector<std::size_t> parts;
  std::size_t remaining = dim;
  for (std::size_t i = 1; i <= shots; ++i) {
    const std::size_t rest = shots - i;
    const std::size_t lo = remaining > rest * ambient ? remaining - rest * ambient : 0;
    const std::size_t hi = std::min(ambient, remaining);
    std::size_t chosen = hi;
    for (std::size_t g = lo; g <= hi; ++g) {
      BigInt weight = gaussian_binomial(static_cast<unsigned>(ambient), static_cast<unsigned>(g), q) *
                      num_subspace_tuples(ambient, remaining - g, rest, q);
      if (index <= weight) {
        chosen = g;
        break;
      }
      index -= weight;
    }
    parts.push_back(chosen);
    remaining -= chosen;
  }
  return parts;
}

ChannelOutput transmit(const SubspaceTuple& sent, ChannelParams params, Rng& rng) {
  const Shape shape = uniform_shape(sent);
  const unsigned q = sent.shots[0].q();
  const std::size_t shots = sent.size();
  if (params.deletions > shots * shape.dim ||
      params.insertions > shots * (shape.ambient - shape.dim)) {
    throw std::invalid_argument("infeasible insertion/deletion counts for these dimensions");
  }
  ChannelRealization r;
  r.insertions = draw_dimension_partition(shape.ambient - shape.dim, params.insertions, shots, q, rng);
  r.deletions = draw_dimension_partition(shape.dim, params.deletions, shots, q, rng);
  for (std::size_t i = 0; i < shots; ++i) {
    r.kept.push_back(random_subspace_of(sent.shots[i], shape.dim - r.deletions[i], rng));
    r.errors.push_back(random_complement_part(sent.shots[i], r.insertions[i], rng));
  }
  ChannelOutput out;
  out.received = apply_realization(r);
  out.realization = std::move(r);
  return out;
}

SubspaceTuple apply_realization(const ChannelRealization& r) {
  SubspaceTuple out;
  for (std::size_t i = 0; i < r.kept.size(); ++i) out.shots.push_back(sum_space(r.kept[i], r.errors[i]));
  return out;
}

bool is_reachable(const SubspaceTuple& received, const SubspaceTuple& sent, std::size_t insertions,
                  std::size_t deletions) {
  if (received.size() != sent.size()) throw std::invalid_argument("tuples have different shot counts");
  std::size_t gamma = 0, delta = 0;
  for (std::size_t i = 0; i < sent.size(); ++i) {
    std::size_t common = intersect(received.shots[i], sent.shots[i]).dim();
    delta += sent.shots[i].dim() - common;
    gamma += received.shots[i].dim() - common;
  }
  return gamma == insertions && delta == deletions;
}

std::vector<Subspace> all_subspaces(unsigned q, std::size_t ambient, std::size_t dim) {
  std::vector<Subspace> out;
  if (dim > ambient) return out;
  if (dim == 0) {
    out.push_back(Subspace::zero(q, ambient));
    return out;
  }
  // Walk pivot sets, then fill the free entries of each reduced echelon form.
  std::vector<std::size_t> pivots(dim);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t row, std::size_t start) {
    if (row == dim) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = pivots[r] + 1; c < ambient; ++c) {
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
        }
      }
      std::vector<std::uint8_t> digits(free.size(), 0);
      for (;;) {
        FqMatrix m(dim, ambient, 0);
        for (std::size_t r = 0; r < dim; ++r) m(r, pivots[r]) = 1;
        for (std::size_t t = 0; t < free.size(); ++t) m(free[t].first, free[t].second) = digits[t];
        out.emplace_back(q, ambient, m);
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
        if (t == digits.size()) break;
      }
      return;
    }
    for (std::size_t c = start; c + (dim - row) <= ambient; ++c) {
      pivots[row] = c;
      choose(row + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> compositions(std::size_t total, std::size_t parts, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (cur.size() + 1 == parts) {
      if (left <= cap) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (std::size_t v = 0; v <= std::min(cap, left); ++v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  rec(total);
  return out;
}

}  // namespace

std::vector<ChannelRealization> enumerate_realizations(const SubspaceTuple& sent, ChannelParams params) {
  const Shape shape = uniform_shape(sent);
  const unsigned q = sent.shots[0].q();
  const std::size_t shots = sent.size();
  std::vector<ChannelRealization> out;

  auto kept_options = [&](std::size_t i, std::size_t del) {
    std::vector<Subspace> opts;
    const PrimeField f{q};
    for (const auto& c : all_subspaces(q, shape.dim, shape.dim - del)) {
      if (c.dim() == 0) {
        opts.push_back(Subspace::zero(q, shape.ambient));
      } else {
        opts.emplace_back(q, shape.ambient, multiply(f, c.basis(), sent.shots[i].basis()));
      }
    }
    return opts;
  };
  auto error_options = [&](std::size_t i, std::size_t ins) {
    std::vector<Subspace> opts;
    for (auto& e : all_subspaces(q, shape.ambient, ins)) {
      if (intersect(e, sent.shots[i]).dim() == 0) opts.push_back(std::move(e));
    }
    return opts;
  };

  for (const auto& gam : compositions(params.insertions, shots, shape.ambient - shape.dim)) {
    for (const auto& del : compositions(params.deletions, shots, shape.dim)) {
      std::vector<std::vector<Subspace>> kept(shots), errs(shots);
      for (std::size_t i = 0; i < shots; ++i) {
        kept[i] = kept_options(i, del[i]);
        errs[i] = error_options(i, gam[i]);
      }
      ChannelRealization r;
      r.insertions = gam;
      r.deletions = del;
      r.kept.resize(shots);
      r.errors.resize(shots);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == shots) {
          out.push_back(r);
          return;
        }
        for (const auto& k : kept[i]) {
          for (const auto& e : errs[i]) {
            r.kept[i] = k;
            r.errors[i] = e;
            rec(i + 1);
          }
        }
      };
      rec(0);
    }
  }
  return out;
}

}  // namespace lilrs
