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

#include "lilrs/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lilrs/channel.hpp"

namespace lilrs {

std::string to_string(FailureReason r) {
  switch (r) {
    case FailureReason::KernelTooLarge: return "KernelTooLarge";
    case FailureReason::InterpolationDeficient: return "InterpolationDeficient";
    case FailureReason::RootFindingAmbiguous: return "RootFindingAmbiguous";
    case FailureReason::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

DecodeOutcome DecodeOutcome::unique(MessageVector f) {
  DecodeOutcome o;
  o.kind = Kind::Unique;
  o.messages.push_back(std::move(f));
  return o;
}

DecodeOutcome DecodeOutcome::list(std::vector<MessageVector> fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  DecodeOutcome o;
  o.kind = Kind::List;
  o.messages = std::move(fs);
  return o;
}

DecodeOutcome DecodeOutcome::failure(FailureReason r) {
  DecodeOutcome o;
  o.kind = Kind::Failure;
  o.reason = r;
  return o;
}

bool DecodeOutcome::contains(const MessageVector& f) const {
  return std::find(messages.begin(), messages.end(), f) != messages.end();
}

std::string DecodeOutcome::tag() const {
  switch (kind) {
    case Kind::Unique: return "unique";
    case Kind::List: return "list";
    case Kind::Failure: return "failure:" + to_string(reason);
  }
  return "unknown";
}

namespace {

std::vector<FieldElement> concat_column(const LiftedWord& rw, std::size_t col) {
  std::vector<FieldElement> out;
  for (const auto& m : rw.shots)
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m(r, col));
  return out;
}

void check_word(const CodeSpec& spec, const LiftedWord& rw) {
  if (rw.shots.size() != spec.shots()) throw std::invalid_argument("received word has wrong shot count");
  for (const auto& m : rw.shots) {
    if (m.rows() > 0 && m.cols() != spec.interleaving() + 1) {
      throw std::invalid_argument("received basis needs s + 1 columns");
    }
  }
}

FqmMatrix lift_base_matrix(const ExtensionField& F, const FqMatrix& a) {
  FqmMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = F.from_base(a(i, j));
  return out;
}

bool within_list_region(const CodeSpec& spec, ObservedErrors e) {
  return code_metrics(spec).list_region.contains(e.insertions, e.deletions, spec.interleaving());
}

}  // namespace

FqmMatrix build_lo_matrix(const CodeSpec& spec, const LiftedWord& rw, std::size_t deletions) {
  check_word(spec, rw);
  const ExtensionField& F = spec.field();
  const std::size_t nt = spec.n_t();
  if (deletions + spec.k() > nt) throw std::invalid_argument("deletion count leaves fewer than k dimensions");
  const std::size_t top = nt - deletions - 1;
  const std::size_t low = nt - deletions - spec.k();
  const auto part = rw.partition();
  const auto xi = concat_column(rw, 0);
  FqmMatrix L = moore_matrix(F, xi, part, spec.params(), top);
  for (std::size_t l = 1; l <= spec.interleaving(); ++l) {
    const auto u = concat_column(rw, l);
    L = FqmMatrix::vstack(L, moore_matrix(F, u, part, spec.params(), low));
  }
  if (L.cols() == 0) L = FqmMatrix(0, xi.size());
  return L;
}

DecodeOutcome lo_decode(const CodeSpec& spec, const LiftedWord& rw, std::size_t deletions, LoTrace* trace) {
  check_word(spec, rw);
  const ExtensionField& F = spec.field();
  const PrimeField base = F.base();
  const std::size_t nt = spec.n_t();
  const std::size_t nr = rw.total_rows();
  if (deletions + spec.k() > nt || nr + deletions < nt) return DecodeOutcome::failure(FailureReason::Inconsistent);

  const FqmMatrix L = build_lo_matrix(spec, rw, deletions);
  const FqmMatrix kernel = right_kernel(F, L);
  if (trace) {
    *trace = LoTrace{};
    trace->deletions = deletions;
    trace->kernel_dim = kernel.rows();
  }
  if (kernel.rows() > 1) return DecodeOutcome::failure(FailureReason::KernelTooLarge);
  if (kernel.rows() == 0) return DecodeOutcome::failure(FailureReason::Inconsistent);

  const std::vector<FieldElement> h = kernel.row(0);
  if (trace) trace->kernel_vector = h;

  std::vector<std::vector<EvalPoint>> points(spec.interleaving());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < spec.shots(); ++i) {
    const FqmMatrix& U = rw.shots[i];
    const std::size_t ni = U.rows();
    FqmMatrix hi(1, ni);
    for (std::size_t t = 0; t < ni; ++t) hi(0, t) = h[offset + t];
    offset += ni;

    // Column echelon step: pivot columns of the expansion stay, the F_q
    // kernel fills the trailing columns so h^{(i)} T is zero there.
    FqMatrix expansion = expand_column_wise(F, hi);
    FqMatrix reduced = expansion;
    const auto pivots = row_reduce(base, reduced);
    const FqMatrix null = right_kernel(base, expansion);
    FqMatrix T(ni, ni, 0);
    for (std::size_t c = 0; c < pivots.size(); ++c) T(pivots[c], c) = 1;
    for (std::size_t c = 0; c < null.rows(); ++c)
      for (std::size_t r = 0; r < ni; ++r) T(r, pivots.size() + c) = null(c, r);
    auto T_inv = inverse(base, T);
    if (!T_inv) return DecodeOutcome::failure(FailureReason::Inconsistent);
    FqmMatrix transformed = ni == 0 ? U : multiply(F, lift_base_matrix(F, *T_inv), U);

    const std::size_t kept = pivots.size();
    for (std::size_t mu = 0; mu < kept; ++mu) {
      for (std::size_t l = 0; l < spec.interleaving(); ++l) {
        points[l].push_back(EvalPoint{transformed(mu, 0), transformed(mu, l + 1), spec.params()[i]});
      }
    }
    if (trace) {
      trace->kept_ranks.push_back(kept);
      trace->transformed.push_back(std::move(transformed));
    }
  }

  MessageVector f;
  for (std::size_t l = 0; l < spec.interleaving(); ++l) {
    auto p = try_lagrange_interpolate(F, points[l]);
    if (!p || p->degree() >= static_cast<long>(spec.k())) {
      return DecodeOutcome::failure(FailureReason::Inconsistent);
    }
    f.push_back(std::move(*p));
  }
  const SubspaceTuple received = to_subspaces(spec, rw);
  const std::size_t insertions = nr + deletions - nt;
  if (!is_reachable(received, encode(spec, f), insertions, deletions)) {
    return DecodeOutcome::failure(FailureReason::Inconsistent);
  }
  return DecodeOutcome::unique(std::move(f));
}

DecodeOutcome lo_decode(const CodeSpec& spec, const LiftedWord& rw, LoTrace* trace) {
  const std::size_t nt = spec.n_t();
  const std::size_t nr = rw.total_rows();
  const std::size_t first = nr >= nt ? 0 : nt - nr;
  DecodeOutcome last = DecodeOutcome::failure(FailureReason::Inconsistent);
  for (std::size_t d = first; d + spec.k() <= nt; ++d) {
    LoTrace local;
    DecodeOutcome out = lo_decode(spec, rw, d, &local);
    if (local.kernel_dim == 0) continue;
    if (trace) *trace = local;
    if (out.is_unique() || out.reason == FailureReason::KernelTooLarge) return out;
    last = out;
  }
  return last;
}

FqmMatrix build_interpolation_matrix(const CodeSpec& spec, const LiftedWord& rw, std::size_t degree) {
  check_word(spec, rw);
  const ExtensionField& F = spec.field();
  const auto part = rw.partition();
  const std::size_t nr = rw.total_rows();
  const std::size_t ucols = degree + 1 > spec.k() ? degree + 1 - spec.k() : 0;
  FqmMatrix R = moore_matrix(F, concat_column(rw, 0), part, spec.params(), degree).transpose();
  if (R.rows() == 0) R = FqmMatrix(nr, 0);
  for (std::size_t l = 1; l <= spec.interleaving(); ++l) {
    if (ucols == 0) break;
    R = FqmMatrix::hstack(R, moore_matrix(F, concat_column(rw, l), part, spec.params(), ucols).transpose());
  }
  return R;
}

InterpolationBasis solve_interpolation(const CodeSpec& spec, const LiftedWord& rw, std::size_t degree) {
  const ExtensionField& F = spec.field();
  const FqmMatrix R = build_interpolation_matrix(spec, rw, degree);
  const std::size_t ucols = degree + 1 > spec.k() ? degree + 1 - spec.k() : 0;
  const FqmMatrix kernel = right_kernel(F, R);
  InterpolationBasis basis;
  basis.degree = degree;
  basis.k = spec.k();
  for (std::size_t b = 0; b < kernel.rows(); ++b) {
    InterpolationPolynomial Q;
    const auto v = kernel.row(b);
    Q.q0 = SkewPolynomial(std::vector<FieldElement>(v.begin(), v.begin() + static_cast<long>(degree)));
    for (std::size_t l = 0; l < spec.interleaving(); ++l) {
      auto start = v.begin() + static_cast<long>(degree + l * ucols);
      Q.qs.emplace_back(std::vector<FieldElement>(start, start + static_cast<long>(ucols)));
    }
    basis.members.push_back(std::move(Q));
  }
  return basis;
}

FieldElement evaluate_interpolation(const CodeSpec& spec, const InterpolationPolynomial& q, std::size_t shot,
                                    std::span<const FieldElement> row) {
  const ExtensionField& F = spec.field();
  const FieldElement a = spec.params().at(shot);
  FieldElement acc = gen_op_eval(F, q.q0, row[0], a);
  for (std::size_t l = 0; l < q.qs.size(); ++l) acc = F.add(acc, gen_op_eval(F, q.qs[l], row[l + 1], a));
  return acc;
}

SkewPolynomial compose_root_polynomial(const ExtensionField& f, const InterpolationPolynomial& q,
                                       const MessageVector& msg) {
  SkewPolynomial acc = q.q0;
  for (std::size_t l = 0; l < q.qs.size(); ++l) acc = skew_add(f, acc, skew_mul(f, q.qs[l], msg.at(l)));
  return acc;
}

RootFindingSystem build_root_finding_system(const CodeSpec& spec, const InterpolationBasis& basis) {
  const ExtensionField& F = spec.field();
  const std::size_t s = spec.interleaving();
  const std::size_t k = spec.k();
  const std::size_t D = basis.degree;
  const std::size_t dI = basis.size();
  // Unknown (l, j) sits at column j * s + l and stands for sigma^{-j}(f_{l,j}).
  RootFindingSystem sys{FqmMatrix(D * dI, s * k), std::vector<FieldElement>(D * dI)};
  for (std::size_t t = 0; t < D; ++t) {
    const auto shift = -static_cast<std::int64_t>(t);
    for (std::size_t b = 0; b < dI; ++b) {
      const auto& Q = basis.members[b];
      const std::size_t row = t * dI + b;
      sys.rhs[row] = F.neg(F.sigma(Q.q0.coeff(t), shift));
      for (std::size_t j = 0; j < k && j <= t; ++j) {
        const std::size_t i = t - j;
        for (std::size_t l = 0; l < s; ++l) {
          sys.matrix(row, j * s + l) = F.sigma(Q.qs[l].coeff(i), shift);
        }
      }
    }
  }
  return sys;
}

namespace {

MessageVector unknowns_to_message(const CodeSpec& spec, const std::vector<FieldElement>& g) {
  const ExtensionField& F = spec.field();
  const std::size_t s = spec.interleaving();
  MessageVector f;
  for (std::size_t l = 0; l < s; ++l) {
    std::vector<FieldElement> c(spec.k());
    for (std::size_t j = 0; j < spec.k(); ++j) c[j] = F.sigma(g[j * s + l], static_cast<std::int64_t>(j));
    f.emplace_back(std::move(c));
  }
  return f;
}

bool annihilates_all(const ExtensionField& F, const InterpolationBasis& basis, const MessageVector& f) {
  for (const auto& Q : basis.members) {
    if (!compose_root_polynomial(F, Q, f).is_zero()) return false;
  }
  return true;
}

}  // namespace

DecodeOutcome root_find(const CodeSpec& spec, const InterpolationBasis& basis, RootFindingOptions opts) {
  const ExtensionField& F = spec.field();
  if (basis.size() == 0) return DecodeOutcome::failure(FailureReason::InterpolationDeficient);
  const RootFindingSystem sys = build_root_finding_system(spec, basis);
  auto sol = solve_affine(F, sys.matrix, sys.rhs);
  if (!sol) return DecodeOutcome::failure(FailureReason::Inconsistent);

  const std::size_t free = sol->kernel.rows();
  double count = std::pow(static_cast<double>(F.order()), static_cast<double>(free));
  if (count > static_cast<double>(opts.max_solutions)) {
    return DecodeOutcome::failure(FailureReason::RootFindingAmbiguous);
  }
  std::vector<MessageVector> found;
  std::vector<std::uint32_t> digits(free, 0);
  for (;;) {
    std::vector<FieldElement> g = sol->particular;
    for (std::size_t c = 0; c < free; ++c) {
      const FieldElement lambda{digits[c]};
      if (F.is_zero(lambda)) continue;
      for (std::size_t j = 0; j < g.size(); ++j) g[j] = F.add(g[j], F.mul(lambda, sol->kernel(c, j)));
    }
    MessageVector f = unknowns_to_message(spec, g);
    if (annihilates_all(F, basis, f)) found.push_back(std::move(f));
    std::size_t c = 0;
    while (c < free && ++digits[c] == F.order()) digits[c++] = 0;
    if (c == free) break;
  }
  if (found.empty()) return DecodeOutcome::failure(FailureReason::Inconsistent);
  return DecodeOutcome::list(std::move(found));
}

std::size_t list_decoding_degree(const CodeSpec& spec, std::size_t received_dim) {
  const std::size_t s = spec.interleaving();
  const std::size_t num = received_dim + s * (spec.k() - 1) + 1;
  return (num + s) / (s + 1);
}

std::size_t unique_decoding_degree(const CodeSpec& spec, std::size_t received_dim) {
  const std::size_t s = spec.interleaving();
  const std::size_t num = received_dim + s * spec.k();
  return (num + s) / (s + 1);
}

ObservedErrors observed_errors(const SubspaceTuple& received, const SubspaceTuple& codeword) {
  std::size_t common = intersect(received, codeword).sum_dim();
  return ObservedErrors{received.sum_dim() - common, codeword.sum_dim() - common};
}

DecodeOutcome list_decode(const CodeSpec& spec, const LiftedWord& rw, RootFindingOptions opts) {
  const std::size_t D = list_decoding_degree(spec, rw.total_rows());
  const InterpolationBasis basis = solve_interpolation(spec, rw, D);
  DecodeOutcome roots = root_find(spec, basis, opts);
  if (roots.is_failure()) return roots;
  const SubspaceTuple received = to_subspaces(spec, rw);
  std::vector<MessageVector> kept;
  for (auto& f : roots.messages) {
    if (within_list_region(spec, observed_errors(received, encode(spec, f)))) kept.push_back(std::move(f));
  }
  return DecodeOutcome::list(std::move(kept));
}

DecodeOutcome unique_decode_at_degree(const CodeSpec& spec, const LiftedWord& rw, std::size_t degree) {
  const ExtensionField& F = spec.field();
  const InterpolationBasis basis = solve_interpolation(spec, rw, degree);
  if (basis.size() < spec.interleaving()) return DecodeOutcome::failure(FailureReason::InterpolationDeficient);
  const RootFindingSystem sys = build_root_finding_system(spec, basis);
  auto sol = solve_affine(F, sys.matrix, sys.rhs);
  if (sol && sol->kernel.rows() > 0) return DecodeOutcome::failure(FailureReason::RootFindingAmbiguous);
  if (!sol) {
    if (rank(F, sys.matrix) < sys.matrix.cols()) return DecodeOutcome::failure(FailureReason::RootFindingAmbiguous);
    return DecodeOutcome::failure(FailureReason::Inconsistent);
  }
  return DecodeOutcome::unique(unknowns_to_message(spec, sol->particular));
}

DecodeOutcome unique_decode(const CodeSpec& spec, const LiftedWord& rw, UniqueDecodeOptions opts) {
  const std::size_t nr = rw.total_rows();
  const std::size_t nt = spec.n_t();
  const std::size_t Du = unique_decoding_degree(spec, nr);
  DecodeOutcome first = unique_decode_at_degree(spec, rw, Du);
  if (first.is_unique() || !opts.degree_fallback) return first;

  // D = n_t - delta, smallest degree first; every degree up to the true
  // n_t - delta keeps the transmitted message among the roots.
  const Region region = code_metrics(spec).unique_region;
  const SubspaceTuple received = to_subspaces(spec, rw);
  const std::size_t delta_min = nr >= nt ? 0 : nt - nr;
  for (std::size_t delta = nt - spec.k(); delta + 1 > delta_min; --delta) {
    const std::size_t D = nt - delta;
    const std::size_t gamma = nr + delta - nt;
    if (D > Du && region.contains(gamma, delta, spec.interleaving())) {
      DecodeOutcome out = unique_decode_at_degree(spec, rw, D);
      if (out.is_unique()) {
        const ObservedErrors e = observed_errors(received, encode(spec, out.message()));
        if (e.insertions == gamma && e.deletions == delta) return out;
      }
    }
    if (delta == 0) break;
  }
  return first;
}

ComplementaryResult complementary_decode(const CodeSpec& spec, const SubspaceTuple& received_dual,
                                         InnerDecoder inner) {
  const SubspaceTuple received = dual(received_dual);
  const LiftedWord rw = to_lifted(spec, received);
  ComplementaryResult res;
  switch (inner) {
    case InnerDecoder::Lo: res.outcome = lo_decode(spec, rw); break;
    case InnerDecoder::List: res.outcome = list_decode(spec, rw); break;
    case InnerDecoder::Unique: res.outcome = unique_decode(spec, rw); break;
  }
  if (res.outcome.is_unique() || (res.outcome.is_list() && res.outcome.messages.size() == 1)) {
    res.dual_codeword = complement(encode(spec, res.outcome.message()));
  }
  return res;
}

namespace {

void require_unique_region(const CodeSpec& spec, std::size_t insertions, std::size_t deletions) {
  if (!code_metrics(spec).unique_region.contains(insertions, deletions, spec.interleaving())) {
    throw std::invalid_argument("(insertions, deletions) lies outside the unique decoding region");
  }
}

}  // namespace

double strict_failure_bound(const CodeSpec& spec, std::size_t insertions, std::size_t deletions) {
  require_unique_region(spec, insertions, deletions);
  const double q = spec.field().q();
  const double m = spec.field().m();
  const double gmax = static_cast<double>(spec.interleaving() * (spec.n_t() - deletions - spec.k()));
  const double ell = static_cast<double>(spec.shots());
  return std::pow(kappa(spec.field().q()), ell + 1) * std::pow(q, -m * (gmax - static_cast<double>(insertions) + 1));
}

double heuristic_failure_bound(const CodeSpec& spec, std::size_t insertions, std::size_t deletions) {
  require_unique_region(spec, insertions, deletions);
  const double q = spec.field().q();
  const double m = spec.field().m();
  const double s = static_cast<double>(spec.interleaving());
  const std::size_t nr = spec.n_t() - deletions + insertions;
  const double D = static_cast<double>(unique_decoding_degree(spec, nr));
  const double k = static_cast<double>(spec.k());
  return kappa(spec.field().q()) * std::pow(q, -m * (s * (D - k) - static_cast<double>(insertions) + 1));
}

}  // namespace lilrs
