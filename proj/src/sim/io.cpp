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

#include "lilrs/sim/io.hpp"

#include <stdexcept>

namespace lilrs::sim {

namespace {

FieldElement element_from_json(const ExtensionField& f, const Json& j) {
  const auto v = j.get<std::uint32_t>();
  if (v >= f.order()) throw std::invalid_argument("field element out of range");
  return FieldElement{v};
}

}  // namespace

Json to_json(const FqmMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).value);
    rows.push_back(std::move(row));
  }
  return rows;
}

FqmMatrix fqm_matrix_from_json(const ExtensionField& f, const Json& j, std::size_t cols) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a list of rows");
  FqmMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw std::invalid_argument("matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = element_from_json(f, j[r][c]);
  }
  return m;
}

Json to_json(const CodeSpec&, const LiftedWord& w) {
  Json shots = Json::array();
  for (const auto& m : w.shots) shots.push_back(to_json(m));
  return Json{{"shots", shots}};
}

LiftedWord lifted_word_from_json(const CodeSpec& spec, const Json& j) {
  const Json& shots = j.contains("shots") ? j.at("shots") : j;
  if (!shots.is_array() || shots.size() != spec.shots()) throw std::invalid_argument("word needs one matrix per shot");
  LiftedWord w;
  for (const auto& m : shots) w.shots.push_back(fqm_matrix_from_json(spec.field(), m, spec.interleaving() + 1));
  // Reject words whose rows are not a basis.
  const auto sub = to_subspaces(spec, w);
  for (std::size_t i = 0; i < spec.shots(); ++i) {
    if (sub.shots[i].dim() != w.shots[i].rows()) throw std::invalid_argument("rows of a shot are not F_q-independent");
  }
  return w;
}

Json to_json(const MessageVector& f) {
  Json out = Json::array();
  for (const auto& p : f) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(x.value);
    out.push_back(std::move(c));
  }
  return out;
}

MessageVector message_from_json(const CodeSpec& spec, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("message must be a list of coefficient lists");
  MessageVector f;
  for (const auto& c : j) {
    std::vector<FieldElement> coeffs;
    for (const auto& x : c) coeffs.push_back(element_from_json(spec.field(), x));
    f.emplace_back(std::move(coeffs));
  }
  validate_message(spec, f);
  return f;
}

Json to_json(const Subspace& v) { return Json{{"ambient", v.ambient_dim()}, {"rows", basis_digit_rows(v)}}; }

Subspace subspace_from_json(unsigned q, const Json& j) {
  return subspace_from_digit_rows(q, j.at("ambient").get<std::size_t>(), j.at("rows").get<std::vector<std::string>>());
}

Json to_json(const ChannelRealization& r) {
  Json kept = Json::array(), errors = Json::array();
  for (const auto& v : r.kept) kept.push_back(to_json(v));
  for (const auto& v : r.errors) errors.push_back(to_json(v));
  return Json{{"insertions", r.insertions}, {"deletions", r.deletions}, {"kept", kept}, {"errors", errors}};
}

ChannelRealization realization_from_json(unsigned q, const Json& j) {
  ChannelRealization r;
  r.insertions = j.at("insertions").get<std::vector<std::size_t>>();
  r.deletions = j.at("deletions").get<std::vector<std::size_t>>();
  for (const auto& v : j.at("kept")) r.kept.push_back(subspace_from_json(q, v));
  for (const auto& v : j.at("errors")) r.errors.push_back(subspace_from_json(q, v));
  if (r.kept.size() != r.errors.size() || r.insertions.size() != r.kept.size() ||
      r.deletions.size() != r.kept.size()) {
    throw std::invalid_argument("realization fields disagree on the shot count");
  }
  return r;
}

Json to_json(const DecodeOutcome& out) {
  Json j{{"outcome", out.tag()}};
  if (out.is_unique()) j["message"] = to_json(out.message());
  if (out.is_list()) {
    Json list = Json::array();
    for (const auto& f : out.messages) list.push_back(to_json(f));
    j["messages"] = list;
    j["list_size"] = out.messages.size();
  }
  return j;
}

Json spec_summary(const CodeSpec& spec) {
  const auto& F = spec.field();
  std::vector<std::vector<std::uint32_t>> locs;
  for (const auto& b : spec.locators()) {
    std::vector<std::uint32_t> v;
    for (auto x : b) v.push_back(x.value);
    locs.push_back(v);
  }
  std::vector<std::uint32_t> params;
  for (auto a : spec.params()) params.push_back(a.value);
  return Json{{"q", F.q()},         {"m", F.m()},
              {"r", F.r()},         {"modulus", F.modulus()},
              {"s", spec.interleaving()}, {"shots", spec.shot_dims()},
              {"k", spec.k()},      {"locators", locs},
              {"params", params}};
}

}  // namespace lilrs::sim
