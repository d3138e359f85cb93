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

#include "lilrs/sim/stats.hpp"

#include <stdexcept>

#include <boost/math/distributions/beta.hpp>

namespace lilrs::sim {

Interval clopper_pearson(std::uint64_t failures, std::uint64_t trials, double confidence) {
  if (trials == 0) throw std::invalid_argument("interval needs at least one trial");
  if (failures > trials) throw std::invalid_argument("more failures than trials");
  const double alpha = 1.0 - confidence;
  const double x = static_cast<double>(failures);
  const double n = static_cast<double>(trials);
  Interval iv{0.0, 1.0};
  if (failures > 0) iv.low = boost::math::quantile(boost::math::beta_distribution<>(x, n - x + 1), alpha / 2);
  if (failures < trials) iv.high = boost::math::quantile(boost::math::beta_distribution<>(x + 1, n - x), 1 - alpha / 2);
  return iv;
}

}  // namespace lilrs::sim
