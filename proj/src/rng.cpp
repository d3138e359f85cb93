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

#include "lilrs/rng.hpp"

#include <stdexcept>

namespace lilrs {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t rem = (~std::uint64_t{0} % n + 1) % n;  // 2^64 mod n
  if (rem == 0) return engine_() % n;
  const std::uint64_t limit = std::uint64_t{0} - rem;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

BigInt Rng::below(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("empty range");
  if (n <= BigInt(~std::uint64_t{0})) return BigInt(below(static_cast<std::uint64_t>(n)));
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  for (;;) {
    BigInt x = 0;
    unsigned have = 0;
    while (have < bits) {
      x <<= 64;
      x |= BigInt(engine_());
      have += 64;
    }
    x >>= (have - bits);
    if (x < n) return x;
  }
}

}  // namespace lilrs
