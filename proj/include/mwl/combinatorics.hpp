// Copyright 2026 The Authors.
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

// Colexicographic ranking of fixed-size subsets of {0, ..., 27}, encoded
// as bitmasks (bit i set <=> pair index i + 1 present).

#ifndef MWL_COMBINATORICS_HPP_
#define MWL_COMBINATORICS_HPP_

#include <array>
#include <bit>
#include <cstdint>

namespace mwl {

using SubsetMask = std::uint32_t;

inline constexpr int kMaxGround = 32;

namespace detail {
constexpr std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1>
MakeBinomials() {
  std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> c{};
  for (int n = 0; n <= kMaxGround; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}
inline constexpr auto kBinomials = MakeBinomials();
}  // namespace detail

// C(n, k), zero when k > n or either argument is negative.
constexpr std::uint64_t Binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > kMaxGround) return 0;
  return detail::kBinomials[n][k];
}

// sum_i C(c_i, i + 1) over the elements c_0 < c_1 < ... of the subset.
constexpr std::uint64_t ColexRank(SubsetMask mask) {
  std::uint64_t rank = 0;
  int i = 1;
  while (mask != 0) {
    const int c = std::countr_zero(mask);
    rank += Binomial(c, i++);
    mask &= mask - 1;
  }
  return rank;
}

// Inverse of ColexRank for subsets of size k.
constexpr SubsetMask ColexUnrank(std::uint64_t rank, int k) {
  SubsetMask mask = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (Binomial(c + 1, i) <= rank) ++c;
    rank -= Binomial(c, i);
    mask |= SubsetMask{1} << c;
  }
  return mask;
}

// Next subset of the same size in colex order (Gosper's hack).
constexpr SubsetMask NextColex(SubsetMask mask) {
  const SubsetMask low = mask & (~mask + 1);
  const SubsetMask ripple = mask + low;
  return ripple | (((mask ^ ripple) >> 2) / low);
}

}  // namespace mwl

#endif  // MWL_COMBINATORICS_HPP_
