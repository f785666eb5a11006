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

#include "mwl/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace mwl {
namespace {

std::int64_t InverseMod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

RankOracle::RankOracle(Field field) : field_(field) {
  for (const auto& e : EnumeratePairs()) {
    for (int c = 0; c < kAmbientDim; ++c) ambient_[e.index.bit()][c] = e.representative.coords()[c];
    const auto& x = PairCoordinates(e.index);
    for (int c = 0; c < kLatticeRank; ++c) {
      std::int64_t v = 0;
      if (!field_.is_rational()) {
        const std::int64_t p = field_.characteristic();
        v = ((x[c] % p) + p) % p;
      } else {
        v = x[c];
      }
      reduced_[e.index.bit()][c] = v;
    }
  }
}

int RankOracle::Rank(SubsetMask mask) const {
  return field_.is_rational() ? RankRational(mask) : RankModP(mask);
}

int RankOracle::RankRational(SubsetMask mask) const {
  std::array<std::array<std::int64_t, kAmbientDim>, kPairCount> a;
  int rows = 0;
  for (SubsetMask m = mask; m != 0; m &= m - 1) a[rows++] = ambient_[std::countr_zero(m)];
  std::int64_t prev = 1;
  int rank = 0;
  for (int col = 0; col < kAmbientDim && rank < rows; ++col) {
    int pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < kAmbientDim; ++j) {
        const std::int64_t num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        assert(num % prev == 0);
        a[i][j] = num / prev;
        assert(std::llabs(a[i][j]) <= 331776);  // 24^4
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

int RankOracle::RankModP(SubsetMask mask) const {
  const std::int64_t p = field_.characteristic();
  std::array<std::array<std::int64_t, kLatticeRank>, kPairCount> a;
  int rows = 0;
  for (SubsetMask m = mask; m != 0; m &= m - 1) a[rows++] = reduced_[std::countr_zero(m)];
  int rank = 0;
  for (int col = 0; col < kLatticeRank && rank < rows; ++col) {
    int pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = InverseMod(a[rank][col], p);
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const std::int64_t f = a[i][col] * inv % p;
      for (int j = col; j < kLatticeRank; ++j) {
        a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

SubsetMask MaskOf(std::span<const PairIndex> subset) {
  SubsetMask mask = 0;
  for (const PairIndex& i : subset) mask |= SubsetMask{1} << i.bit();
  return mask;
}

std::vector<PairIndex> IndicesOf(SubsetMask mask) {
  std::vector<PairIndex> out;
  for (; mask != 0; mask &= mask - 1) out.emplace_back(std::countr_zero(mask) + 1);
  return out;
}

GroundSet::GroundSet(std::vector<PairIndex> elements, Field field)
    : elements_(std::move(elements)), field_(field) {
  for (const PairIndex& i : elements_) {
    const SubsetMask bit = SubsetMask{1} << i.bit();
    if (mask_ & bit) {
      throw std::invalid_argument("duplicate pair index " + std::to_string(i.value()));
    }
    mask_ |= bit;
  }
}

MatroidStructure::MatroidStructure(GroundSet ground)
    : ground_(std::move(ground)), oracle_(ground_.field()) {}

SubsetMask MatroidStructure::CheckedMask(std::span<const PairIndex> s) const {
  SubsetMask mask = 0;
  for (const PairIndex& i : s) {
    const SubsetMask bit = SubsetMask{1} << i.bit();
    if (!(ground_.mask() & bit)) {
      throw std::invalid_argument("pair index " + std::to_string(i.value()) +
                                  " is not in the ground set");
    }
    if (mask & bit) {
      throw std::invalid_argument("duplicate pair index " + std::to_string(i.value()));
    }
    mask |= bit;
  }
  return mask;
}

bool MatroidStructure::IsIndependent(std::span<const PairIndex> s) const {
  return oracle_.IsIndependent(CheckedMask(s));
}

int MatroidStructure::Rank(std::span<const PairIndex> s) const {
  return oracle_.Rank(CheckedMask(s));
}

bool MatroidStructure::IsCircuit(std::span<const PairIndex> s) const {
  const SubsetMask mask = CheckedMask(s);
  if (mask == 0 || oracle_.IsIndependent(mask)) return false;
  for (SubsetMask m = mask; m != 0; m &= m - 1) {
    if (!oracle_.IsIndependent(mask & ~(m & (~m + 1)))) return false;
  }
  return true;
}

std::vector<std::vector<PairIndex>> MatroidStructure::Circuits(
    std::span<const PairIndex> within) const {
  if (within.size() > kMaxCircuitSearch) {
    throw std::length_error("circuit search is limited to 20 elements");
  }
  const SubsetMask full = CheckedMask(within);
  const std::vector<PairIndex> elems = IndicesOf(full);
  const std::size_t n = elems.size();
  // dependent[local] over all local submasks, filled in increasing order so
  // every child is known before its parent.
  std::vector<char> dependent(std::size_t{1} << n, 0);
  std::vector<SubsetMask> circuits;
  for (std::size_t local = 1; local < dependent.size(); ++local) {
    SubsetMask global = 0;
    bool child_dependent = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (!(local >> b & 1)) continue;
      global |= SubsetMask{1} << elems[b].bit();
      child_dependent |= dependent[local & ~(std::size_t{1} << b)] != 0;
    }
    if (child_dependent) {
      dependent[local] = 1;
    } else if (!oracle_.IsIndependent(global)) {
      dependent[local] = 1;
      circuits.push_back(global);
    }
  }
  std::sort(circuits.begin(), circuits.end(), [](SubsetMask a, SubsetMask b) {
    const int wa = std::popcount(a), wb = std::popcount(b);
    return wa != wb ? wa < wb : ColexRank(a) < ColexRank(b);
  });
  std::vector<std::vector<PairIndex>> out;
  for (SubsetMask c : circuits) {
    out.push_back(IndicesOf(c));
    if (!IsCircuit(out.back())) throw std::logic_error("circuit failed minimality recheck");
  }
  return out;
}

IsoClassification BruteForceIsoClasses(int r, const Field& field) {
  if (r < 1 || r > kMaxIsoLevel) {
    throw std::length_error("brute-force matroid classification needs 1 <= r <= 6");
  }
  const RankOracle oracle(field);
  const std::size_t locals = std::size_t{1} << r;

  // image[perm][S] = relabeled local subset.
  std::vector<std::vector<std::uint8_t>> images;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::uint8_t> image(locals);
    for (std::size_t s = 0; s < locals; ++s) {
      std::uint8_t t = 0;
      for (int b = 0; b < r; ++b) {
        if (s >> b & 1) t |= static_cast<std::uint8_t>(1u << perm[b]);
      }
      image[s] = t;
    }
    images.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto canonical = [&](std::uint64_t family) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& image : images) {
      std::uint64_t relabeled = 0;
      for (std::size_t s = 0; s < locals; ++s) {
        if (family >> s & 1) relabeled |= std::uint64_t{1} << image[s];
      }
      best = std::min(best, relabeled);
    }
    return best;
  };

  const std::uint64_t total = Binomial(kPairCount, r);
  std::vector<std::uint64_t> canon_of(total);
  std::unordered_map<std::uint64_t, std::uint64_t> cache;
  SubsetMask mask = ColexUnrank(0, r);
  for (std::uint64_t rank = 0; rank < total; ++rank, mask = NextColex(mask)) {
    std::array<int, kMaxIsoLevel> bits{};
    int n = 0;
    for (SubsetMask m = mask; m != 0; m &= m - 1) bits[n++] = std::countr_zero(m);
    std::uint64_t family = 0;  // bit S set <=> local subset S dependent
    for (std::size_t s = 1; s < locals; ++s) {
      SubsetMask global = 0;
      for (int b = 0; b < r; ++b) {
        if (s >> b & 1) global |= SubsetMask{1} << bits[b];
      }
      if (!oracle.IsIndependent(global)) family |= std::uint64_t{1} << s;
    }
    auto it = cache.find(family);
    if (it == cache.end()) it = cache.emplace(family, canonical(family)).first;
    canon_of[rank] = it->second;
  }

  std::map<std::uint64_t, std::uint32_t> ids;
  for (const auto& [raw, canon] : cache) ids.emplace(canon, 0);
  std::uint32_t next = 0;
  for (auto& [canon, id] : ids) id = next++;

  IsoClassification out;
  out.level = r;
  out.class_count = next;
  out.class_of.resize(total);
  for (std::uint64_t i = 0; i < total; ++i) out.class_of[i] = ids.at(canon_of[i]);
  return out;
}

}  // namespace mwl
