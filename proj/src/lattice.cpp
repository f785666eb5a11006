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

#include "mwl/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mwl {

PairIndex::PairIndex(int value) : value_(value) {
  if (value < 1 || value > kPairCount) {
    throw std::out_of_range("pair index must be in 1..28, got " + std::to_string(value));
  }
}

MinimalVector::MinimalVector(const Coords& coords) : coords_(coords) {
  Coords sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  static constexpr Coords kPositive = {-3, -3, 1, 1, 1, 1, 1, 1};
  static constexpr Coords kNegative = {-1, -1, -1, -1, -1, -1, 3, 3};
  if (sorted != kPositive && sorted != kNegative) {
    throw std::invalid_argument("not a minimal vector: " + ToString());
  }
}

MinimalVector MinimalVector::operator-() const {
  Coords neg;
  std::transform(coords_.begin(), coords_.end(), neg.begin(), [](int c) { return -c; });
  return MinimalVector(neg);
}

std::string MinimalVector::ToString() const {
  std::string out = "(";
  for (int i = 0; i < kAmbientDim; ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")/4";
}

const std::vector<PairEntry>& EnumeratePairs() {
  static const std::vector<PairEntry> pairs = [] {
    MinimalVector::Coords base = {-3, -3, 1, 1, 1, 1, 1, 1};
    std::vector<MinimalVector::Coords> perms;
    do {
      perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(perms.begin(), perms.end(), std::greater<>());
    std::vector<PairEntry> out;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      out.push_back({PairIndex(static_cast<int>(i) + 1), MinimalVector(perms[i])});
    }
    return out;
  }();
  return pairs;
}

const MinimalVector& Representative(PairIndex i) {
  return EnumeratePairs()[i.value() - 1].representative;
}

PairIndex LookupPair(const MinimalVector& v) {
  const bool positive = std::count(v.coords().begin(), v.coords().end(), 1) == 6;
  const MinimalVector rep = positive ? v : -v;
  for (const auto& entry : EnumeratePairs()) {
    if (entry.representative == rep) return entry.index;
  }
  throw std::logic_error("minimal vector missing from pair table");
}

Rational HeightPairing(const MinimalVector& v, const MinimalVector& w) {
  long dot = 0;
  for (int i = 0; i < kAmbientDim; ++i) dot += long{v.coords()[i]} * w.coords()[i];
  Rational h(dot, 16);
  h.canonicalize();
  return h;
}

LatticeBasis::LatticeBasis(IntMatrix hnf_rows) : basis_(std::move(hnf_rows)) {
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t c = 0;
    while (c < basis_.cols() && basis_(r, c) == 0) ++c;
    if (c == basis_.cols()) throw std::invalid_argument("zero row in basis");
    if (!pivots_.empty() && c <= pivots_.back()) {
      throw std::invalid_argument("basis rows are not in echelon form");
    }
    pivots_.push_back(c);
  }
}

std::optional<std::vector<Integer>> LatticeBasis::Coordinates(
    std::span<const Integer> v) const {
  if (v.size() != basis_.cols()) throw std::invalid_argument("dimension mismatch");
  std::vector<Integer> residual(v.begin(), v.end());
  std::vector<Integer> x(basis_.rows());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Integer& pivot = basis_(r, pivots_[r]);
    if (residual[pivots_[r]] % pivot != 0) return std::nullopt;
    x[r] = residual[pivots_[r]] / pivot;
    for (std::size_t c = 0; c < basis_.cols(); ++c) residual[c] -= x[r] * basis_(r, c);
  }
  for (const auto& e : residual) {
    if (e != 0) return std::nullopt;
  }
  return x;
}

std::array<std::int64_t, kLatticeRank> LatticeBasis::Coordinates(
    const MinimalVector& v) const {
  std::vector<Integer> amb(v.coords().begin(), v.coords().end());
  auto x = Coordinates(amb);
  if (!x || x->size() != kLatticeRank) {
    throw std::logic_error("minimal vector outside the lattice span");
  }
  std::array<std::int64_t, kLatticeRank> out;
  for (int i = 0; i < kLatticeRank; ++i) out[i] = (*x)[i].get_si();
  return out;
}

std::vector<Integer> LatticeBasis::Expand(std::span<const Integer> coordinates) const {
  if (coordinates.size() != basis_.rows()) throw std::invalid_argument("rank mismatch");
  std::vector<Integer> v(basis_.cols());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    for (std::size_t c = 0; c < basis_.cols(); ++c) v[c] += coordinates[r] * basis_(r, c);
  }
  return v;
}

const LatticeBasis& ComputeBasis() {
  static const LatticeBasis basis = [] {
    IntMatrix m(kPairCount, kAmbientDim);
    for (const auto& e : EnumeratePairs()) {
      for (int c = 0; c < kAmbientDim; ++c) {
        m(e.index.bit(), c) = e.representative.coords()[c];
      }
    }
    return LatticeBasis(Hnf(m));
  }();
  return basis;
}

const std::array<std::int64_t, kLatticeRank>& PairCoordinates(PairIndex i) {
  static const auto table = [] {
    std::array<std::array<std::int64_t, kLatticeRank>, kPairCount> t;
    const LatticeBasis& basis = ComputeBasis();
    for (const auto& e : EnumeratePairs()) t[e.index.bit()] = basis.Coordinates(e.representative);
    return t;
  }();
  return table[i.bit()];
}

IntMatrix CoordinateMatrix(std::span<const PairIndex> subset) {
  IntMatrix m(subset.size(), kLatticeRank);
  for (std::size_t r = 0; r < subset.size(); ++r) {
    const auto& x = PairCoordinates(subset[r]);
    for (int c = 0; c < kLatticeRank; ++c) m(r, c) = static_cast<long>(x[c]);
  }
  return m;
}

std::vector<std::int64_t> RankDropPrimes(std::span<const PairIndex> subset) {
  const IntMatrix m = CoordinateMatrix(subset);
  if (RankQ(m) != subset.size()) {
    throw std::invalid_argument("subset is dependent over Q; every prime drops rank");
  }
  std::set<std::int64_t> primes;
  for (const Integer& d : SnfDivisors(m)) {
    for (std::int64_t p : PrimeFactors(d)) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

}  // namespace mwl
