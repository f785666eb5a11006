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

// The 56 minimal vectors of E7* in its Q^8 model, grouped into 28 +/- pairs.
// Coordinates are stored multiplied by 4, so every minimal vector is a
// permutation of +/-(1,1,1,1,1,1,-3,-3) and the height pairing is dot/16.

#ifndef MWL_LATTICE_HPP_
#define MWL_LATTICE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mwl/exactmath.hpp"

namespace mwl {

inline constexpr int kPairCount = 28;
inline constexpr int kAmbientDim = 8;
inline constexpr int kLatticeRank = 7;

// Canonical index 1..28 of a +/- pair of minimal vectors.
class PairIndex {
 public:
  // Throws std::out_of_range outside 1..28.
  explicit PairIndex(int value);
  int value() const { return value_; }
  // Bit position in a SubsetMask.
  int bit() const { return value_ - 1; }
  auto operator<=>(const PairIndex&) const = default;

 private:
  int value_;
};

class MinimalVector {
 public:
  using Coords = std::array<int, kAmbientDim>;

  // Throws std::invalid_argument unless coords is a permutation of
  // (1,1,1,1,1,1,-3,-3) or its negative.
  explicit MinimalVector(const Coords& coords);

  const Coords& coords() const { return coords_; }
  MinimalVector operator-() const;
  bool operator==(const MinimalVector&) const = default;

  std::string ToString() const;

 private:
  Coords coords_;
};

struct PairEntry {
  PairIndex index;
  MinimalVector representative;  // six +1 entries, two -3 entries
};

// The 28 pairs in descending lexicographic order of their representatives.
const std::vector<PairEntry>& EnumeratePairs();

const MinimalVector& Representative(PairIndex i);

// Pair containing v; LookupPair(v) == LookupPair(-v).
PairIndex LookupPair(const MinimalVector& v);

// dot(v, w) / 16.
Rational HeightPairing(const MinimalVector& v, const MinimalVector& w);

// Integral basis of the span of the minimal vectors (scaled coordinates).
class LatticeBasis {
 public:
  explicit LatticeBasis(IntMatrix hnf_rows);

  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }

  // Integer coordinates of an ambient vector, or nullopt when the vector is
  // not in the integer span of the basis.
  std::optional<std::vector<Integer>> Coordinates(std::span<const Integer> v) const;
  std::array<std::int64_t, kLatticeRank> Coordinates(const MinimalVector& v) const;

  std::vector<Integer> Expand(std::span<const Integer> coordinates) const;

 private:
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// HNF basis of the 28 representatives; computed once.
const LatticeBasis& ComputeBasis();

// Basis coordinates of representative i, precomputed.
const std::array<std::int64_t, kLatticeRank>& PairCoordinates(PairIndex i);

// Primes p for which the representatives of subset lose rank mod p.
// Throws std::invalid_argument if the subset is dependent over Q.
std::vector<std::int64_t> RankDropPrimes(std::span<const PairIndex> subset);

// Matrix whose rows are the basis coordinates of the given representatives.
IntMatrix CoordinateMatrix(std::span<const PairIndex> subset);

}  // namespace mwl

#endif  // MWL_LATTICE_HPP_
