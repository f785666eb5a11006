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

// Linear matroids on sets of minimal-vector pairs, over Q or F_p.

#ifndef MWL_MATROID_HPP_
#define MWL_MATROID_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mwl/combinatorics.hpp"
#include "mwl/field.hpp"
#include "mwl/lattice.hpp"

namespace mwl {

// Rank of any subset of the 28 representatives over a fixed field.
//
// Over Q the rank is computed on the scaled ambient coordinates with int64
// Bareiss elimination. Entries are in {1, -3}, so every intermediate is a
// minor of at most 8 rows of norm sqrt(24) and is bounded by 24^4 in
// absolute value; products stay far below 2^63. Over F_p the rank is
// computed on lattice basis coordinates.
class RankOracle {
 public:
  explicit RankOracle(Field field);

  const Field& field() const { return field_; }
  int Rank(SubsetMask mask) const;
  bool IsIndependent(SubsetMask mask) const {
    return Rank(mask) == std::popcount(mask);
  }

 private:
  int RankRational(SubsetMask mask) const;
  int RankModP(SubsetMask mask) const;

  Field field_;
  std::array<std::array<std::int64_t, kAmbientDim>, kPairCount> ambient_;
  std::array<std::array<std::int64_t, kLatticeRank>, kPairCount> reduced_;
};

SubsetMask MaskOf(std::span<const PairIndex> subset);
std::vector<PairIndex> IndicesOf(SubsetMask mask);

class GroundSet {
 public:
  // Throws std::invalid_argument on duplicate indices.
  GroundSet(std::vector<PairIndex> elements, Field field);

  const std::vector<PairIndex>& elements() const { return elements_; }
  const Field& field() const { return field_; }
  SubsetMask mask() const { return mask_; }

 private:
  std::vector<PairIndex> elements_;
  Field field_;
  SubsetMask mask_ = 0;
};

class MatroidStructure {
 public:
  explicit MatroidStructure(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  const RankOracle& oracle() const { return oracle_; }

  // Throws std::invalid_argument if s is not a subset of the ground set.
  bool IsIndependent(std::span<const PairIndex> s) const;
  int Rank(std::span<const PairIndex> s) const;
  // All minimal dependent subsets of within, in increasing colex order of
  // their masks. Throws std::length_error when |within| > kMaxCircuitSearch.
  std::vector<std::vector<PairIndex>> Circuits(std::span<const PairIndex> within) const;

  bool IsCircuit(std::span<const PairIndex> s) const;

  static constexpr std::size_t kMaxCircuitSearch = 20;

 private:
  SubsetMask CheckedMask(std::span<const PairIndex> s) const;

  GroundSet ground_;
  RankOracle oracle_;
};

// Matroid-equivalence classes among all C(28, r) r-subsets.
struct IsoClassification {
  int level = 0;
  std::uint32_t class_count = 0;
  // Indexed by colex rank of the r-subset.
  std::vector<std::uint32_t> class_of;
};

inline constexpr int kMaxIsoLevel = 6;

// Exhaustive canonical-form classification; r must be in 1..6 (throws
// std::length_error otherwise).
IsoClassification BruteForceIsoClasses(int r, const Field& field = Field::Rationals());

}  // namespace mwl

#endif  // MWL_MATROID_HPP_
