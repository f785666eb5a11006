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

// Inductive signature census over all subsets of the 28 pairs.
//
// Every r-subset E gets a signature (i; m_1, ..., m_n) where i is 1 when E
// is independent and m_j counts the (r-1)-subsets of E whose signature class
// is j at level r-1. The number of distinct signatures at level r is n_r, a
// lower bound for the number of matroid types of r-subsets.

#ifndef MWL_CLASSIFIER_HPP_
#define MWL_CLASSIFIER_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mwl/combinatorics.hpp"
#include "mwl/field.hpp"
#include "mwl/matroid.hpp"

namespace mwl {

using ClassId = std::uint32_t;

struct Signature {
  bool independent = false;
  // (class id at the previous level, multiplicity), ids strictly increasing,
  // multiplicities positive.
  std::vector<std::pair<ClassId, std::uint32_t>> counts;

  // Dense (m_1, ..., m_n) for a previous level with n classes.
  std::vector<std::uint32_t> Dense(std::size_t n) const;

  // Byte string: flag byte, then (id, multiplicity) as little-endian u32.
  std::string Serialize() const;
  static Signature Deserialize(std::string_view bytes);

  auto operator<=>(const Signature&) const = default;
};

// How independent subsets are keyed. kFull uses the complete tuple;
// kCollapsedIndependent maps every independent subset to one token, which
// gives the same partition because all children of an independent set are
// independent.
enum class SignatureMode { kFull, kCollapsedIndependent };

struct LevelTable {
  int level = 0;
  // Class id of each level-subset, indexed by colex rank.
  std::vector<ClassId> ids;
  // Canonical signature list; ids index into it. Sorted ascending.
  std::vector<Signature> signatures;

  std::size_t class_count() const { return signatures.size(); }
};

class InconsistentTable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CorruptCheckpoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The level-0 table: the empty set, independent, one class.
LevelTable InitialLevel();

struct ClassifyOptions {
  Field field = Field::Rationals();
  unsigned threads = 1;
  SignatureMode mode = SignatureMode::kFull;
};

// Subsets are processed in chunks of this many colex ranks; each chunk
// interns locally and the chunks are merged in a sorted pass.
inline constexpr std::uint64_t kChunkSize = 1 << 16;

LevelTable ClassifyLevel(const LevelTable& prev, const ClassifyOptions& options);

// Signature of one subset with |subset| = prev.level + 1. Throws
// std::invalid_argument on a size mismatch.
Signature SignatureOf(SubsetMask subset, const LevelTable& prev,
                      const RankOracle& oracle,
                      SignatureMode mode = SignatureMode::kFull);

// Checkpoint file of one level: "MWL1", level (u32), entry count (u64), ids
// (u32 each), then the signature count (u32) and each signature as a
// length-prefixed (u32) byte string. All integers little-endian.
void WriteCheckpoint(const std::filesystem::path& path, const LevelTable& table);
LevelTable ReadCheckpoint(const std::filesystem::path& path, int expected_level);

struct CensusOptions {
  Field field = Field::Rationals();
  unsigned threads = 1;
  std::optional<std::filesystem::path> checkpoint_dir;
  // Called after each level with (level, n_level, resumed_from_checkpoint).
  std::function<void(int, std::size_t, bool)> on_level;
};

struct CensusResult {
  Field field = Field::Rationals();
  std::map<int, std::uint64_t> n_r;
  std::vector<std::filesystem::path> checkpoint_paths;
  double seconds = 0;
};

// Checkpoints live in checkpoint_dir / field.Tag() / "level_RR.mwl".
std::filesystem::path CheckpointPath(const std::filesystem::path& dir, const Field& field,
                                     int level);

// n_r for r = 1..max_r (max_r in 1..28). Resumes from existing checkpoints.
CensusResult RunCensus(int max_r, const CensusOptions& options);

}  // namespace mwl

#endif  // MWL_CLASSIFIER_HPP_
