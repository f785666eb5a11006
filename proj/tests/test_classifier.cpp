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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>

#include "mwl/classifier.hpp"

using namespace mwl;
namespace fs = std::filesystem;

namespace {

std::vector<LevelTable> Levels(int max_r, const ClassifyOptions& opts) {
  std::vector<LevelTable> out{InitialLevel()};
  for (int r = 1; r <= max_r; ++r) out.push_back(ClassifyLevel(out.back(), opts));
  return out;
}

// Levels up to 8 over Q are shared by several cases.
const std::vector<LevelTable>& QLevels() {
  static const std::vector<LevelTable> levels = Levels(8, ClassifyOptions{});
  return levels;
}

// Two id vectors induce the same partition of the subsets.
bool SamePartition(const std::vector<ClassId>& a, const std::vector<ClassId>& b) {
  if (a.size() != b.size()) return false;
  std::map<ClassId, ClassId> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ab.emplace(a[i], b[i]).first->second != b[i]) return false;
    if (ba.emplace(b[i], a[i]).first->second != a[i]) return false;
  }
  return true;
}

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("mwl_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<PairIndex> FourCircuit() {
  std::vector<PairIndex> out;
  for (int k = 0; k < 4; ++k) {
    MinimalVector::Coords c{1, 1, 1, 1, 1, 1, 1, 1};
    c[2 * k] = c[2 * k + 1] = -3;
    out.push_back(LookupPair(MinimalVector(c)));
  }
  return out;
}

}  // namespace

TEST_CASE("level 0 and level 1") {
  const LevelTable l0 = InitialLevel();
  CHECK(l0.level == 0);
  CHECK(l0.ids == std::vector<ClassId>{0});
  REQUIRE(l0.class_count() == 1);
  CHECK(l0.signatures[0].independent);

  const auto& levels = QLevels();
  CHECK(levels[1].class_count() == 1);
  CHECK(levels[1].ids.size() == 28);
  const Signature& s = levels[1].signatures[0];
  CHECK(s.independent);
  CHECK(s.Dense(1) == std::vector<std::uint32_t>{1});
}

TEST_CASE("n_r for small r over Q") {
  const std::vector<std::size_t> expected{1, 1, 1, 1, 2, 2, 4, 6, 11};
  const auto& levels = QLevels();
  for (int r = 0; r <= 8; ++r) CHECK(levels[r].class_count() == expected[r]);
}

TEST_CASE("signature examples") {
  const auto& levels = QLevels();
  const RankOracle q(Field::Rationals());
  // The 4-circuit: dependent, all four children in the independent class.
  const Signature c4 = SignatureOf(MaskOf(FourCircuit()), levels[3], q);
  CHECK_FALSE(c4.independent);
  REQUIRE(c4.counts.size() == 1);
  CHECK(c4.counts[0].second == 4);
  CHECK(levels[3].signatures[c4.counts[0].first].independent);

  // An independent r-subset concentrates on the unique independent class.
  for (int r = 1; r <= 7; ++r) {
    SubsetMask m = 0;
    for (int i = 0; i < 28 && std::popcount(m) < r; ++i) {
      if (q.IsIndependent(m | (1u << i))) m |= 1u << i;
    }
    REQUIRE(std::popcount(m) == r);
    const Signature s = SignatureOf(m, levels[r - 1], q);
    CHECK(s.independent);
    REQUIRE(s.counts.size() == 1);
    CHECK(s.counts[0].second == static_cast<std::uint32_t>(r));
  }
  CHECK_THROWS_AS(SignatureOf(0b111, levels[3], q), std::invalid_argument);
}

TEST_CASE("table entries match signatures recomputed one subset at a time") {
  std::mt19937_64 rng(31);
  const RankOracle q(Field::Rationals());
  auto levels = QLevels();
  levels.push_back(ClassifyLevel(levels.back(), ClassifyOptions{}));
  for (int r = 1; r <= 9; ++r) {
    const LevelTable& t = levels[r];
    for (int it = 0; it < 300; ++it) {
      const std::uint64_t rank = rng() % t.ids.size();
      const SubsetMask m = ColexUnrank(rank, r);
      CHECK(t.signatures[t.ids[rank]] == SignatureOf(m, levels[r - 1], q));
    }
    // Any 9-subset is dependent.
    if (r == 9) {
      for (const auto& s : t.signatures) CHECK_FALSE(s.independent);
    }
    CHECK(std::is_sorted(t.signatures.begin(), t.signatures.end()));
  }
}

TEST_CASE("collapsed independent keying gives the same partition up to r = 8") {
  ClassifyOptions collapsed;
  collapsed.mode = SignatureMode::kCollapsedIndependent;
  const auto alt = Levels(8, collapsed);
  const auto& full = QLevels();
  for (int r = 1; r <= 8; ++r) {
    CHECK(alt[r].class_count() == full[r].class_count());
    CHECK(SamePartition(alt[r].ids, full[r].ids));
  }
}

TEST_CASE("thread count does not change tables") {
  ClassifyOptions threaded;
  threaded.threads = 4;
  const auto alt = Levels(8, threaded);
  const auto& serial = QLevels();
  for (int r = 0; r <= 8; ++r) {
    CHECK(alt[r].ids == serial[r].ids);
    CHECK(alt[r].signatures == serial[r].signatures);
  }
}

TEST_CASE("predecessor validation") {
  LevelTable bad = QLevels()[2];
  bad.ids.pop_back();
  CHECK_THROWS_AS(ClassifyLevel(bad, ClassifyOptions{}), InconsistentTable);
  bad = QLevels()[2];
  bad.ids[5] = 7;
  CHECK_THROWS_AS(ClassifyLevel(bad, ClassifyOptions{}), InconsistentTable);
}

TEST_CASE("signature serialization") {
  Signature s;
  s.independent = false;
  s.counts = {{0, 3}, {4, 1}, {70000, 2}};
  CHECK(Signature::Deserialize(s.Serialize()) == s);
  CHECK(s.Serialize().size() == 1 + 8 * 3);
  CHECK_THROWS_AS(s.Dense(5), std::out_of_range);
  Signature small;
  small.counts = {{0, 3}, {4, 1}};
  CHECK(small.Dense(5) == std::vector<std::uint32_t>{3, 0, 0, 0, 1});
  CHECK_THROWS_AS(Signature::Deserialize(""), std::invalid_argument);
  CHECK_THROWS_AS(Signature::Deserialize(std::string("\x02", 1)), std::invalid_argument);
  CHECK_THROWS_AS(Signature::Deserialize(std::string("\x01\x00\x00", 3)), std::invalid_argument);
}

TEST_CASE("checkpoint round trip and corruption") {
  const fs::path dir = TempDir("ckpt");
  const LevelTable& t = QLevels()[5];
  const fs::path path = dir / "level_05.mwl";
  WriteCheckpoint(path, t);
  const LevelTable back = ReadCheckpoint(path, 5);
  CHECK(back.level == 5);
  CHECK(back.ids == t.ids);
  CHECK(back.signatures == t.signatures);
  CHECK_THROWS_AS(ReadCheckpoint(path, 6), CorruptCheckpoint);
  CHECK_THROWS_AS(ReadCheckpoint(dir / "missing.mwl", 5), CorruptCheckpoint);

  std::string bytes;
  {
    std::ifstream in(path, std::ios::binary);
    bytes.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto write = [&](const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << data;
  };
  write(bytes.substr(0, bytes.size() / 2));
  CHECK_THROWS_AS(ReadCheckpoint(path, 5), CorruptCheckpoint);
  std::string magic = bytes;
  magic[0] = 'X';
  write(magic);
  CHECK_THROWS_AS(ReadCheckpoint(path, 5), CorruptCheckpoint);
  std::string id = bytes;
  id[16] = '\xff';  // first class id, far out of range
  write(id);
  CHECK_THROWS_AS(ReadCheckpoint(path, 5), CorruptCheckpoint);
  write(bytes + "junk");
  CHECK_THROWS_AS(ReadCheckpoint(path, 5), CorruptCheckpoint);
  write(bytes);
  CHECK_NOTHROW(ReadCheckpoint(path, 5));
  fs::remove_all(dir);
}

TEST_CASE("census resumes from checkpoints with identical results") {
  const fs::path dir = TempDir("census");
  CensusOptions opts;
  opts.checkpoint_dir = dir;
  std::vector<bool> resumed;
  opts.on_level = [&](int, std::size_t, bool from_ckpt) { resumed.push_back(from_ckpt); };
  const CensusResult first = RunCensus(6, opts);
  CHECK(std::none_of(resumed.begin(), resumed.end(), [](bool b) { return b; }));
  CHECK(first.checkpoint_paths.size() == 6);
  CHECK(first.checkpoint_paths.back() == CheckpointPath(dir, Field::Rationals(), 6));
  CHECK(fs::exists(dir / "q" / "level_06.mwl"));

  // Simulate an interruption after level 4 and extend to 7.
  fs::remove(CheckpointPath(dir, Field::Rationals(), 5));
  fs::remove(CheckpointPath(dir, Field::Rationals(), 6));
  resumed.clear();
  const CensusResult second = RunCensus(7, opts);
  CHECK(resumed == std::vector<bool>{true, true, true, true, false, false, false});
  for (int r = 1; r <= 6; ++r) CHECK(second.n_r.at(r) == first.n_r.at(r));
  CHECK(second.n_r.at(7) == 6);

  // A corrupt checkpoint is reported, not silently recomputed.
  {
    std::ofstream out(CheckpointPath(dir, Field::Rationals(), 2), std::ios::binary);
    out << "MWL1garbage";
  }
  CHECK_THROWS_AS(RunCensus(3, opts), CorruptCheckpoint);

  // Field tags keep checkpoints apart.
  CHECK(CheckpointPath(dir, Field::Prime(5), 3) == dir / "fp5" / "level_03.mwl");
  CHECK_THROWS_AS(RunCensus(0, CensusOptions{}), std::invalid_argument);
  CHECK_THROWS_AS(RunCensus(29, CensusOptions{}), std::invalid_argument);
  fs::remove_all(dir);
}

TEST_CASE("census over finite fields") {
  // Observed values; F_3 departs from Q at r = 9.
  CensusOptions f5;
  f5.field = Field::Prime(5);
  const auto r5 = RunCensus(10, f5);
  const std::vector<std::uint64_t> expect5{1, 1, 1, 2, 2, 4, 6, 11, 19, 37};
  for (int r = 1; r <= 10; ++r) CHECK(r5.n_r.at(r) == expect5[r - 1]);

  CensusOptions f3;
  f3.field = Field::Prime(3);
  const auto r3 = RunCensus(10, f3);
  const std::vector<std::uint64_t> expect3{1, 1, 1, 2, 2, 4, 6, 11, 18, 35};
  for (int r = 1; r <= 10; ++r) CHECK(r3.n_r.at(r) == expect3[r - 1]);
}
