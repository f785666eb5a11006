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

#include "mwl/classifier.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <unordered_map>

#include "mwl/parallel.hpp"

namespace mwl {
namespace {

// Hot-path form of a signature: flag plus the sorted child class ids.
struct RawKey {
  std::uint8_t size = 0;
  bool independent = false;
  std::array<ClassId, kPairCount> ids;

  bool operator==(const RawKey& o) const {
    return size == o.size && independent == o.independent &&
           std::equal(ids.begin(), ids.begin() + size, o.ids.begin());
  }
};

struct RawKeyHash {
  std::size_t operator()(const RawKey& k) const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ (k.size * 2u + k.independent);
    for (int i = 0; i < k.size; ++i) {
      h ^= k.ids[i];
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

Signature ToSignature(const RawKey& key) {
  Signature sig;
  sig.independent = key.independent;
  for (int i = 0; i < key.size; ++i) {
    if (!sig.counts.empty() && sig.counts.back().first == key.ids[i]) {
      ++sig.counts.back().second;
    } else {
      sig.counts.emplace_back(key.ids[i], 1);
    }
  }
  return sig;
}

// Fills key.ids with the child class ids of `mask` (unsorted).
int ChildIds(SubsetMask mask, const LevelTable& prev, RawKey& key) {
  std::array<int, kPairCount> elems;
  int r = 0;
  for (SubsetMask m = mask; m != 0; m &= m - 1) elems[r++] = std::countr_zero(m);
  // prefix[j] = sum_{i<j} C(c_i, i+1); the suffix term shifts each later
  // element down one position.
  std::array<std::uint64_t, kPairCount + 1> prefix;
  prefix[0] = 0;
  for (int i = 0; i < r; ++i) prefix[i + 1] = prefix[i] + Binomial(elems[i], i + 1);
  std::uint64_t suffix = 0;
  for (int j = r - 1; j >= 0; --j) {
    key.ids[j] = prev.ids[prefix[j] + suffix];
    suffix += Binomial(elems[j], j);
  }
  return r;
}

void ValidatePredecessor(const LevelTable& prev) {
  if (prev.level < 0 || prev.level >= kPairCount) {
    throw InconsistentTable("predecessor level out of range");
  }
  if (prev.ids.size() != Binomial(kPairCount, prev.level)) {
    throw InconsistentTable("predecessor table has " + std::to_string(prev.ids.size()) +
                            " entries, expected C(28," + std::to_string(prev.level) + ")");
  }
  if (prev.signatures.empty()) throw InconsistentTable("predecessor has no classes");
}

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>(v >> (8 * i) & 0xff));
}

std::uint32_t GetU32(const unsigned char* p) {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 |
         std::uint32_t{p[3]} << 24;
}

std::uint64_t GetU64(const unsigned char* p) {
  return std::uint64_t{GetU32(p)} | std::uint64_t{GetU32(p + 4)} << 32;
}

}  // namespace

std::vector<std::uint32_t> Signature::Dense(std::size_t n) const {
  std::vector<std::uint32_t> out(n);
  for (const auto& [id, m] : counts) {
    if (id >= n) throw std::out_of_range("signature refers to an unknown class");
    out[id] = m;
  }
  return out;
}

std::string Signature::Serialize() const {
  std::string out;
  out.push_back(independent ? 1 : 0);
  for (const auto& [id, m] : counts) {
    PutU32(out, id);
    PutU32(out, m);
  }
  return out;
}

Signature Signature::Deserialize(std::string_view bytes) {
  if (bytes.empty() || (bytes.size() - 1) % 8 != 0 ||
      static_cast<unsigned char>(bytes[0]) > 1) {
    throw std::invalid_argument("malformed signature bytes");
  }
  Signature sig;
  sig.independent = bytes[0] == 1;
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data()) + 1;
  for (std::size_t i = 0; i < (bytes.size() - 1) / 8; ++i, p += 8) {
    const ClassId id = GetU32(p);
    const std::uint32_t m = GetU32(p + 4);
    if (m == 0 || (!sig.counts.empty() && sig.counts.back().first >= id)) {
      throw std::invalid_argument("signature counts are not canonical");
    }
    sig.counts.emplace_back(id, m);
  }
  return sig;
}

LevelTable InitialLevel() {
  LevelTable t;
  t.level = 0;
  t.ids = {0};
  t.signatures = {Signature{true, {}}};
  return t;
}

Signature SignatureOf(SubsetMask subset, const LevelTable& prev, const RankOracle& oracle,
                      SignatureMode mode) {
  const int r = std::popcount(subset);
  if (r != prev.level + 1) {
    throw std::invalid_argument("subset of size " + std::to_string(r) +
                                " does not follow level " + std::to_string(prev.level));
  }
  ValidatePredecessor(prev);
  RawKey key;
  key.size = static_cast<std::uint8_t>(ChildIds(subset, prev, key));
  key.independent = r <= kLatticeRank && oracle.IsIndependent(subset);
  if (key.independent && mode == SignatureMode::kCollapsedIndependent) key.size = 0;
  std::sort(key.ids.begin(), key.ids.begin() + key.size);
  return ToSignature(key);
}

LevelTable ClassifyLevel(const LevelTable& prev, const ClassifyOptions& options) {
  ValidatePredecessor(prev);
  const int r = prev.level + 1;
  const std::uint64_t total = Binomial(kPairCount, r);
  const RankOracle oracle(options.field);

  std::vector<char> prev_independent(prev.signatures.size());
  for (std::size_t i = 0; i < prev.signatures.size(); ++i) {
    prev_independent[i] = prev.signatures[i].independent;
  }
  for (ClassId id : prev.ids) {
    if (id >= prev.signatures.size()) throw InconsistentTable("predecessor id out of range");
  }

  LevelTable next;
  next.level = r;
  next.ids.resize(total);

  const std::size_t chunks = (total + kChunkSize - 1) / kChunkSize;
  std::vector<std::vector<RawKey>> chunk_keys(chunks);

  ParallelFor(chunks, options.threads, [&](std::size_t chunk) {
    const std::uint64_t begin = chunk * kChunkSize;
    const std::uint64_t end = std::min(total, begin + kChunkSize);
    std::unordered_map<RawKey, ClassId, RawKeyHash> local;
    std::vector<RawKey>& keys = chunk_keys[chunk];
    SubsetMask mask = ColexUnrank(begin, r);
    RawKey key;
    key.size = static_cast<std::uint8_t>(r);
    for (std::uint64_t rank = begin; rank < end; ++rank, mask = NextColex(mask)) {
      ChildIds(mask, prev, key);
      bool independent = false;
      if (r <= kLatticeRank) {
        const bool children_independent = std::all_of(
            key.ids.begin(), key.ids.begin() + r, [&](ClassId id) { return prev_independent[id]; });
        independent = children_independent && oracle.IsIndependent(mask);
      }
      key.independent = independent;
      key.size = static_cast<std::uint8_t>(
          independent && options.mode == SignatureMode::kCollapsedIndependent ? 0 : r);
      std::sort(key.ids.begin(), key.ids.begin() + key.size);
      auto [it, inserted] = local.try_emplace(key, static_cast<ClassId>(keys.size()));
      if (inserted) keys.push_back(key);
      next.ids[rank] = it->second;
    }
  });

  // Deterministic interning: ids follow the sorted order of signatures.
  std::map<Signature, ClassId> global;
  for (const auto& keys : chunk_keys) {
    for (const auto& key : keys) global.emplace(ToSignature(key), 0);
  }
  ClassId counter = 0;
  for (auto& [sig, id] : global) {
    id = counter++;
    next.signatures.push_back(sig);
  }
  std::vector<std::vector<ClassId>> remap(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    for (const auto& key : chunk_keys[c]) remap[c].push_back(global.at(ToSignature(key)));
  }
  ParallelFor(chunks, options.threads, [&](std::size_t chunk) {
    const std::uint64_t begin = chunk * kChunkSize;
    const std::uint64_t end = std::min(total, begin + kChunkSize);
    for (std::uint64_t i = begin; i < end; ++i) next.ids[i] = remap[chunk][next.ids[i]];
  });
  return next;
}

void WriteCheckpoint(const std::filesystem::path& path, const LevelTable& table) {
  std::string header = "MWL1";
  PutU32(header, static_cast<std::uint32_t>(table.level));
  const std::uint64_t count = table.ids.size();
  PutU32(header, static_cast<std::uint32_t>(count));
  PutU32(header, static_cast<std::uint32_t>(count >> 32));

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out.write(header.data(), static_cast<std::streamsize>(header.size()));
    std::string block;
    block.reserve(4 << 16);
    for (std::size_t i = 0; i < table.ids.size(); ++i) {
      PutU32(block, table.ids[i]);
      if (block.size() >= (4u << 16)) {
        out.write(block.data(), static_cast<std::streamsize>(block.size()));
        block.clear();
      }
    }
    PutU32(block, static_cast<std::uint32_t>(table.signatures.size()));
    for (const auto& sig : table.signatures) {
      const std::string bytes = sig.Serialize();
      PutU32(block, static_cast<std::uint32_t>(bytes.size()));
      block += bytes;
    }
    out.write(block.data(), static_cast<std::streamsize>(block.size()));
    if (!out) throw std::runtime_error("short write on checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

LevelTable ReadCheckpoint(const std::filesystem::path& path, int expected_level) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorruptCheckpoint("cannot open checkpoint " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto fail = [&](const std::string& what) {
    return CorruptCheckpoint("corrupt checkpoint " + path.string() + ": " + what);
  };
  const auto* p = reinterpret_cast<const unsigned char*>(data.data());
  const std::size_t size = data.size();
  if (size < 16 || std::memcmp(p, "MWL1", 4) != 0) throw fail("bad magic");
  const std::uint32_t level = GetU32(p + 4);
  const std::uint64_t count = GetU64(p + 8);
  if (static_cast<int>(level) != expected_level) throw fail("unexpected level");
  if (level > static_cast<std::uint32_t>(kPairCount) || count != Binomial(kPairCount, level)) {
    throw fail("entry count does not match level");
  }
  std::size_t pos = 16;
  if (size - pos < count * 4 + 4) throw fail("truncated body");
  LevelTable table;
  table.level = static_cast<int>(level);
  table.ids.resize(count);
  for (std::uint64_t i = 0; i < count; ++i, pos += 4) table.ids[i] = GetU32(p + pos);
  const std::uint32_t nsig = GetU32(p + pos);
  pos += 4;
  for (std::uint32_t s = 0; s < nsig; ++s) {
    if (size - pos < 4) throw fail("truncated signature list");
    const std::uint32_t len = GetU32(p + pos);
    pos += 4;
    if (size - pos < len) throw fail("truncated signature");
    try {
      table.signatures.push_back(Signature::Deserialize(std::string_view(data).substr(pos, len)));
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    pos += len;
    if (s > 0 && !(table.signatures[s - 1] < table.signatures[s])) {
      throw fail("signature list is not sorted");
    }
  }
  if (pos != size) throw fail("trailing bytes");
  if (nsig == 0) throw fail("empty signature list");
  for (ClassId id : table.ids) {
    if (id >= nsig) throw fail("class id out of range");
  }
  return table;
}

std::filesystem::path CheckpointPath(const std::filesystem::path& dir, const Field& field,
                                     int level) {
  char name[32];
  std::snprintf(name, sizeof(name), "level_%02d.mwl", level);
  return dir / field.Tag() / name;
}

CensusResult RunCensus(int max_r, const CensusOptions& options) {
  if (max_r < 1 || max_r > kPairCount) {
    throw std::invalid_argument("max_r must be in 1..28");
  }
  const auto start = std::chrono::steady_clock::now();
  CensusResult result;
  result.field = options.field;

  LevelTable current = InitialLevel();
  if (options.checkpoint_dir) {
    std::filesystem::create_directories(*options.checkpoint_dir / options.field.Tag());
    for (int r = 1; r <= max_r; ++r) {
      const auto path = CheckpointPath(*options.checkpoint_dir, options.field, r);
      if (!std::filesystem::exists(path)) break;
      current = ReadCheckpoint(path, r);
      result.n_r[r] = current.class_count();
      result.checkpoint_paths.push_back(path);
      if (options.on_level) options.on_level(r, current.class_count(), true);
    }
  }
  for (int r = current.level + 1; r <= max_r; ++r) {
    current = ClassifyLevel(current, {options.field, options.threads, SignatureMode::kFull});
    result.n_r[r] = current.class_count();
    if (options.checkpoint_dir) {
      const auto path = CheckpointPath(*options.checkpoint_dir, options.field, r);
      WriteCheckpoint(path, current);
      result.checkpoint_paths.push_back(path);
    }
    if (options.on_level) options.on_level(r, current.class_count(), false);
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace mwl
