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

#include "mwl/dihedral.hpp"

#include <algorithm>

#include "mwl/exactmath.hpp"

namespace mwl {
namespace {

// Column j holds the basis coordinates of section j, so the kernel is the
// space of relations among the sections.
IntMatrix SectionColumns(const std::vector<SignedPair>& sections) {
  IntMatrix m(kLatticeRank, sections.size());
  for (std::size_t j = 0; j < sections.size(); ++j) {
    const auto& x = PairCoordinates(sections[j].index);
    for (int r = 0; r < kLatticeRank; ++r) {
      m(r, j) = static_cast<long>(x[r] * sections[j].sign);
    }
  }
  return m;
}

}  // namespace

void ValidateQuery(const CoverQuery& q) {
  if (!IsOddPrime(q.p)) {
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(q.p));
  }
  if (q.sections.empty()) throw std::invalid_argument("cover query needs at least one section");
  std::vector<int> seen;
  for (const auto& s : q.sections) {
    if (s.sign != 1 && s.sign != -1) throw std::invalid_argument("section sign must be +1 or -1");
    if (std::find(seen.begin(), seen.end(), s.index.value()) != seen.end()) {
      throw std::invalid_argument("duplicate pair index " + std::to_string(s.index.value()));
    }
    seen.push_back(s.index.value());
  }
}

bool DcoverExists(const CoverQuery& q) {
  ValidateQuery(q);
  const auto kernel = NullspaceModP(SectionColumns(q.sections), q.p);
  if (kernel.empty()) return false;
  std::uint64_t vectors = 1;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    vectors *= static_cast<std::uint64_t>(q.p);
    if (vectors > kMaxKernelVectors) {
      throw KernelTooLarge("kernel has p^" + std::to_string(kernel.size()) +
                           " vectors, above the enumeration bound");
    }
  }
  // Mixed-radix walk over all coefficient tuples. Incrementing digit k adds
  // kernel[k]; a carry leaves the lower digits' contribution at p * b = 0.
  const std::size_t n = q.sections.size();
  std::vector<std::int64_t> digits(kernel.size(), 0);
  std::vector<std::int64_t> v(n, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == q.p) digits[k++] = 0;
    if (k == digits.size()) return false;
    for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + kernel[k][i]) % q.p;
    if (std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c != 0; })) return true;
  }
}

bool CircuitImpliesCover(const CoverQuery& q) {
  ValidateQuery(q);
  std::vector<PairIndex> indices;
  for (const auto& s : q.sections) indices.push_back(s.index);
  const std::size_t n = indices.size();
  if (RankFp(CoordinateMatrix(indices), q.p) == n) return false;
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<PairIndex> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != skip) rest.push_back(indices[i]);
    }
    if (RankFp(CoordinateMatrix(rest), q.p) != rest.size()) return false;
  }
  if (!DcoverExists(q)) throw std::logic_error("circuit without a full-support dependence");
  return true;
}

std::vector<std::int64_t> CoverPrimes(std::span<const SignedPair> sections,
                                      std::int64_t p_max) {
  if (p_max > kMaxCoverPrime) {
    throw std::length_error("p_max is limited to " + std::to_string(kMaxCoverPrime));
  }
  std::vector<std::int64_t> out;
  for (std::int64_t p = 3; p <= p_max; p += 2) {
    if (!IsPrime(p)) continue;
    if (DcoverExists({{sections.begin(), sections.end()}, p})) out.push_back(p);
  }
  return out;
}

std::vector<SignedPair> AllPositive(std::span<const PairIndex> subset) {
  std::vector<SignedPair> out;
  for (const auto& i : subset) out.push_back({i, 1});
  return out;
}

}  // namespace mwl
