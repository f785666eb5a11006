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

// Existence of D_2p covers of the plane branched along 2Q + p(C_1 + ... + C_r).
//
// A cover exists iff some combination sum a_i s_i with every a_i in
// {1, ..., p-1} lies in p MW(S), i.e. iff the mod-p kernel of the sections'
// lattice coordinates contains a vector with no zero entry.

#ifndef MWL_DIHEDRAL_HPP_
#define MWL_DIHEDRAL_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mwl/lattice.hpp"

namespace mwl {

struct SignedPair {
  PairIndex index;
  int sign = 1;  // +1 for the representative, -1 for its negative
};

struct CoverQuery {
  std::vector<SignedPair> sections;
  std::int64_t p = 3;
};

class KernelTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Kernel enumeration is refused above this many vectors.
inline constexpr std::uint64_t kMaxKernelVectors = 10'000'000;
inline constexpr std::int64_t kMaxCoverPrime = 10'000;

// Throws std::invalid_argument for an empty subset, duplicate indices, a
// sign other than +/-1 or a p that is not an odd prime.
void ValidateQuery(const CoverQuery& q);

// Throws KernelTooLarge when p^nullity exceeds kMaxKernelVectors.
bool DcoverExists(const CoverQuery& q);

// True iff the sections form a circuit over F_p. A circuit's dependence is
// unique up to scalar and has full support, so DcoverExists is then true;
// that is checked and a std::logic_error raised if it ever fails.
bool CircuitImpliesCover(const CoverQuery& q);

// Odd primes p <= p_max for which DcoverExists holds. p_max is capped at
// kMaxCoverPrime (std::length_error above it).
std::vector<std::int64_t> CoverPrimes(std::span<const SignedPair> sections,
                                      std::int64_t p_max);

std::vector<SignedPair> AllPositive(std::span<const PairIndex> subset);

}  // namespace mwl

#endif  // MWL_DIHEDRAL_HPP_
