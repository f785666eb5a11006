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

#include "mwl/field.hpp"

#include <charconv>
#include <stdexcept>

#include "mwl/exactmath.hpp"

namespace mwl {

Field Field::Prime(std::int64_t p) {
  if (!IsOddPrime(p) || p >= (std::int64_t{1} << 31)) {
    throw std::invalid_argument("field characteristic must be an odd prime, got " +
                                std::to_string(p));
  }
  return Field(p);
}

Field Field::Parse(std::string_view text) {
  if (text == "q" || text == "Q") return Rationals();
  if (text.starts_with("fp:")) {
    std::int64_t p = 0;
    const auto digits = text.substr(3);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size()) return Prime(p);
  }
  throw std::invalid_argument("field must be 'q' or 'fp:P', got '" + std::string(text) + "'");
}

std::string Field::ToString() const {
  return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

std::string Field::Tag() const {
  return is_rational() ? "q" : "fp" + std::to_string(p_);
}

}  // namespace mwl
