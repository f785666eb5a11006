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

#ifndef MWL_FIELD_HPP_
#define MWL_FIELD_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace mwl {

// Ground field for independence: the rationals or F_p for an odd prime p.
class Field {
 public:
  static Field Rationals() { return Field(0); }
  // Throws std::invalid_argument unless p is an odd prime below 2^31.
  static Field Prime(std::int64_t p);
  // Accepts "q" or "fp:P".
  static Field Parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::int64_t characteristic() const { return p_; }

  // "q" or "fp:P", the same syntax Parse accepts.
  std::string ToString() const;
  // Filesystem-safe tag: "q" or "fpP".
  std::string Tag() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

}  // namespace mwl

#endif  // MWL_FIELD_HPP_
