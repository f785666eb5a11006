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

// Exact linear algebra over Z, Q and F_p, plus binary forms over Q.
// Matrices here are tiny and dense; nothing is tuned for size.

#ifndef MWL_EXACTMATH_HPP_
#define MWL_EXACTMATH_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mwl {

using Integer = mpz_class;
using Rational = mpq_class;

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense row-major matrix. Entry type is Integer or Rational.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix Identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void SwapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = std::vector<Rational>;

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t RankQ(const IntMatrix& m);

// Rank of m reduced modulo the odd prime p. Throws std::invalid_argument
// if p is not an odd prime.
std::size_t RankFp(const IntMatrix& m, std::int64_t p);

// Basis of {x : m x = 0 (mod p)} for an odd prime p, entries in [0, p).
std::vector<std::vector<std::int64_t>> NullspaceModP(const IntMatrix& m, std::int64_t p);

bool IsPrime(std::int64_t n);
bool IsOddPrime(std::int64_t n);
std::vector<std::int64_t> PrimeFactors(Integer n);

// Row-style Hermite normal form. Only the nonzero rows are returned; pivots
// are positive and entries above each pivot lie in [0, pivot).
IntMatrix Hnf(const IntMatrix& m);

// Nonzero Smith elementary divisors d_1 | d_2 | ... (all positive).
std::vector<Integer> SnfDivisors(const IntMatrix& m);

// Unique x with a * x = b. Throws SingularSystem when det(a) = 0.
RatVector SolveRational(const RatMatrix& a, const RatVector& b);

// Parses "p/q", "p" or "-p/q".
Rational ParseRational(std::string_view text);
std::string FormatRational(const Rational& q);

// Homogeneous form in (s, t). coeffs[i] multiplies s^(d-i) t^i.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  // Partial derivatives; the result has degree d - 1.
  BinaryForm DerivativeS() const;
  BinaryForm DerivativeT() const;

  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm Scaled(const Rational& c) const;

  // Rescaled so the coefficient of the highest power of s present is 1.
  BinaryForm Normalized() const;

  // b^2 - 4ac for a quadratic form.
  Rational QuadraticDiscriminant() const;

  bool operator==(const BinaryForm& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

// numerator / denominator when the division is exact.
std::optional<BinaryForm> ExactQuotient(const BinaryForm& numerator,
                                        const BinaryForm& denominator);

// Normalized gcd over Q. Throws std::invalid_argument if both are zero.
BinaryForm BinaryGcd(const BinaryForm& f, const BinaryForm& g);

}  // namespace mwl

#endif  // MWL_EXACTMATH_HPP_
