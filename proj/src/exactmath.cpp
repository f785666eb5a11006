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

#include "mwl/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace mwl {
namespace {

std::int64_t Mod(const Integer& v, std::int64_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

std::int64_t PowMod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void AddRowMultiple(IntMatrix& a, std::size_t dst, std::size_t src,
                    const Integer& factor) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += factor * a(src, c);
}

void AddColMultiple(IntMatrix& a, std::size_t dst, std::size_t src,
                    const Integer& factor) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += factor * a(r, src);
}

void SwapCols(IntMatrix& a, std::size_t x, std::size_t y) {
  if (x == y) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, x), a(r, y));
}

}  // namespace

std::size_t RankQ(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    a.SwapRows(pivot, rank);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a(i, j) = a(rank, col) * a(i, j) - a(i, col) * a(rank, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

bool IsPrime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool IsOddPrime(std::int64_t n) { return n != 2 && IsPrime(n); }

std::vector<std::int64_t> PrimeFactors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::int64_t> out;
  if (n == 0) throw std::invalid_argument("PrimeFactors of zero");
  for (std::int64_t d = 2; Integer(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) {
    if (!n.fits_slong_p()) throw std::overflow_error("prime factor too large");
    out.push_back(n.get_si());
  }
  return out;
}

std::size_t RankFp(const IntMatrix& m, std::int64_t p) {
  if (!IsOddPrime(p) || p >= (std::int64_t{1} << 31)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^31");
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = Mod(m(r, c), p);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::swap(a[pivot * cols + c], a[rank * cols + c]);
      }
    }
    const std::int64_t inv = PowMod(a[rank * cols + col], p - 2, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t f = a[i * cols + col] * inv % p;
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        a[i * cols + c] = ((a[i * cols + c] - f * a[rank * cols + c]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::int64_t>> NullspaceModP(const IntMatrix& m, std::int64_t p) {
  if (!IsOddPrime(p) || p >= (std::int64_t{1} << 31)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^31");
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = Mod(m(r, c), p);
  }
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = PowMod(a[rank][col], p - 2, p);
    for (auto& v : a[rank]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const std::int64_t f = a[i][col];
      for (std::size_t c = 0; c < cols; ++c) a[i][c] = ((a[i][c] - f * a[rank][c]) % p + p) % p;
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> x(cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) x[pivot_cols[r]] = (p - a[r][free]) % p;
    basis.push_back(std::move(x));
  }
  return basis;
}

IntMatrix Hnf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                 a(r, col).get_mpz_t(), a(i, col).get_mpz_t());
      const Integer top = a(r, col) / g;
      const Integer bottom = a(i, col) / g;
      for (std::size_t c = col; c < cols; ++c) {
        Integer vr = a(r, c);
        Integer vi = a(i, c);
        a(r, c) = x * vr + y * vi;
        a(i, c) = bottom * vr - top * vi;
      }
    }
    if (a(r, col) == 0) continue;
    if (a(r, col) < 0) {
      for (std::size_t c = col; c < cols; ++c) a(r, c) = -a(r, c);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(r, col).get_mpz_t());
      if (q != 0) AddRowMultiple(a, i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = a(i, c);
  }
  return out;
}

std::vector<Integer> SnfDivisors(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<Integer> divisors;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    auto move_smallest = [&](bool restrict_to_cross) -> bool {
      bool found = false;
      std::size_t br = t, bc = t;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (restrict_to_cross && i != t && j != t) continue;
          if (a(i, j) == 0) continue;
          if (!found || abs(a(i, j)) < abs(a(br, bc))) {
            found = true;
            br = i;
            bc = j;
          }
        }
      }
      if (!found) return false;
      a.SwapRows(t, br);
      SwapCols(a, t, bc);
      return true;
    };
    if (!move_smallest(false)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        AddRowMultiple(a, i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        AddColMultiple(a, j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        move_smallest(true);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            AddRowMultiple(a, t, i, 1);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    divisors.push_back(abs(a(t, t)));
  }
  return divisors;
}

RatVector SolveRational(const RatMatrix& a, const RatVector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw std::invalid_argument("SolveRational expects a square system");
  }
  RatMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularSystem("singular linear system");
    aug.SwapRows(pivot, col);
    const Rational inv = 1 / aug(col, col);
    for (std::size_t c = col; c <= n; ++c) aug(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug(r, col) == 0) continue;
      const Rational f = aug(r, col);
      for (std::size_t c = col; c <= n; ++c) aug(r, c) -= f * aug(col, c);
    }
  }
  RatVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

Rational ParseRational(std::string_view text) {
  auto bad = [&]() {
    return std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  const std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw bad();
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    const std::size_t den_start = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) throw bad();
    if (Integer(std::string(text.substr(den_start))) == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
  }
  std::string body(text[0] == '+' ? text.substr(1) : text);
  Rational q(body);
  q.canonicalize();
  return q;
}

std::string FormatRational(const Rational& q) { return q.get_str(); }

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("binary form needs a degree");
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

BinaryForm BinaryForm::DerivativeS() const {
  const int d = degree();
  if (d == 0) return BinaryForm({Rational(0)});
  std::vector<Rational> out(d);
  for (int i = 0; i < d; ++i) out[i] = coeffs_[i] * (d - i);
  return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::DerivativeT() const {
  const int d = degree();
  if (d == 0) return BinaryForm({Rational(0)});
  std::vector<Rational> out(d);
  for (int i = 1; i <= d; ++i) out[i - 1] = coeffs_[i] * i;
  return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("degree mismatch in sum");
  std::vector<Rational> out = coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coeffs_[i];
  return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::Scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& v : out) v *= c;
  return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::Normalized() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return Scaled(1 / c);
  }
  return *this;
}

Rational BinaryForm::QuadraticDiscriminant() const {
  if (degree() != 2) throw std::invalid_argument("discriminant needs a quadratic");
  return coeffs_[1] * coeffs_[1] - 4 * coeffs_[0] * coeffs_[2];
}

namespace {

// Dense univariate polynomial over Z, lowest degree first, no trailing zeros.
using IntPoly = std::vector<Integer>;

void Trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void MakePrimitive(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = gcd(g, c);
  if (g == 0) return;
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
}

// The dehomogenized s-polynomial of f (t = 1), cleared of denominators.
// Also reports how many leading coefficients vanish, i.e. the power of t
// dividing f.
IntPoly Dehomogenize(const BinaryForm& f, int* t_power) {
  const auto& c = f.coeffs();
  const int d = f.degree();
  int lead = 0;
  while (lead <= d && c[lead] == 0) ++lead;
  *t_power = lead;
  Integer den = 1;
  for (const auto& v : c) den = lcm(den, v.get_den());
  IntPoly p(d + 1);
  for (int i = 0; i <= d; ++i) {
    Rational scaled = c[i] * den;
    p[d - i] = scaled.get_num();
  }
  Trim(p);
  return p;
}

IntPoly PseudoRemainder(IntPoly a, const IntPoly& b) {
  const Integer& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const Integer factor = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    Trim(a);
  }
  return a;
}

IntPoly PrimitiveGcd(IntPoly a, IntPoly b) {
  MakePrimitive(a);
  MakePrimitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = PseudoRemainder(a, b);
    MakePrimitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

std::optional<BinaryForm> ExactQuotient(const BinaryForm& numerator,
                                        const BinaryForm& denominator) {
  if (denominator.is_zero()) throw std::invalid_argument("division by zero form");
  const int dq = numerator.degree() - denominator.degree();
  if (dq < 0) return std::nullopt;
  // Long division in the coefficient order, which is division by the
  // leading s-power after shifting out common factors of t.
  const auto& den = denominator.coeffs();
  std::size_t lead = 0;
  while (den[lead] == 0) ++lead;
  std::vector<Rational> rem = numerator.coeffs();
  std::vector<Rational> quot(dq + 1);
  for (int i = 0; i <= dq; ++i) {
    if (i + lead >= rem.size()) break;
    const Rational f = rem[i + lead] / den[lead];
    if (f == 0) continue;
    quot[i] = f;
    for (std::size_t j = lead; j < den.size(); ++j) rem[i + j] -= f * den[j];
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return BinaryForm(std::move(quot));
}

BinaryForm BinaryGcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero forms");
  if (f.is_zero()) return g.Normalized();
  if (g.is_zero()) return f.Normalized();
  int tf = 0, tg = 0;
  IntPoly pf = Dehomogenize(f, &tf);
  IntPoly pg = Dehomogenize(g, &tg);
  IntPoly h = PrimitiveGcd(std::move(pf), std::move(pg));
  const int t_power = std::min(tf, tg);
  const int e = static_cast<int>(h.size()) - 1;
  std::vector<Rational> out(e + t_power + 1);
  for (int j = 0; j <= e; ++j) out[e + t_power - j] = Rational(h[j]);
  return BinaryForm(std::move(out)).Normalized();
}

}  // namespace mwl
