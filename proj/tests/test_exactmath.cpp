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

#include <random>

#include "mwl/exactmath.hpp"
#include "oracles.hpp"

using namespace mwl;

namespace {

BinaryForm Form(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return BinaryForm(v);
}

IntMatrix RandomMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<int> d(-bound, bound);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  }
  return m;
}

std::vector<std::vector<mpq_class>> ToRows(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  }
  return rows;
}

std::vector<std::vector<std::int64_t>> ToInt64(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c).get_si();
  }
  return rows;
}

}  // namespace

TEST_CASE("rank over Q agrees with plain elimination") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    IntMatrix m = RandomMatrix(rng, rows, cols, 3);
    if (it % 3 == 0 && rows > 1) {
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 2 - m(1 % rows, c);
    }
    CHECK(RankQ(m) == static_cast<std::size_t>(oracle::RankQ(ToRows(m))));
  }
  CHECK(RankQ(IntMatrix(3, 4)) == 0);
  CHECK(RankQ(IntMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("rank mod p agrees with Fermat-inverse elimination") {
  std::mt19937_64 rng(12);
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    for (int it = 0; it < 100; ++it) {
      const IntMatrix m = RandomMatrix(rng, 1 + rng() % 7, 1 + rng() % 7, 9);
      CHECK(RankFp(m, p) == static_cast<std::size_t>(oracle::RankModP(ToInt64(m), p)));
    }
  }
  const IntMatrix two{{2, 0}, {0, 2}};
  CHECK_THROWS_AS(RankFp(two, 2), std::invalid_argument);
  CHECK_THROWS_AS(RankFp(two, 9), std::invalid_argument);
  CHECK(RankFp(IntMatrix{{3, 6}, {1, 2}}, 3) == 1);
}

TEST_CASE("nullspace mod p is a kernel basis of the right dimension") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    const std::int64_t p = std::array<std::int64_t, 3>{3, 5, 7}[it % 3];
    const IntMatrix m = RandomMatrix(rng, 1 + rng() % 6, 1 + rng() % 8, 4);
    const auto basis = NullspaceModP(m, p);
    CHECK(basis.size() == m.cols() - RankFp(m, p));
    for (const auto& v : basis) {
      REQUIRE(v.size() == m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
        CHECK(mpz_class(acc % p) == 0);
      }
      for (auto x : v) CHECK((x >= 0 && x < p));
    }
    IntMatrix stacked(basis.size(), m.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t c = 0; c < m.cols(); ++c) stacked(i, c) = basis[i][c];
    }
    if (!basis.empty()) CHECK(RankFp(stacked, p) == basis.size());
  }
}

TEST_CASE("primes") {
  for (std::int64_t n = -3; n < 500; ++n) CHECK(IsPrime(n) == oracle::IsPrime(n));
  CHECK_FALSE(IsOddPrime(2));
  CHECK(IsOddPrime(3));
  CHECK(PrimeFactors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(PrimeFactors(1).empty());
  CHECK(PrimeFactors(-49) == std::vector<std::int64_t>{7});
}

TEST_CASE("Hermite normal form") {
  const IntMatrix h = Hnf(IntMatrix{{2, 4}, {3, 5}});
  CHECK(h == IntMatrix{{1, 1}, {0, 2}});
  CHECK(Hnf(IntMatrix{{1, 2}, {2, 4}}) == IntMatrix{{1, 2}});

  std::mt19937_64 rng(14);
  for (int it = 0; it < 100; ++it) {
    const IntMatrix m = RandomMatrix(rng, 1 + rng() % 6, 1 + rng() % 6, 6);
    const IntMatrix h2 = Hnf(m);
    CHECK(h2.rows() == RankQ(m));
    // Echelon shape with reduced entries above pivots.
    std::size_t last = 0;
    for (std::size_t r = 0; r < h2.rows(); ++r) {
      std::size_t c = 0;
      while (h2(r, c) == 0) ++c;
      if (r > 0) CHECK(c > last);
      last = c;
      CHECK(h2(r, c) > 0);
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(h2(above, c) >= 0);
        CHECK(h2(above, c) < h2(r, c));
      }
    }
    // Same row lattice: every HNF row has integer coordinates in terms of
    // the original rows' HNF and vice versa, which holds iff Hnf is
    // idempotent on the stacked matrix.
    IntMatrix stacked(m.rows() + h2.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) stacked(r, c) = m(r, c);
    }
    for (std::size_t r = 0; r < h2.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) stacked(m.rows() + r, c) = h2(r, c);
    }
    CHECK(Hnf(stacked) == h2);
    CHECK(Hnf(h2) == h2);
  }
}

TEST_CASE("Smith divisors") {
  CHECK(SnfDivisors(IntMatrix{{2, 0}, {0, 4}}) == std::vector<Integer>{2, 4});
  CHECK(SnfDivisors(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(SnfDivisors(IntMatrix{{0, 0}, {0, 0}}).empty());
  std::mt19937_64 rng(15);
  for (int it = 0; it < 100; ++it) {
    const IntMatrix m = RandomMatrix(rng, 1 + rng() % 5, 1 + rng() % 5, 5);
    const auto d = SnfDivisors(m);
    CHECK(d.size() == RankQ(m));
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
    // For square nonsingular m the product is |det|.
    if (m.rows() == m.cols() && d.size() == m.rows()) {
      mpz_class prod = 1;
      for (const auto& x : d) prod *= x;
      RatMatrix q(m.rows(), m.cols());
      std::vector<std::vector<mpq_class>> rows = ToRows(m);
      // det by elimination over Q
      mpq_class det = 1;
      for (std::size_t c = 0; c < rows.size(); ++c) {
        std::size_t piv = c;
        while (rows[piv][c] == 0) ++piv;
        if (piv != c) {
          std::swap(rows[piv], rows[c]);
          det = -det;
        }
        det *= rows[c][c];
        for (std::size_t r = c + 1; r < rows.size(); ++r) {
          const mpq_class f = rows[r][c] / rows[c][c];
          for (std::size_t k = c; k < rows.size(); ++k) rows[r][k] -= f * rows[c][k];
        }
      }
      CHECK(mpq_class(prod) == abs(det));
    }
  }
}

TEST_CASE("rational solve") {
  RatMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  const RatVector x = SolveRational(a, {5, 6});
  CHECK(x[0] == -4);
  CHECK(x[1] == Rational(9, 2));
  a(1, 0) = 2;
  a(1, 1) = 4;
  CHECK_THROWS_AS(SolveRational(a, {1, 1}), SingularSystem);
}

TEST_CASE("rational parsing") {
  CHECK(ParseRational("-6/4") == Rational(-3, 2));
  CHECK(ParseRational("7") == 7);
  CHECK(FormatRational(Rational(-3, 2)) == "-3/2");
  CHECK(FormatRational(Rational(5)) == "5");
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "--1", "1/-2"}) {
    CHECK_THROWS_AS(ParseRational(bad), std::invalid_argument);
  }
}

TEST_CASE("binary form gcd") {
  // gcd(s^2 t^2, s t^3) = s t^2
  const BinaryForm g = BinaryGcd(Form({0, 0, 1, 0, 0}), Form({0, 0, 0, 1, 0}));
  CHECK(g == Form({0, 0, 1, 0}));
  // (s - t)(s + 2t) and (s - t)^2 share s - t
  const BinaryForm a = Form({1, -1}) * Form({1, 2});
  const BinaryForm b = Form({1, -1}) * Form({1, -1});
  CHECK(BinaryGcd(a, b) == Form({1, -1}));
  CHECK(BinaryGcd(a, BinaryForm(std::vector<Rational>{0, 0, 0})) == a.Normalized());
  CHECK_THROWS_AS(BinaryGcd(Form({0, 0}), Form({0})), std::invalid_argument);

  std::mt19937_64 rng(16);
  std::uniform_int_distribution<int> d(-4, 4);
  auto random_form = [&](int deg) {
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = d(rng);
    if (c[0] == 0) c[0] = 1;
    return BinaryForm(c);
  };
  for (int it = 0; it < 200; ++it) {
    const BinaryForm common = random_form(1 + it % 2);
    const BinaryForm f = common * random_form(2);
    const BinaryForm h = common * random_form(1);
    const BinaryForm gg = BinaryGcd(f, h);
    CHECK(gg.degree() >= common.degree());
    CHECK(ExactQuotient(f, gg).has_value());
    CHECK(ExactQuotient(h, gg).has_value());
    CHECK(ExactQuotient(gg, common.Normalized()).has_value());
  }
}

TEST_CASE("binary form arithmetic") {
  const BinaryForm f = Form({1, 2, 3});  // s^2 + 2st + 3t^2
  CHECK(f.DerivativeS() == Form({2, 2}));
  CHECK(f.DerivativeT() == Form({2, 6}));
  CHECK(f.QuadraticDiscriminant() == -8);
  CHECK((f + f) == f.Scaled(2));
  CHECK(Form({0, 2, 4}).Normalized() == Form({0, 1, 2}));
  CHECK(ExactQuotient(f * Form({1, 1}), Form({1, 1})) == f);
  CHECK_FALSE(ExactQuotient(f, Form({1, 1})).has_value());
}
