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

// Plane quartics from an Aronhold set of seven bitangents, via Riemann's
// equations, and exact verification of the 28 bitangent lines.
//
// Coordinates are (t0, t1, t2). The Aronhold set is
//   L1 = V(t0), L2 = V(t1), L3 = V(t2), L4 = V(t0 + t1 + t2),
//   L(4+i) = V(a_0i t0 + a_1i t1 + a_2i t2), i = 1, 2, 3.

#ifndef MWL_BITANGENTS_HPP_
#define MWL_BITANGENTS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mwl/exactmath.hpp"

namespace mwl {

// a[j][i - 1] is the coefficient a_ji of t_j in L(4+i).
struct AronholdInput {
  std::array<std::array<Rational, 3>, 3> a;
};

class InvalidAronholdInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DegenerateDenominator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DuplicateLine : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ZeroRestriction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructed line failed the bitangency check. label names the line.
class VerificationFailed : public std::runtime_error {
 public:
  VerificationFailed(std::string label, const std::string& what)
      : std::runtime_error(what), label_(std::move(label)) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

struct LinearForm {
  std::array<Rational, 3> c;  // c0 t0 + c1 t1 + c2 t2

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
  LinearForm operator+(const LinearForm& o) const;
  LinearForm Scaled(const Rational& s) const;
  bool operator==(const LinearForm&) const = default;
};

LinearForm Coordinate(int j);  // t_j
bool Proportional(const LinearForm& x, const LinearForm& y);

// Homogeneous form of fixed degree in (t0, t1, t2). Monomials are ordered by
// descending exponent of t0, then of t1.
class TernaryForm {
 public:
  using Exponent = std::array<int, 3>;

  explicit TernaryForm(int degree);
  static TernaryForm FromLinear(const LinearForm& l);

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Rational& operator[](const Exponent& e) { return coeffs_[Index(e)]; }
  const Rational& operator[](const Exponent& e) const { return coeffs_[Index(e)]; }

  TernaryForm operator+(const TernaryForm& o) const;
  TernaryForm operator-(const TernaryForm& o) const;
  TernaryForm operator*(const TernaryForm& o) const;
  TernaryForm Scaled(const Rational& s) const;

  bool operator==(const TernaryForm&) const = default;

  static std::vector<Exponent> Monomials(int degree);

 private:
  std::size_t Index(const Exponent& e) const;

  int degree_;
  std::vector<Rational> coeffs_;
};

struct RiemannSolution {
  std::array<Rational, 3> lambda;
  std::array<Rational, 3> k;
  std::array<LinearForm, 3> u;
  // Left side of the i = 3 u-equation after substitution; always zero on
  // return (InconsistentSystem otherwise).
  LinearForm fourth_residual;
};

// Throws InvalidAronholdInput naming the violated invariant.
void ValidateAronhold(const AronholdInput& in);

// Solves the lambda system, the k system and the u equations for i = 1, 2,
// then checks the i = 3 equation exactly.
RiemannSolution SolveRiemann(const AronholdInput& in);

// (t0 u0)^2 + (t1 u1)^2 + (t2 u2)^2 - 2 t0u0 t1u1 - 2 t1u1 t2u2 - 2 t2u2 t0u0,
// the rationalization of sqrt(t0 u0) + sqrt(t1 u1) + sqrt(t2 u2) = 0.
TernaryForm BuildQuartic(const std::array<LinearForm, 3>& u);

struct LabeledLine {
  std::string label;   // "A1".."A7", or "F<family>.<index>"
  std::string family;  // "aronhold" or "1".."7"
  LinearForm form;
};

// The 7 Aronhold lines followed by families (1)..(7), 28 lines in all.
// Throws DegenerateDenominator or DuplicateLine for non-general input.
std::vector<LabeledLine> AllBitangents(const AronholdInput& in, const RiemannSolution& sol);

enum class Tangency { kTrueBitangent, kHyperflexLine, kNotBitangent };
std::string_view TangencyName(Tangency t);

// f restricted to the line, parametrized by two points spanning it.
BinaryForm RestrictToLine(const TernaryForm& f, const LinearForm& line);

// Classification of a binary quartic: c q^2 with disc(q) != 0 is a true
// bitangent, c l^4 a hyperflex line. Throws ZeroRestriction on zero.
Tangency ClassifyRestriction(const BinaryForm& b);

Tangency VerifyBitangent(const LinearForm& line, const TernaryForm& f);

// Index triples (ascending) of concurrent lines. Throws std::invalid_argument
// if two lines are proportional.
std::vector<std::array<int, 3>> ConcurrencyReport(std::span<const LinearForm> lines);

struct BitangentReport {
  AronholdInput input;
  RiemannSolution solution;
  TernaryForm quartic{4};
  std::vector<LabeledLine> lines;
  std::vector<Tangency> tangency;
  std::vector<std::array<int, 3>> concurrent_triples;
};

// Full pipeline. Every line is verified; a line that is not a bitangent
// raises VerificationFailed naming it.
BitangentReport AnalyzeAronhold(const AronholdInput& in);

// Random rational input, redrawn until every nondegeneracy predicate
// (nonzero entries, solvable systems, nonzero denominators, 28 distinct
// lines) holds. Concurrency is not filtered. Deterministic in seed.
AronholdInput SampleAronhold(std::uint64_t seed);

}  // namespace mwl

#endif  // MWL_BITANGENTS_HPP_
