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

#include "mwl/bitangents.hpp"

#include <random>

namespace mwl {
namespace {

LinearForm Cross(const LinearForm& x, const LinearForm& y) {
  return {{x.c[1] * y.c[2] - x.c[2] * y.c[1], x.c[2] * y.c[0] - x.c[0] * y.c[2],
           x.c[0] * y.c[1] - x.c[1] * y.c[0]}};
}

std::string Name(const char* sym, int j, int i) {
  return std::string(sym) + "_" + std::to_string(j) + std::to_string(i);
}

}  // namespace

LinearForm LinearForm::operator+(const LinearForm& o) const {
  return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}};
}

LinearForm LinearForm::Scaled(const Rational& s) const {
  return {{c[0] * s, c[1] * s, c[2] * s}};
}

LinearForm Coordinate(int j) {
  LinearForm l{{0, 0, 0}};
  l.c.at(j) = 1;
  return l;
}

bool Proportional(const LinearForm& x, const LinearForm& y) { return Cross(x, y).is_zero(); }

TernaryForm::TernaryForm(int degree)
    : degree_(degree), coeffs_(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2)) {
  if (degree < 0) throw std::invalid_argument("negative degree");
}

TernaryForm TernaryForm::FromLinear(const LinearForm& l) {
  TernaryForm f(1);
  f[{1, 0, 0}] = l.c[0];
  f[{0, 1, 0}] = l.c[1];
  f[{0, 0, 1}] = l.c[2];
  return f;
}

std::size_t TernaryForm::Index(const Exponent& e) const {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_) {
    throw std::out_of_range("exponent does not match the form's degree");
  }
  const int rest = degree_ - e[0];
  return static_cast<std::size_t>(rest * (rest + 1) / 2 + (rest - e[1]));
}

std::vector<TernaryForm::Exponent> TernaryForm::Monomials(int degree) {
  std::vector<Exponent> out;
  for (int e0 = degree; e0 >= 0; --e0) {
    for (int e1 = degree - e0; e1 >= 0; --e1) out.push_back({e0, e1, degree - e0 - e1});
  }
  return out;
}

bool TernaryForm::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

TernaryForm TernaryForm::operator+(const TernaryForm& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in sum");
  TernaryForm out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

TernaryForm TernaryForm::operator-(const TernaryForm& o) const {
  return *this + o.Scaled(-1);
}

TernaryForm TernaryForm::operator*(const TernaryForm& o) const {
  TernaryForm out(degree_ + o.degree_);
  const auto left = Monomials(degree_);
  const auto right = Monomials(o.degree_);
  for (const auto& a : left) {
    const Rational& ca = (*this)[a];
    if (ca == 0) continue;
    for (const auto& b : right) {
      const Rational& cb = o[b];
      if (cb == 0) continue;
      out[{a[0] + b[0], a[1] + b[1], a[2] + b[2]}] += ca * cb;
    }
  }
  return out;
}

TernaryForm TernaryForm::Scaled(const Rational& s) const {
  TernaryForm out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

void ValidateAronhold(const AronholdInput& in) {
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      if (in.a[j][i] == 0) {
        throw InvalidAronholdInput("invariant a_ji != 0 violated: " + Name("a", j, i + 1) +
                                   " = 0");
      }
    }
  }
}

RiemannSolution SolveRiemann(const AronholdInput& in) {
  ValidateAronhold(in);
  const auto& a = in.a;
  RiemannSolution sol;

  RatMatrix lambda_system(3, 3);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) lambda_system(j, i) = 1 / a[j][i];
  }
  const RatVector minus_ones = {Rational(-1), Rational(-1), Rational(-1)};
  RatVector lambda;
  try {
    lambda = SolveRational(lambda_system, minus_ones);
  } catch (const SingularSystem&) {
    throw SingularSystem("invariant violated: the lambda system (entries 1/a_ji) is singular");
  }

  RatMatrix k_system(3, 3);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) k_system(j, i) = lambda[i] * a[j][i];
  }
  RatVector k;
  try {
    k = SolveRational(k_system, minus_ones);
  } catch (const SingularSystem&) {
    throw SingularSystem("invariant violated: the k system (entries lambda_i a_ji) is singular");
  }

  // Unknown 3 * j + m is the coefficient of t_m in u_j. Rows 3 * e + m hold
  // the t_m coefficient of equation e: e = 0 is the sum equation, e = 1, 2
  // are the equations for i = 1, 2.
  RatMatrix u_system(9, 9);
  RatVector rhs(9);
  for (int m = 0; m < 3; ++m) {
    for (int j = 0; j < 3; ++j) u_system(m, 3 * j + m) = 1;
    rhs[m] = -1;
    for (int i = 0; i < 2; ++i) {
      const int row = 3 * (i + 1) + m;
      for (int j = 0; j < 3; ++j) u_system(row, 3 * j + m) = 1 / a[j][i];
      rhs[row] = -k[i] * a[m][i];
    }
  }
  RatVector u;
  try {
    u = SolveRational(u_system, rhs);
  } catch (const SingularSystem&) {
    throw SingularSystem("the u equations for i = 1, 2 are singular");
  }

  for (int i = 0; i < 3; ++i) {
    sol.lambda[i] = lambda[i];
    sol.k[i] = k[i];
  }
  for (int j = 0; j < 3; ++j) sol.u[j] = {{u[3 * j], u[3 * j + 1], u[3 * j + 2]}};

  for (int m = 0; m < 3; ++m) {
    Rational r = k[2] * a[m][2];
    for (int j = 0; j < 3; ++j) r += sol.u[j].c[m] / a[j][2];
    sol.fourth_residual.c[m] = r;
  }
  if (!sol.fourth_residual.is_zero()) {
    throw InconsistentSystem("the u equation for i = 3 does not hold with the solved k and u");
  }
  return sol;
}

TernaryForm BuildQuartic(const std::array<LinearForm, 3>& u) {
  std::array<TernaryForm, 3> p = {TernaryForm(2), TernaryForm(2), TernaryForm(2)};
  for (int j = 0; j < 3; ++j) {
    p[j] = TernaryForm::FromLinear(Coordinate(j)) * TernaryForm::FromLinear(u[j]);
  }
  TernaryForm f = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  const TernaryForm cross = p[0] * p[1] + p[1] * p[2] + p[2] * p[0];
  return f - cross.Scaled(2);
}

std::vector<LabeledLine> AllBitangents(const AronholdInput& in, const RiemannSolution& sol) {
  const auto& a = in.a;
  const auto& k = sol.k;
  const auto& u = sol.u;
  const LinearForm t0 = Coordinate(0), t1 = Coordinate(1), t2 = Coordinate(2);
  std::vector<LabeledLine> lines;

  auto aronhold_line = [&](int i) { return LinearForm{{a[0][i], a[1][i], a[2][i]}}; };
  lines.push_back({"A1", "aronhold", t0});
  lines.push_back({"A2", "aronhold", t1});
  lines.push_back({"A3", "aronhold", t2});
  lines.push_back({"A4", "aronhold", t0 + t1 + t2});
  for (int i = 0; i < 3; ++i) {
    lines.push_back({"A" + std::to_string(5 + i), "aronhold", aronhold_line(i)});
  }

  for (int j = 0; j < 3; ++j) lines.push_back({"F1." + std::to_string(j), "1", u[j]});
  lines.push_back({"F2.0", "2", u[0] + t1 + t2});
  lines.push_back({"F2.1", "2", t0 + u[1] + t2});
  lines.push_back({"F2.2", "2", t0 + t1 + u[2]});

  // Families (3)-(5): u_j / a_ji + k_i * (sum over the other two coordinates).
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      LinearForm rest{{0, 0, 0}};
      for (int m = 0; m < 3; ++m) {
        if (m != j) rest.c[m] = k[i] * a[m][i];
      }
      lines.push_back({"F" + std::to_string(3 + j) + "." + std::to_string(i + 1),
                       std::to_string(3 + j), u[j].Scaled(1 / a[j][i]) + rest});
    }
  }

  // 1 - k_i * (product of a_mi over m != j).
  auto denominator = [&](int j, int i) {
    Rational prod = 1;
    for (int m = 0; m < 3; ++m) {
      if (m != j) prod *= a[m][i];
    }
    const Rational d = 1 - k[i] * prod;
    if (d == 0) {
      throw DegenerateDenominator("denominator 1 - k_" + std::to_string(i + 1) +
                                  " * a a vanishes for t_" + std::to_string(j));
    }
    return d;
  };
  for (int i = 0; i < 3; ++i) {
    LinearForm l{{0, 0, 0}};
    for (int j = 0; j < 3; ++j) l.c[j] = 1 / denominator(j, i);
    lines.push_back({"F6." + std::to_string(i + 1), "6", l});
  }
  for (int i = 0; i < 3; ++i) {
    LinearForm l{{0, 0, 0}};
    for (int j = 0; j < 3; ++j) l = l + u[j].Scaled(1 / (a[j][i] * denominator(j, i)));
    lines.push_back({"F7." + std::to_string(i + 1), "7", l});
  }

  for (std::size_t x = 0; x < lines.size(); ++x) {
    if (lines[x].form.is_zero()) {
      throw DuplicateLine("line " + lines[x].label + " vanishes identically");
    }
    for (std::size_t y = 0; y < x; ++y) {
      if (Proportional(lines[x].form, lines[y].form)) {
        throw DuplicateLine("lines " + lines[y].label + " and " + lines[x].label + " coincide");
      }
    }
  }
  return lines;
}

std::string_view TangencyName(Tangency t) {
  switch (t) {
    case Tangency::kTrueBitangent:
      return "true-bitangent";
    case Tangency::kHyperflexLine:
      return "hyperflex-line";
    case Tangency::kNotBitangent:
      return "NOT-bitangent";
  }
  return "unknown";
}

BinaryForm RestrictToLine(const TernaryForm& f, const LinearForm& line) {
  if (line.is_zero()) throw std::invalid_argument("zero linear form is not a line");
  // Two independent points on the line from cross products with the axes.
  std::vector<LinearForm> points;
  for (int j = 0; j < 3 && points.size() < 2; ++j) {
    const LinearForm p = Cross(line, Coordinate(j));
    if (p.is_zero()) continue;
    if (!points.empty() && Proportional(points[0], p)) continue;
    points.push_back(p);
  }
  // x_m(s, t) = P_m s + Q_m t, and its powers up to the degree of f.
  std::array<std::vector<BinaryForm>, 3> powers;
  for (int m = 0; m < 3; ++m) {
    const BinaryForm x({points[0].c[m], points[1].c[m]});
    powers[m].push_back(BinaryForm({Rational(1)}));
    for (int e = 1; e <= f.degree(); ++e) powers[m].push_back(powers[m].back() * x);
  }
  BinaryForm out(std::vector<Rational>(f.degree() + 1));
  for (const auto& e : TernaryForm::Monomials(f.degree())) {
    const Rational& c = f[e];
    if (c == 0) continue;
    out = out + (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]).Scaled(c);
  }
  return out;
}

Tangency ClassifyRestriction(const BinaryForm& b) {
  if (b.is_zero()) throw ZeroRestriction("the line is a component of the quartic");
  if (b.degree() != 4) throw std::invalid_argument("expected a binary quartic");
  // A root of multiplicity m contributes multiplicity m - 1 to gcd(b_s, b_t).
  const BinaryForm g = BinaryGcd(b.DerivativeS(), b.DerivativeT());
  if (g.degree() == 3) return Tangency::kHyperflexLine;
  if (g.degree() == 2 && g.QuadraticDiscriminant() != 0) {
    const auto q = ExactQuotient(b, g * g);
    if (q && q->degree() == 0) return Tangency::kTrueBitangent;
  }
  return Tangency::kNotBitangent;
}

Tangency VerifyBitangent(const LinearForm& line, const TernaryForm& f) {
  return ClassifyRestriction(RestrictToLine(f, line));
}

std::vector<std::array<int, 3>> ConcurrencyReport(std::span<const LinearForm> lines) {
  const int n = static_cast<int>(lines.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < x; ++y) {
      if (Proportional(lines[x], lines[y])) {
        throw std::invalid_argument("lines " + std::to_string(y) + " and " + std::to_string(x) +
                                    " are proportional");
      }
    }
  }
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const LinearForm c = Cross(lines[i], lines[j]);
      for (int k = j + 1; k < n; ++k) {
        const auto& l = lines[k].c;
        if (c.c[0] * l[0] + c.c[1] * l[1] + c.c[2] * l[2] == 0) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

BitangentReport AnalyzeAronhold(const AronholdInput& in) {
  BitangentReport report;
  report.input = in;
  report.solution = SolveRiemann(in);
  report.quartic = BuildQuartic(report.solution.u);
  report.lines = AllBitangents(in, report.solution);
  for (const auto& line : report.lines) {
    Tangency t;
    try {
      t = VerifyBitangent(line.form, report.quartic);
    } catch (const ZeroRestriction&) {
      throw VerificationFailed(line.label, "line " + line.label + " (family " + line.family +
                                               ") is a component of the quartic");
    }
    if (t == Tangency::kNotBitangent) {
      throw VerificationFailed(line.label, "line " + line.label + " (family " + line.family +
                                               ") is not a bitangent");
    }
    report.tangency.push_back(t);
  }
  std::vector<LinearForm> forms;
  for (const auto& line : report.lines) forms.push_back(line.form);
  report.concurrent_triples = ConcurrencyReport(forms);
  return report;
}

AronholdInput SampleAronhold(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Heights this large make accidental concurrences among the 28 lines rare;
  // with entries in [-9, 9] / [1, 5] about a quarter of draws had one.
  std::uniform_int_distribution<int> num(-100, 100);
  std::uniform_int_distribution<int> den(1, 30);
  for (;;) {
    AronholdInput in;
    for (auto& row : in.a) {
      for (auto& v : row) {
        int n = 0;
        while (n == 0) n = num(rng);
        v = Rational(n, den(rng));
        v.canonicalize();
      }
    }
    try {
      const RiemannSolution sol = SolveRiemann(in);
      AllBitangents(in, sol);
      return in;
    } catch (const SingularSystem&) {
    } catch (const DegenerateDenominator&) {
    } catch (const DuplicateLine&) {
    }
  }
}

}  // namespace mwl
