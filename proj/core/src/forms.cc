// Copyright 2026 The arcforms Authors
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

#include "arcforms/forms.h"

#include <numeric>
#include <string>

#include "arcforms/combinatorics.h"
#include "arcforms/errors.h"

namespace arcforms {
namespace {

void RequireSameShape(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.k != b.k || a.t != b.t) {
    throw Error(ErrorCode::kDimensionMismatch, "forms differ in shape");
  }
}

void AppendMonomials(std::size_t k, std::uint32_t remaining,
                     std::vector<std::uint32_t>& prefix,
                     std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == k) {
    prefix.push_back(remaining);
    out.push_back(MultiIndex{prefix});
    prefix.pop_back();
    return;
  }
  for (std::uint32_t d = remaining + 1; d-- > 0;) {
    prefix.push_back(d);
    AppendMonomials(k, remaining - d, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::uint32_t MultiIndex::total() const {
  return std::accumulate(degrees.begin(), degrees.end(), std::uint32_t{0});
}

std::size_t MonomialCount(std::size_t k, std::uint32_t t) {
  if (k == 0) return t == 0 ? 1 : 0;
  return static_cast<std::size_t>(Binomial(k + t - 1, t));
}

std::vector<MultiIndex> MonomialBasis(std::size_t k, std::uint32_t t) {
  std::vector<MultiIndex> out;
  if (k == 0) {
    if (t == 0) out.push_back(MultiIndex{});
    return out;
  }
  out.reserve(MonomialCount(k, t));
  std::vector<std::uint32_t> prefix;
  AppendMonomials(k, t, prefix, out);
  return out;
}

std::size_t MonomialIndex(std::span<const std::uint32_t> degrees) {
  // Count the tuples of the same total that precede `degrees`, i.e. that are
  // lexicographically larger.
  const std::size_t k = degrees.size();
  std::uint32_t remaining = 0;
  for (std::uint32_t d : degrees) remaining += d;
  std::size_t index = 0;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const std::size_t tail = k - j - 1;
    for (std::uint32_t v = degrees[j] + 1; v <= remaining; ++v) {
      index += MonomialCount(tail, remaining - v);
    }
    remaining -= degrees[j];
  }
  return index;
}

HomogeneousForm HomogeneousForm::Zero(std::size_t k, std::uint32_t t) {
  return HomogeneousForm{k, t, Vector(MonomialCount(k, t))};
}

HomogeneousForm HomogeneousForm::Constant(std::size_t k, Element c) {
  return HomogeneousForm{k, 0, Vector{c}};
}

HomogeneousForm HomogeneousForm::Linear(std::span<const Element> coeffs) {
  return HomogeneousForm{coeffs.size(), 1, Vector(coeffs.begin(), coeffs.end())};
}

Element HomogeneousForm::coeff(const MultiIndex& m) const {
  if (m.degrees.size() != k || m.total() != t) {
    throw Error(ErrorCode::kDimensionMismatch, "monomial does not match form");
  }
  return coeffs[MonomialIndex(m.degrees)];
}

Vector MonomialValues(const Field& f, std::span<const Element> x, std::uint32_t t) {
  const std::size_t k = x.size();
  const auto basis = MonomialBasis(k, t);
  // Powers x_i^0 .. x_i^t.
  std::vector<Vector> powers(k, Vector(t + 1));
  for (std::size_t i = 0; i < k; ++i) {
    powers[i][0] = Field::one();
    for (std::uint32_t e = 1; e <= t; ++e) powers[i][e] = f.Mul(powers[i][e - 1], x[i]);
  }
  Vector out;
  out.reserve(basis.size());
  for (const auto& m : basis) {
    Element v = Field::one();
    for (std::size_t i = 0; i < k; ++i) v = f.Mul(v, powers[i][m.degrees[i]]);
    out.push_back(v);
  }
  return out;
}

Vector Veronese(const Field& f, std::span<const Element> x, std::uint32_t t) {
  if (IsZeroVector(x)) {
    throw Error(ErrorCode::kZeroVector, "Veronese image of the zero vector");
  }
  return MonomialValues(f, x, t);
}

Element EvaluateForm(const Field& f, const HomogeneousForm& form,
                     std::span<const Element> x) {
  if (x.size() != form.k) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(x.size()) + " coordinates, form has " +
                    std::to_string(form.k) + " variables");
  }
  return Dot(f, form.coeffs, MonomialValues(f, x, form.t));
}

HomogeneousForm Add(const Field& f, const HomogeneousForm& a, const HomogeneousForm& b) {
  RequireSameShape(a, b);
  HomogeneousForm out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = f.Add(a.coeffs[i], b.coeffs[i]);
  }
  return out;
}

HomogeneousForm Sub(const Field& f, const HomogeneousForm& a, const HomogeneousForm& b) {
  RequireSameShape(a, b);
  HomogeneousForm out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = f.Sub(a.coeffs[i], b.coeffs[i]);
  }
  return out;
}

HomogeneousForm Scale(const Field& f, Element c, const HomogeneousForm& a) {
  HomogeneousForm out = a;
  for (auto& e : out.coeffs) e = f.Mul(c, e);
  return out;
}

HomogeneousForm Multiply(const Field& f, const HomogeneousForm& a,
                         const HomogeneousForm& b) {
  if (a.k != b.k) {
    throw Error(ErrorCode::kDimensionMismatch, "forms in different variable counts");
  }
  const auto ma = MonomialBasis(a.k, a.t);
  const auto mb = MonomialBasis(b.k, b.t);
  HomogeneousForm out = HomogeneousForm::Zero(a.k, a.t + b.t);
  std::vector<std::uint32_t> sum(a.k);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      for (std::size_t v = 0; v < a.k; ++v) sum[v] = ma[i].degrees[v] + mb[j].degrees[v];
      Element& slot = out.coeffs[MonomialIndex(sum)];
      slot = f.Add(slot, f.Mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return out;
}

HomogeneousForm Power(const Field& f, const HomogeneousForm& a, std::uint32_t m) {
  HomogeneousForm out = HomogeneousForm::Constant(a.k, Field::one());
  for (std::uint32_t i = 0; i < m; ++i) out = Multiply(f, out, a);
  return out;
}

HomogeneousForm ProductLinearForms(const Field& f, std::size_t k,
                                   std::span<const LinearForm> forms) {
  HomogeneousForm out = HomogeneousForm::Constant(k, Field::one());
  for (const auto& l : forms) {
    if (l.k != k || l.t != 1) {
      throw Error(ErrorCode::kDimensionMismatch, "factor is not a linear form in k variables");
    }
    out = Multiply(f, out, l);
  }
  return out;
}

HomogeneousForm SubstituteLinear(const Field& f, const HomogeneousForm& form,
                                 std::span<const LinearForm> substitution) {
  if (substitution.size() != form.k) {
    throw Error(ErrorCode::kDimensionMismatch, "substitution arity mismatch");
  }
  const std::size_t new_k = substitution.empty() ? 0 : substitution.front().k;
  for (const auto& l : substitution) {
    if (l.k != new_k || l.t != 1) {
      throw Error(ErrorCode::kDimensionMismatch, "substitution must use linear forms");
    }
  }
  // Powers l_i^0 .. l_i^t.
  std::vector<std::vector<HomogeneousForm>> powers(form.k);
  for (std::size_t i = 0; i < form.k; ++i) {
    powers[i].push_back(HomogeneousForm::Constant(new_k, Field::one()));
    for (std::uint32_t e = 1; e <= form.t; ++e) {
      powers[i].push_back(Multiply(f, powers[i].back(), substitution[i]));
    }
  }
  HomogeneousForm out = HomogeneousForm::Zero(new_k, form.t);
  const auto basis = MonomialBasis(form.k, form.t);
  for (std::size_t m = 0; m < basis.size(); ++m) {
    if (form.coeffs[m].is_zero()) continue;
    HomogeneousForm term = HomogeneousForm::Constant(new_k, form.coeffs[m]);
    for (std::size_t i = 0; i < form.k; ++i) {
      term = Multiply(f, term, powers[i][basis[m].degrees[i]]);
    }
    out = Add(f, out, term);
  }
  return out;
}

Matrix VeroneseMatrix(const Field& f, std::span<const Vector> points,
                      std::uint32_t t) {
  if (points.empty()) return Matrix(0, 0);
  const std::size_t k = points.front().size();
  Matrix m(0, MonomialCount(k, t));
  for (const auto& x : points) {
    if (x.size() != k) throw Error(ErrorCode::kDimensionMismatch, "points differ in length");
    m.AppendRow(Veronese(f, x, t));
  }
  return m;
}

HomogeneousForm FormSubspace::BasisForm(std::size_t i) const {
  return HomogeneousForm{k, t, basis.RowVector(i)};
}

FormSubspace VanishingSubspace(const Field& f, std::size_t k,
                               std::span<const Vector> points, std::uint32_t t) {
  FormSubspace out{k, t, Matrix(0, MonomialCount(k, t))};
  for (const auto& x : points) {
    if (x.size() != k) throw Error(ErrorCode::kDimensionMismatch, "point length mismatch");
  }
  Matrix v = VeroneseMatrix(f, points, t);
  if (points.empty()) v = Matrix(0, MonomialCount(k, t));
  out.basis = RightNullspace(f, v).basis;
  return out;
}

bool VanishesOn(const Field& f, const HomogeneousForm& form,
                std::span<const Vector> points) {
  for (const auto& x : points) {
    if (!EvaluateForm(f, form, x).is_zero()) return false;
  }
  return true;
}

}  // namespace arcforms
