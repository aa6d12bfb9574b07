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

// Homogeneous forms in k variables, stored densely.
//
// The coefficient of a degree-t form is indexed by the monomials of degree t
// in canonical order: exponent tuples (d_1, ..., d_k) sorted
// lexicographically descending. For k = 3, t = 2 this is
//   X1^2, X1X2, X1X3, X2^2, X2X3, X3^2.
// The same order indexes the Veronese coordinates, so evaluating a form is
// the dot product of its coefficients with the Veronese image of the point.

#ifndef ARCFORMS_FORMS_H_
#define ARCFORMS_FORMS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "arcforms/field.h"
#include "arcforms/linalg.h"

namespace arcforms {

struct MultiIndex {
  std::vector<std::uint32_t> degrees;

  std::uint32_t total() const;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

// C(k+t-1, t).
std::size_t MonomialCount(std::size_t k, std::uint32_t t);
std::vector<MultiIndex> MonomialBasis(std::size_t k, std::uint32_t t);
// Position of `degrees` among the monomials of its own length and total.
std::size_t MonomialIndex(std::span<const std::uint32_t> degrees);

struct HomogeneousForm {
  std::size_t k = 0;
  std::uint32_t t = 0;
  std::vector<Element> coeffs;

  static HomogeneousForm Zero(std::size_t k, std::uint32_t t);
  static HomogeneousForm Constant(std::size_t k, Element c);
  // Linear form sum_i coeffs[i] X_i.
  static HomogeneousForm Linear(std::span<const Element> coeffs);

  bool is_zero() const { return IsZeroVector(coeffs); }
  Element coeff(const MultiIndex& m) const;

  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;
};

// A form of degree 1.
using LinearForm = HomogeneousForm;

Element EvaluateForm(const Field& f, const HomogeneousForm& form,
                     std::span<const Element> x);

// Vector of all degree-t monomials of x in canonical order. Throws
// kZeroVector for x = 0.
Vector Veronese(const Field& f, std::span<const Element> x, std::uint32_t t);
// As Veronese, but accepts the zero vector.
Vector MonomialValues(const Field& f, std::span<const Element> x, std::uint32_t t);

HomogeneousForm Add(const Field& f, const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm Sub(const Field& f, const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm Scale(const Field& f, Element c, const HomogeneousForm& a);
HomogeneousForm Multiply(const Field& f, const HomogeneousForm& a,
                         const HomogeneousForm& b);
HomogeneousForm Power(const Field& f, const HomogeneousForm& a, std::uint32_t m);

// Product of linear forms in k variables; the empty product is the constant 1.
HomogeneousForm ProductLinearForms(const Field& f, std::size_t k,
                                   std::span<const LinearForm> forms);

// form(l_1(Y), ..., l_k(Y)) where each l_i is a linear form in the new
// variables Y.
HomogeneousForm SubstituteLinear(const Field& f, const HomogeneousForm& form,
                                 std::span<const LinearForm> substitution);

// Rows are the Veronese images of the points.
Matrix VeroneseMatrix(const Field& f, std::span<const Vector> points,
                      std::uint32_t t);

struct FormSubspace {
  std::size_t k = 0;
  std::uint32_t t = 0;
  Matrix basis;  // rows are coefficient vectors, reduced row-echelon form

  std::size_t dim() const { return basis.rows(); }
  HomogeneousForm BasisForm(std::size_t i) const;
};

// Degree-t forms vanishing at every point: the right nullspace of the
// Veronese matrix.
FormSubspace VanishingSubspace(const Field& f, std::size_t k,
                               std::span<const Vector> points, std::uint32_t t);

bool VanishesOn(const Field& f, const HomogeneousForm& form,
                std::span<const Vector> points);

}  // namespace arcforms

#endif  // ARCFORMS_FORMS_H_
