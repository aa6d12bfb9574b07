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

// The dual hypersurface phi of an arc.
//
// phi(Z_1, ..., Z_k) has degree mt, with m = 1 for q even and m = 2 for q
// odd. Substituting Z_j = det_j(X_1, ..., X_{k-1}) (the maximal minor with
// column j removed) gives G, which satisfies G(y_S, X) = f_S(X)^m for the
// points y_S of every (k-2)-subset S.
//
// The hyperplane spanned by rows X_1..X_{k-1} is {u : det(X, u) = 0}, and by
// Laplace expansion det(X, u) = sum_j (-1)^{k+j} u_j det_j(X) (1-based j).
// A hyperplane with coordinates w therefore sits at Z_j = (-1)^{k+j} w_j.

#ifndef ARCFORMS_SBBT_H_
#define ARCFORMS_SBBT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arcforms/combinatorics.h"
#include "arcforms/forms.h"
#include "arcforms/geometry.h"
#include "arcforms/report.h"
#include "arcforms/tangents.h"

namespace arcforms {

struct SbbtForm {
  std::uint32_t m = 0;
  IndexTuple e;          // the first mt + k - 1 arc indices
  HomogeneousForm phi;   // degree mt in Z_1..Z_k

  friend bool operator==(const SbbtForm&, const SbbtForm&) = default;
};

// Determinant of the k-1 rows with column j (0-based) removed.
Element DetMinor(const Field& f, std::span<const Vector> rows, std::size_t j);

// Z(rows) = (det_0(rows), ..., det_{k-1}(rows)).
Vector MinorVector(const Field& f, std::span<const Vector> rows);

// L_u(Z) with det(X, u) = L_u(Z(X)).
LinearForm LaplaceForm(const Field& f, std::span<const Element> u);

// Z coordinates of the hyperplane with coordinate vector w.
Vector DualToZ(const Field& f, std::span<const Element> w);

// Throws kSizeTooSmall when n < mt + k - 1 and kDegenerateT when t < 1.
SbbtForm BuildSbbt(const TangentSystem& ts);

Element EvaluateG(const Field& f, const SbbtForm& sb, std::span<const Vector> rows);

// G(prefix, X) as a form of degree mt in X, for k-2 prefix rows.
HomogeneousForm GRestriction(const Field& f, const SbbtForm& sb,
                             std::span<const Vector> prefix);

struct DualClass {
  Vector dual;
  std::size_t arc_points_on = 0;
  Element phi_value;
};

// phi at every hyperplane of the ambient space, in enumeration order.
std::vector<DualClass> ClassifyDuals(const Arc& arc, const SbbtForm& sb);

// Common point of the tangent lines of a plane arc with t = 1 over an even
// field, computed from the tangents alone; nullopt when they do not concur.
std::optional<Vector> TangentNucleus(const Arc& arc);

// Degree, the restriction identity for every S, G = g^m on arc tuples, the
// hyperplane sweep and random row permutations.
Report VerifySbbt(const TangentSystem& ts, const SbbtForm& sb, std::uint64_t seed = 0);

}  // namespace arcforms

#endif  // ARCFORMS_SBBT_H_
