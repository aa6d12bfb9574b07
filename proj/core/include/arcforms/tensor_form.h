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

// The tensor form of an arc.
//
// F(Y_1, ..., Y_{k-1}) is homogeneous of degree t in each block Y_m of k
// variables and satisfies F(a_1, ..., a_{k-1}) = g(a_1, ..., a_{k-1}) for
// every tuple of arc points. It is assembled from the values of g on a
// t-socle (arc points whose Veronese images span the span of the whole
// arc's image): write every Veronese vector in a basis B whose first w
// columns are the socle images and whose remaining columns are unit vectors,
// and let F read off the first w coordinates in every block and pair them
// with g on the socle. Dropping the unit-vector coordinates is one choice of
// extension; any other choice differs by forms vanishing on the arc in some
// block.
//
// Block congruence. Two multiforms are congruent modulo Phi_t in every
// block iff they agree on all tuples of arc points: the quotient of the
// degree-t forms by Phi_t is dual to span(nu(A)), which is spanned by the
// arc images, so a multilinear functional vanishing on all arc tuples
// vanishes on span(nu(A))^{(x) k-1}. IsBlockCongruent tests exactly that.

#ifndef ARCFORMS_TENSOR_FORM_H_
#define ARCFORMS_TENSOR_FORM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "arcforms/forms.h"
#include "arcforms/geometry.h"
#include "arcforms/linalg.h"
#include "arcforms/report.h"
#include "arcforms/tangents.h"

namespace arcforms {

// Multihomogeneous form of degree t in each of `blocks` blocks of k
// variables. Coefficients are a row-major tensor of extent N = C(k+t-1, t)
// per mode (mode 0 slowest), each mode in canonical monomial order.
struct MultiForm {
  std::size_t k = 0;
  std::size_t blocks = 0;
  std::uint32_t t = 0;
  std::vector<Element> coeffs;

  static MultiForm Zero(std::size_t k, std::size_t blocks, std::uint32_t t);

  std::size_t extent() const { return MonomialCount(k, t); }
  std::size_t Offset(std::span<const std::size_t> index) const;
  Element at(std::span<const std::size_t> index) const { return coeffs[Offset(index)]; }
  Element& at(std::span<const std::size_t> index) { return coeffs[Offset(index)]; }

  friend bool operator==(const MultiForm&, const MultiForm&) = default;
};

Element EvaluateMultiForm(const Field& f, const MultiForm& form,
                          std::span<const Vector> points);

// Multiplies mode `mode` of a row-major tensor by `m` (rows x dims[mode]);
// dims[mode] becomes m.rows().
Vector ContractMode(const Field& f, std::span<const Element> tensor,
                    std::vector<std::size_t>& dims, std::size_t mode, const Matrix& m);

MultiForm Sub(const Field& f, const MultiForm& a, const MultiForm& b);
MultiForm Scale(const Field& f, Element c, const MultiForm& a);

// F(Y_{perm[0]}, ..., Y_{perm[b-1]}) as a multiform in (Y_0, ..., Y_{b-1}).
MultiForm PermuteBlocks(const MultiForm& form, std::span<const std::size_t> perm);

struct Socle {
  IndexTuple indices;
  std::size_t w() const { return indices.size(); }
};

// Greedy in arc order: keep a point when its Veronese image raises the rank.
Socle ComputeSocle(const Arc& arc, std::uint32_t t);

enum class ComplementOrder { kAscending, kDescending };

struct BasisExtension {
  std::size_t w = 0;
  Matrix basis;    // N x N; columns 0..w-1 are the socle Veronese vectors
  Matrix inverse;
};

// Completes the socle images to a basis with unit vectors, scanning
// coordinates in the given order.
BasisExtension ExtendBasis(const Arc& arc, const Socle& socle, std::uint32_t t,
                           ComplementOrder order);

MultiForm BuildTensorForm(const TangentSystem& ts,
                          ComplementOrder order = ComplementOrder::kAscending);

// Contracts the first blocks-1 modes with the Veronese images of `prefix`.
HomogeneousForm PartialEvaluate(const Field& f, const MultiForm& form,
                                std::span<const Vector> prefix);

// Values of the form on every tuple of arc points, row-major over
// {0..n-1}^blocks.
Vector ArcTupleValues(const MultiForm& form, const Arc& arc);

bool IsBlockCongruent(const MultiForm& d, const Arc& arc);

struct TensorVerifyOptions {
  // Also search for a correction inside the Phi_t blocks that makes the
  // tangent restriction exact (recorded, not asserted).
  bool search_exact = false;
};

// Defining contract and properties (i)-(iv).
Report VerifyTensorForm(const TangentSystem& ts, const MultiForm& form,
                        const TensorVerifyOptions& options = {});

// Coefficient of Y_1^{i_1} ... Y_{k-2}^{i_{k-2}} in
//   F(Y_1 + X, ..., Y_{k-2} + X, X) - F(Y_1, ..., Y_{k-2}, X),
// a form in X of degree (k-1)t - sum |i_m|.
HomogeneousForm ShiftExtract(const Field& f, const MultiForm& form,
                             std::span<const MultiIndex> exponents);

// Every exponent sequence accepted by ShiftExtract.
std::vector<std::vector<MultiIndex>> AdmissibleExponents(std::size_t k,
                                                         std::size_t count,
                                                         std::uint32_t t);

// Sweeps ShiftExtract over every admissible exponent sequence. Vanishing on
// the arc is asserted only when no degree-t form vanishes on the arc.
Report VerifyShiftExtraction(const TangentSystem& ts, const MultiForm& form);

struct QuadricCheck {
  std::size_t phi2_dim = 0;
  std::optional<HomogeneousForm> quadric;
};

// For an arc of size q + 1 in PG(3, q), q odd: a quadric through the arc.
// Throws kPreconditionFailed otherwise.
QuadricCheck CheckQuadric(const Arc& arc);

// Whether some multiform that is zero on the arc in the last block makes
// F(a_1, ..., a_{k-2}, X) = +-f_S(X) hold exactly.
nlohmann::json SearchExactCorrection(const TangentSystem& ts, const MultiForm& form);

}  // namespace arcforms

#endif  // ARCFORMS_TENSOR_FORM_H_
