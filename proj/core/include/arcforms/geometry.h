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

#ifndef ARCFORMS_GEOMETRY_H_
#define ARCFORMS_GEOMETRY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arcforms/combinatorics.h"
#include "arcforms/field.h"
#include "arcforms/linalg.h"

namespace arcforms {

// Scalar multiple of v whose first nonzero coordinate is 1.
Vector Normalize(const Field& f, std::span<const Element> v);

// A point of PG(k-1, q) with a frozen vector representative. Equality is
// projective; the representative is what all scaled quantities refer to.
class ProjectivePoint {
 public:
  ProjectivePoint(const Field& f, Vector rep);

  const Vector& rep() const { return rep_; }
  const Vector& canonical() const { return canonical_; }
  std::size_t dim() const { return rep_.size(); }

  bool SameAs(const ProjectivePoint& other) const {
    return canonical_ == other.canonical_;
  }

 private:
  Vector rep_;
  Vector canonical_;
};

// The hyperplane {x : rep . x = 0}.
class DualPoint {
 public:
  explicit DualPoint(Vector rep);

  const Vector& rep() const { return rep_; }
  bool Contains(const Field& f, std::span<const Element> x) const;

  friend bool operator==(const DualPoint&, const DualPoint&) = default;

 private:
  Vector rep_;
};

// An ordered point set in PG(k-1, q). Construction only checks shapes; use
// CheckArc / RequireArc for the arc property, so that invalid sets can be
// loaded and diagnosed.
class Arc {
 public:
  Arc(Field field, std::size_t k, std::vector<Vector> points);

  const Field& field() const { return field_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return reps_.size(); }
  // q + k - 1 - n; negative for sets too large to be arcs.
  std::int64_t t() const;

  const Vector& point(std::size_t i) const { return reps_[i]; }
  const std::vector<Vector>& points() const { return reps_; }
  const ProjectivePoint& projective(std::size_t i) const { return points_[i]; }

  std::vector<Vector> Subset(std::span<const std::size_t> indices) const;
  Arc Reordered(std::span<const std::size_t> order) const;
  Arc WithPoint(std::size_t i, Vector rep) const;

 private:
  Field field_;
  std::size_t k_;
  std::vector<ProjectivePoint> points_;
  std::vector<Vector> reps_;
};

struct ArcCheck {
  bool is_arc = false;
  // Lexicographically first k-subset whose determinant vanishes.
  std::optional<IndexTuple> witness;
  std::string reason;
};

ArcCheck IsArc(const Field& f, std::size_t k, std::span<const Vector> points);
ArcCheck CheckArc(const Arc& arc);
// Throws kNotAnArc with the witness in the message.
void RequireArc(const Arc& arc);

// {(1, s, ..., s^{k-1}) : s in GF(q)} followed by (0, ..., 0, 1), with s in
// field enumeration order. Throws kKTooLarge for k > q + 1.
Arc NormalRationalCurve(const Field& f, std::size_t k);
// The hyperoval of X1 X3 = X2^2 and its nucleus (0, 1, 0), q even.
Arc Hyperoval(const Field& f);

// The q+1 hyperplanes containing span(S) for k-2 independent points S.
// Throws kDependentPoints.
std::vector<DualPoint> HyperplanesThrough(const Field& f, std::size_t k,
                                          std::span<const Vector> s);

// Every hyperplane of PG(k-1, q) once, normalized, in enumeration order.
std::vector<DualPoint> AllHyperplanes(const Field& f, std::size_t k);

// Projection from arc point `index` into PG(k-2, q): each other point a maps
// to (a_i x_j - a_j x_i)_{i != j}, where j is the first coordinate with
// x_j != 0.
Arc Project(const Arc& arc, std::size_t index);

struct MdsCheck {
  bool is_mds = false;
  Matrix generator;  // k x n, arc representatives as columns
  std::optional<IndexTuple> witness;
};

MdsCheck CheckMds(const Arc& arc);

}  // namespace arcforms

#endif  // ARCFORMS_GEOMETRY_H_
