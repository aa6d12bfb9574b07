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

#include "arcforms/geometry.h"

#include <sstream>
#include <utility>

#include "arcforms/errors.h"

namespace arcforms {
namespace {

std::string TupleString(std::span<const std::size_t> t) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << '}';
  return os.str();
}

}  // namespace

Vector Normalize(const Field& f, std::span<const Element> v) {
  Vector out(v.begin(), v.end());
  for (Element e : v) {
    if (e.is_zero()) continue;
    const Element inv = f.Inv(e);
    for (auto& x : out) x = f.Mul(x, inv);
    return out;
  }
  throw Error(ErrorCode::kZeroVector, "cannot normalize the zero vector");
}

ProjectivePoint::ProjectivePoint(const Field& f, Vector rep)
    : rep_(std::move(rep)), canonical_(Normalize(f, rep_)) {}

DualPoint::DualPoint(Vector rep) : rep_(std::move(rep)) {
  if (IsZeroVector(rep_)) throw Error(ErrorCode::kZeroVector, "zero dual vector");
}

bool DualPoint::Contains(const Field& f, std::span<const Element> x) const {
  return Dot(f, rep_, x).is_zero();
}

Arc::Arc(Field field, std::size_t k, std::vector<Vector> points)
    : field_(std::move(field)), k_(k) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
  for (auto& p : points) {
    if (p.size() != k) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "point with " + std::to_string(p.size()) + " coordinates, expected " +
                      std::to_string(k));
    }
    for (Element e : p) {
      if (!field_.contains(e)) throw Error(ErrorCode::kInvalidInput, "coordinate outside field");
    }
    points_.emplace_back(field_, p);
  }
  reps_ = std::move(points);
}

std::int64_t Arc::t() const {
  return static_cast<std::int64_t>(field_.order()) + static_cast<std::int64_t>(k_) - 1 -
         static_cast<std::int64_t>(size());
}

std::vector<Vector> Arc::Subset(std::span<const std::size_t> indices) const {
  std::vector<Vector> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= size()) throw Error(ErrorCode::kIndexOutOfRange, "arc index " + std::to_string(i));
    out.push_back(reps_[i]);
  }
  return out;
}

Arc Arc::Reordered(std::span<const std::size_t> order) const {
  if (order.size() != size()) {
    throw Error(ErrorCode::kDimensionMismatch, "reordering must list every point");
  }
  return Arc(field_, k_, Subset(order));
}

Arc Arc::WithPoint(std::size_t i, Vector rep) const {
  if (i >= size()) throw Error(ErrorCode::kIndexOutOfRange, "arc index " + std::to_string(i));
  auto pts = reps_;
  pts[i] = std::move(rep);
  return Arc(field_, k_, std::move(pts));
}

ArcCheck IsArc(const Field& f, std::size_t k, std::span<const Vector> points) {
  ArcCheck out;
  for (const auto& p : points) {
    if (p.size() != k) throw Error(ErrorCode::kDimensionMismatch, "point length mismatch");
    if (IsZeroVector(p)) throw Error(ErrorCode::kZeroVector, "zero point");
  }
  if (points.size() < k) {
    out.reason = "fewer than k points";
    return out;
  }
  out.is_arc = true;
  Matrix m(k, k);
  ForEachCombination(points.size(), k, [&](const IndexTuple& c) {
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t col = 0; col < k; ++col) m(r, col) = points[c[r]][col];
    }
    if (Det(f, m).is_zero()) {
      out.is_arc = false;
      out.witness = c;
      out.reason = "points " + TupleString(c) + " lie in a hyperplane";
      return false;
    }
    return true;
  });
  return out;
}

ArcCheck CheckArc(const Arc& arc) { return IsArc(arc.field(), arc.k(), arc.points()); }

void RequireArc(const Arc& arc) {
  ArcCheck check = CheckArc(arc);
  if (!check.is_arc) throw Error(ErrorCode::kNotAnArc, check.reason);
}

Arc NormalRationalCurve(const Field& f, std::size_t k) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
  if (k > f.order() + 1) {
    throw Error(ErrorCode::kKTooLarge, "normal rational curve needs k <= q + 1");
  }
  std::vector<Vector> points;
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const Element s = f.At(i);
    Vector p(k);
    p[0] = Field::one();
    for (std::size_t j = 1; j < k; ++j) p[j] = f.Mul(p[j - 1], s);
    points.push_back(std::move(p));
  }
  Vector last(k);
  last[k - 1] = Field::one();
  points.push_back(std::move(last));
  return Arc(f, k, std::move(points));
}

Arc Hyperoval(const Field& f) {
  if (!f.is_even()) {
    throw Error(ErrorCode::kPreconditionFailed, "hyperovals exist only for q even");
  }
  Arc conic = NormalRationalCurve(f, 3);
  auto points = conic.points();
  points.push_back(Vector{Field::zero(), Field::one(), Field::zero()});
  return Arc(f, 3, std::move(points));
}

std::vector<DualPoint> HyperplanesThrough(const Field& f, std::size_t k,
                                          std::span<const Vector> s) {
  Matrix m(0, k);
  for (const auto& p : s) m.AppendRow(p);
  Nullspace ns = RightNullspace(f, m);
  if (ns.rank != s.size() || ns.basis.rows() != 2) {
    throw Error(ErrorCode::kDependentPoints,
                "need k-2 independent points to span a codimension-2 subspace");
  }
  const Vector u = ns.basis.RowVector(0);
  const Vector v = ns.basis.RowVector(1);
  std::vector<DualPoint> out;
  out.emplace_back(Normalize(f, u));
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const Element lambda = f.At(i);
    Vector w(k);
    for (std::size_t j = 0; j < k; ++j) w[j] = f.Add(v[j], f.Mul(lambda, u[j]));
    out.emplace_back(Normalize(f, w));
  }
  return out;
}

std::vector<DualPoint> AllHyperplanes(const Field& f, std::size_t k) {
  // Normalized vectors: a leading 1 at position `lead`, zeros before it and
  // arbitrary entries after it.
  std::vector<DualPoint> out;
  const std::size_t q = static_cast<std::size_t>(f.order());
  for (std::size_t lead = 0; lead < k; ++lead) {
    ForEachTuple(q, k - lead - 1, [&](const IndexTuple& tail) {
      Vector w(k);
      w[lead] = Field::one();
      for (std::size_t j = 0; j < tail.size(); ++j) w[lead + 1 + j] = f.At(tail[j]);
      out.emplace_back(std::move(w));
    });
  }
  return out;
}

Arc Project(const Arc& arc, std::size_t index) {
  if (index >= arc.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "projection centre " + std::to_string(index));
  }
  const Field& f = arc.field();
  const Vector& x = arc.point(index);
  std::size_t j = 0;
  while (x[j].is_zero()) ++j;
  std::vector<Vector> points;
  for (std::size_t a = 0; a < arc.size(); ++a) {
    if (a == index) continue;
    const Vector& p = arc.point(a);
    Vector image;
    for (std::size_t i = 0; i < arc.k(); ++i) {
      if (i == j) continue;
      image.push_back(f.Sub(f.Mul(p[i], x[j]), f.Mul(p[j], x[i])));
    }
    points.push_back(std::move(image));
  }
  return Arc(f, arc.k() - 1, std::move(points));
}

MdsCheck CheckMds(const Arc& arc) {
  MdsCheck out;
  const std::size_t k = arc.k();
  const std::size_t n = arc.size();
  out.generator = Matrix(k, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < k; ++r) out.generator(r, c) = arc.point(c)[r];
  }
  if (n < k) return out;
  out.is_mds = true;
  Matrix minor(k, k);
  ForEachCombination(n, k, [&](const IndexTuple& cols) {
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = out.generator(r, cols[c]);
    }
    if (Det(arc.field(), minor).is_zero()) {
      out.is_mds = false;
      out.witness = cols;
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace arcforms
