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

// Tangent hypersurfaces of an arc and their coherent scaling.
//
// For an arc A of size q + k - 1 - t in PG(k-1, q), every (k-2)-subset S
// lies in exactly t hyperplanes meeting A only in S. f_S is the product of
// their linear forms. The scalar in front of each f_S is fixed by a chain
// of evaluations at arc points:
//
//   f_S(e) = (-1)^{s(t+1)} f_{S u {e} \ {a}}(a)
//
// where E is the first k-2 points of A, e the first point of E \ S, a the
// last point of S \ E, and s the parity of sorting the concatenation (S, e).
// The chain bottoms out at f_E, normalized here by f_E(anchor) = 1 with the
// anchor the first arc point outside E.
//
// The g-function is g(a_1, ..., a_{k-1}) = (-1)^{s(t+1)} f_S(a_{k-1}) with
// S = {a_1, ..., a_{k-2}} and s the parity of the tuple (a_1, ..., a_{k-2});
// it is zero on tuples with repeats. With the scaling above, every
// transposition of arguments multiplies g by (-1)^{t+1}.

#ifndef ARCFORMS_TANGENTS_H_
#define ARCFORMS_TANGENTS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "arcforms/combinatorics.h"
#include "arcforms/forms.h"
#include "arcforms/geometry.h"
#include "arcforms/report.h"

namespace arcforms {

// The t hyperplanes through the points S (k-2 distinct arc indices) that
// contain no other arc point, normalized. Throws kDegenerateT for t = 0 and
// kTangentCountMismatch if the count differs from t.
std::vector<DualPoint> TangentHyperplanes(const Arc& arc,
                                          std::span<const std::size_t> s);

// Product of the normalized tangent forms at S, before scaling.
HomogeneousForm UnscaledTangentForm(const Arc& arc, std::span<const std::size_t> s);

// One link of the scaling chain for a sorted (k-2)-subset S != E.
struct ScalingStep {
  std::size_t e = 0;        // first element of E \ S
  std::size_t a = 0;        // last element of S \ E
  IndexTuple s_prime;       // S u {e} \ {a}, sorted
  int parity = 0;           // parity of the concatenation (S, e)
};

ScalingStep ScalingStepFor(std::span<const std::size_t> e_set,
                           std::span<const std::size_t> s);

class TangentSystem {
 public:
  TangentSystem(Arc arc, IndexTuple e, std::size_t anchor,
                std::map<IndexTuple, HomogeneousForm> forms);

  const Arc& arc() const { return arc_; }
  const Field& field() const { return arc_.field(); }
  const IndexTuple& e() const { return e_; }
  std::size_t anchor() const { return anchor_; }
  std::uint32_t t() const { return static_cast<std::uint32_t>(arc_.t()); }

  // f_S for a (k-2)-subset given in any order.
  const HomogeneousForm& form(std::span<const std::size_t> s) const;
  const std::map<IndexTuple, HomogeneousForm>& forms() const { return forms_; }

  TangentSystem WithForm(IndexTuple s, HomogeneousForm form) const;

 private:
  Arc arc_;
  IndexTuple e_;
  std::size_t anchor_;
  std::map<IndexTuple, HomogeneousForm> forms_;
};

TangentSystem BuildTangentSystem(const Arc& arc);

// g on an ordered (k-1)-tuple of arc indices.
Element GValue(const TangentSystem& ts, std::span<const std::size_t> tuple);

struct LemmaOptions {
  std::uint64_t seed = 0;
  std::size_t random_trials = 100;
};

// Tangent counts, tangency, normalization, the scaling chain, and the
// transposition rule for g over every ordering of every (k-1)-subset, plus
// seeded random full permutations.
Report VerifyLemmaOfTangents(const TangentSystem& ts, const LemmaOptions& options = {});

}  // namespace arcforms

#endif  // ARCFORMS_TANGENTS_H_
