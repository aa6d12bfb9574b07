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

// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits apply per arc unless stated otherwise.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "arcforms/combinatorics.h"
#include "arcforms/field.h"
#include "arcforms/forms.h"
#include "arcforms/geometry.h"
#include "arcforms/sbbt.h"
#include "arcforms/tangents.h"
#include "arcforms/tensor_form.h"
#include "test_util.h"

namespace arcforms {
namespace {

struct CorpusArc {
  std::uint64_t q;
  std::size_t k;
};

const CorpusArc kCorpus[] = {{4, 3}, {5, 3}, {7, 3}, {8, 3}, {9, 3},
                             {5, 4}, {7, 4}, {8, 4}};

std::string Label(std::uint64_t q, std::size_t k) {
  return (k == 3 ? "conic q=" : "twisted cubic q=") + std::to_string(q);
}

// Collects failures for one criterion.
class Outcome {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  // Runs `fn` and fails the criterion if it takes longer than `limit_s`.
  void Timed(const std::string& what, double limit_s, const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    try {
      fn();
    } catch (const std::exception& e) {
      Expect(false, what + ": threw " + e.what());
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    slowest_ = std::max(slowest_, s);
    Expect(s <= limit_s, what + ": took " + std::to_string(s) + " s");
  }
  bool passed() const { return failed_ == 0; }
  std::string Summary() const {
    std::ostringstream os;
    os << "slowest " << static_cast<int>(slowest_ * 1000) << " ms";
    for (const auto& f : failures_) os << "; " << f;
    if (failed_ > failures_.size()) os << "; ... " << failed_ << " failures in total";
    return os.str();
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
  double slowest_ = 0;
};

bool Passed(const Report& r, std::string* detail) {
  if (r.passed()) return true;
  for (const auto& c : r.checks) {
    if (!c.passed()) *detail += " " + c.name;
  }
  return false;
}

void TangentCounts(Outcome& o) {
  for (const auto& c : kCorpus) {
    const Arc arc = NormalRationalCurve(Field::OfOrder(c.q), c.k);
    o.Timed(Label(c.q, c.k), 5.0, [&] {
      const Field& f = arc.field();
      ForEachCombination(arc.size(), c.k - 2, [&](const IndexTuple& s) {
        const std::size_t found = TangentHyperplanes(arc, s).size();
        std::vector<Vector> off;
        for (std::size_t i = 0; i < arc.size(); ++i) {
          if (std::find(s.begin(), s.end(), i) == s.end()) off.push_back(arc.point(i));
        }
        const std::size_t oracle = testing::OracleHyperplaneCount(f, c.k, arc.Subset(s), off);
        o.Expect(found == static_cast<std::size_t>(arc.t()) && oracle == found,
                 Label(c.q, c.k) + ": wrong tangent count");
      });
    });
  }
}

void LemmaOfTangents(Outcome& o) {
  for (const auto& c : kCorpus) {
    const Arc arc = NormalRationalCurve(Field::OfOrder(c.q), c.k);
    o.Timed(Label(c.q, c.k), 10.0, [&] {
      const Report r = VerifyLemmaOfTangents(BuildTangentSystem(arc), LemmaOptions{0, 100});
      std::string detail;
      o.Expect(Passed(r, &detail), Label(c.q, c.k) + ":" + detail);
      const Check* random = r.Find("lemma_random_permutations");
      o.Expect(random && random->total == 100, Label(c.q, c.k) + ": random sample size");
    });
  }
}

void TensorProperties(Outcome& o) {
  for (const auto& c : kCorpus) {
    const Arc arc = NormalRationalCurve(Field::OfOrder(c.q), c.k);
    o.Timed(Label(c.q, c.k), 30.0, [&] {
      const TangentSystem ts = BuildTangentSystem(arc);
      const Report r = VerifyTensorForm(ts, BuildTensorForm(ts));
      std::string detail;
      o.Expect(Passed(r, &detail), Label(c.q, c.k) + ":" + detail);
      for (const char* name : {"i_tangent_restriction", "ii_repeated_tuple",
                               "iii_block_symmetry", "iv_uniqueness"}) {
        const Check* check = r.Find(name);
        o.Expect(check && check->total > 0, Label(c.q, c.k) + ": " + name + " missing");
      }
    });
  }
}

void DefiningContract(Outcome& o) {
  for (const auto& c : kCorpus) {
    const Arc arc = NormalRationalCurve(Field::OfOrder(c.q), c.k);
    o.Timed(Label(c.q, c.k), 30.0, [&] {
      const TangentSystem ts = BuildTangentSystem(arc);
      const MultiForm form = BuildTensorForm(ts);
      std::size_t tuples = 0;
      ForEachTuple(arc.size(), c.k - 1, [&](const IndexTuple& tuple) {
        ++tuples;
        o.Expect(EvaluateMultiForm(arc.field(), form, arc.Subset(tuple)) == GValue(ts, tuple),
                 Label(c.q, c.k) + ": F != g");
      });
      std::size_t expected = 1;
      for (std::size_t i = 0; i + 1 < c.k; ++i) expected *= arc.size();
      o.Expect(tuples == expected, Label(c.q, c.k) + ": tuple count");
    });
  }
}

// Rank over the prime field by integer elimination, independent of the library.
std::size_t OracleVeroneseRank(const Arc& arc, std::uint32_t t) {
  const std::int64_t p = arc.field().characteristic();
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& pt : arc.points()) {
    std::vector<std::int64_t> row;
    for (const auto& mono : MonomialBasis(arc.k(), t)) {
      std::int64_t v = 1;
      for (std::size_t i = 0; i < arc.k(); ++i) {
        v = v * testing::PowMod(pt[i].code(), mono.degrees[i], p) % p;
      }
      row.push_back(v);
    }
    rows.push_back(row);
  }
  return testing::OracleRankModP(rows, p);
}

void PhiDimensions(Outcome& o) {
  struct Case {
    std::uint64_t q;
    std::size_t k;
    std::size_t dim;
  };
  for (const Case& c : {Case{5, 3, 1}, Case{7, 3, 1}, Case{11, 3, 1}, Case{13, 3, 1},
                        Case{7, 4, 3}, Case{5, 4, 4}}) {
    const Arc arc = NormalRationalCurve(Field::OfOrder(c.q), c.k);
    o.Timed(Label(c.q, c.k), 1.0, [&] {
      const std::size_t dim = VanishingSubspace(arc.field(), c.k, arc.points(), 2).dim();
      const std::size_t oracle = MonomialCount(c.k, 2) - OracleVeroneseRank(arc, 2);
      o.Expect(dim == c.dim && oracle == c.dim,
               Label(c.q, c.k) + ": dim " + std::to_string(dim) + ", oracle " +
                   std::to_string(oracle));
    });
  }
}

void Quadric(Outcome& o) {
  for (std::uint64_t q : {5u, 7u}) {
    const Arc arc = NormalRationalCurve(Field::OfOrder(q), 4);
    o.Timed(Label(q, 4), 1.0, [&] {
      const QuadricCheck c = CheckQuadric(arc);
      const bool ok = c.quadric && !c.quadric->is_zero() && c.quadric->t == 2 &&
                      arc.size() == q + 1;
      o.Expect(ok, Label(q, 4) + ": no quadric");
      if (!ok) return;
      for (const auto& pt : arc.points()) {
        o.Expect(EvaluateForm(arc.field(), *c.quadric, pt).is_zero(),
                 Label(q, 4) + ": quadric misses a point");
      }
    });
  }
}

void ShiftExtractionOnConics(Outcome& o) {
  for (std::uint64_t q : {5u, 7u}) {
    const Arc arc = NormalRationalCurve(Field::OfOrder(q), 3);
    o.Timed(Label(q, 3), 5.0, [&] {
      const Field& f = arc.field();
      const TangentSystem ts = BuildTangentSystem(arc);
      const MultiForm form = BuildTensorForm(ts);
      o.Expect(VanishingSubspace(f, 3, arc.points(), 1).dim() == 0, Label(q, 3) + ": Phi_1 != 0");
      std::size_t count = 0;
      for (const auto& exps : AdmissibleExponents(3, form.blocks - 1, ts.t())) {
        const HomogeneousForm h = ShiftExtract(f, form, exps);
        ++count;
        for (const auto& pt : arc.points()) {
          o.Expect(EvaluateForm(f, h, pt).is_zero(), Label(q, 3) + ": extracted form nonzero on A");
        }
      }
      o.Expect(count == 4, Label(q, 3) + ": exponent count");
      std::string detail;
      o.Expect(Passed(VerifyShiftExtraction(ts, form), &detail), Label(q, 3) + ":" + detail);
    });
  }
}

void SbbtEven(Outcome& o) {
  for (std::uint64_t q : {4u, 8u}) {
    const Arc arc = NormalRationalCurve(Field::OfOrder(q), 3);
    o.Timed(Label(q, 3), 5.0, [&] {
      const Field& f = arc.field();
      const TangentSystem ts = BuildTangentSystem(arc);
      const SbbtForm sb = BuildSbbt(ts);
      o.Expect(sb.m == 1 && sb.phi.t == 1, Label(q, 3) + ": m or degree");
      for (const auto& [s, fs] : ts.forms()) {
        o.Expect(GRestriction(f, sb, arc.Subset(s)) == fs, Label(q, 3) + ": G(y,X) != f_S");
      }
      // The nucleus of X1 X3 = X2^2 in characteristic 2 is (0, 1, 0).
      const Vector nucleus = testing::Ints(f, {0, 1, 0});
      for (const auto& h : AllHyperplanes(f, 3)) {
        std::size_t on = 0;
        for (const auto& pt : arc.points()) on += h.Contains(f, pt);
        const bool zero = EvaluateForm(f, sb.phi, DualToZ(f, h.rep())).is_zero();
        if (on == 1) o.Expect(zero, Label(q, 3) + ": phi nonzero on a tangent");
        o.Expect(zero == h.Contains(f, nucleus), Label(q, 3) + ": zero set is not the pencil");
      }
      std::string detail;
      o.Expect(Passed(VerifySbbt(ts, sb), &detail), Label(q, 3) + ":" + detail);
    });
  }
}

void SbbtOdd(Outcome& o) {
  const Arc c5 = NormalRationalCurve(Field::OfOrder(5), 3);
  o.Timed(Label(5, 3), 60.0, [&] {
    const Field& f = c5.field();
    const SbbtForm sb = BuildSbbt(BuildTangentSystem(c5));
    HomogeneousForm dual = HomogeneousForm::Zero(3, 2);
    const std::uint32_t z2sq[] = {0, 2, 0};
    const std::uint32_t z1z3[] = {1, 0, 1};
    dual.coeffs[MonomialIndex(z2sq)] = Field::one();
    dual.coeffs[MonomialIndex(z1z3)] = f.FromInt(-4);
    const Element ratio = f.Div(sb.phi.coeffs[MonomialIndex(z2sq)], Field::one());
    o.Expect(!ratio.is_zero() && Scale(f, ratio, dual) == sb.phi,
             "conic q=5: phi is not proportional to Z2^2 - 4 Z1 Z3");
  });
  const Arc tc7 = NormalRationalCurve(Field::OfOrder(7), 4);
  o.Timed(Label(7, 4), 60.0, [&] {
    const Field& f = tc7.field();
    const TangentSystem ts = BuildTangentSystem(tc7);
    const SbbtForm sb = BuildSbbt(ts);
    o.Expect(sb.m == 2 && sb.phi.t == 4, "twisted cubic q=7: m or degree");
    std::size_t subsets = 0;
    ForEachCombination(tc7.size(), 2, [&](const IndexTuple& s) {
      ++subsets;
      o.Expect(GRestriction(f, sb, tc7.Subset(s)) == Power(f, ts.form(s), 2),
               "twisted cubic q=7: G(y1,y2,X) != f_S^2");
    });
    o.Expect(subsets == 28, "twisted cubic q=7: subset count");
    std::size_t duals = 0;
    for (const auto& h : AllHyperplanes(f, 4)) {
      ++duals;
      std::size_t on = 0;
      for (const auto& pt : tc7.points()) on += h.Contains(f, pt);
      const bool zero = EvaluateForm(f, sb.phi, DualToZ(f, h.rep())).is_zero();
      if (on == 2) o.Expect(zero, "twisted cubic q=7: phi nonzero on a 2-point plane");
      if (on == 3) o.Expect(!zero, "twisted cubic q=7: phi zero on a 3-point plane");
    }
    o.Expect(duals == 400, "twisted cubic q=7: dual count");
    std::string detail;
    o.Expect(Passed(VerifySbbt(ts, sb), &detail), "twisted cubic q=7:" + detail);
  });
}

void MdsBridge(Outcome& o) {
  for (const auto& c : kCorpus) {
    const Arc arc = NormalRationalCurve(Field::OfOrder(c.q), c.k);
    o.Timed(Label(c.q, c.k), 5.0, [&] {
      const Field& f = arc.field();
      o.Expect(CheckMds(arc).is_mds, Label(c.q, c.k) + ": not MDS");
      Vector forged(c.k);
      for (std::size_t j = 0; j < c.k; ++j) forged[j] = f.Add(arc.point(0)[j], arc.point(1)[j]);
      const Arc corrupted = arc.WithPoint(arc.size() - 1, forged);
      const MdsCheck bad = CheckMds(corrupted);
      o.Expect(!bad.is_mds && bad.witness, Label(c.q, c.k) + ": corruption undetected");
      if (!bad.witness) return;
      Matrix minor(0, c.k);
      for (std::size_t i : *bad.witness) minor.AppendRow(corrupted.point(i));
      o.Expect(DetCofactor(f, minor).is_zero(), Label(c.q, c.k) + ": witness minor is nonzero");
    });
  }
}

void MutationSensitivity(Outcome& o) {
  for (const auto& c : kCorpus) {
    const Arc arc = NormalRationalCurve(Field::OfOrder(c.q), c.k);
    o.Timed(Label(c.q, c.k), 30.0, [&] {
      const Field& f = arc.field();
      const TangentSystem ts = BuildTangentSystem(arc);
      const MultiForm form = BuildTensorForm(ts);

      // One f_S off its scaling chain.
      const IndexTuple s = std::prev(ts.forms().end())->first;
      const Element lambda = f.characteristic() == 2 ? f.At(2) : f.FromInt(2);
      const TangentSystem mis = ts.WithForm(s, Scale(f, lambda, ts.form(s)));
      o.Expect(!VerifyLemmaOfTangents(mis).passed(), Label(c.q, c.k) + ": mis-scaled f_S passes");

      // One tensor entry whose unit tensor is not block-congruent to zero.
      MultiForm delta = MultiForm::Zero(form.k, form.blocks, form.t);
      delta.coeffs[0] = Field::one();
      o.Expect(!IsBlockCongruent(delta, arc), Label(c.q, c.k) + ": entry lies in the Phi blocks");
      MultiForm corrupted = form;
      corrupted.coeffs[0] = f.Add(corrupted.coeffs[0], Field::one());
      o.Expect(!VerifyTensorForm(ts, corrupted).passed(),
               Label(c.q, c.k) + ": corrupted tensor passes");
    });
  }
}

struct Criterion {
  int id;
  const char* name;
  void (*run)(Outcome&);
};

int Main() {
  const Criterion criteria[] = {
      {1, "tangent counts", TangentCounts},
      {2, "lemma of tangents", LemmaOfTangents},
      {3, "tensor form properties (i)-(iv)", TensorProperties},
      {4, "defining contract F = g", DefiningContract},
      {5, "Phi_t dimensions", PhiDimensions},
      {6, "quadric through q+1 arcs in PG(3,q)", Quadric},
      {7, "shift extraction vanishes on conics", ShiftExtractionOnConics},
      {8, "dual form, q even", SbbtEven},
      {9, "dual form, q odd", SbbtOdd},
      {10, "MDS bridge", MdsBridge},
      {11, "mutation sensitivity", MutationSensitivity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.Expect(false, std::string("threw ") + e.what());
    }
    std::printf("[%s] criterion %2d: %s (%s)\n", o.passed() ? "PASS" : "FAIL", c.id, c.name,
                o.Summary().c_str());
    std::fflush(stdout);
    if (!o.passed()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace arcforms

int main() { return arcforms::Main(); }
