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

#include "arcforms/tangents.h"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "arcforms/errors.h"

namespace arcforms {
namespace {

IndexTuple Sorted(std::span<const std::size_t> s) {
  IndexTuple out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

void RequireSubset(const Arc& arc, std::span<const std::size_t> s) {
  if (s.size() + 2 != arc.k()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "tangent subsets have k-2 = " + std::to_string(arc.k() - 2) + " points");
  }
  for (std::size_t i : s) {
    if (i >= arc.size()) throw Error(ErrorCode::kIndexOutOfRange, "arc index " + std::to_string(i));
  }
  if (HasRepeat(s)) throw Error(ErrorCode::kInvalidInput, "tangent subset has a repeated index");
}

void RequireTangentArc(const Arc& arc) {
  if (arc.k() < 3) throw Error(ErrorCode::kInvalidInput, "tangent machinery needs k >= 3");
  if (arc.t() < 1) {
    throw Error(ErrorCode::kDegenerateT, "t = " + std::to_string(arc.t()) + " has no tangents");
  }
}

}  // namespace

std::vector<DualPoint> TangentHyperplanes(const Arc& arc,
                                          std::span<const std::size_t> s) {
  RequireTangentArc(arc);
  RequireSubset(arc, s);
  const Field& f = arc.field();
  const auto pencil = HyperplanesThrough(f, arc.k(), arc.Subset(s));
  std::vector<bool> in_s(arc.size(), false);
  for (std::size_t i : s) in_s[i] = true;
  std::vector<DualPoint> out;
  for (const auto& h : pencil) {
    bool meets_other = false;
    for (std::size_t i = 0; i < arc.size() && !meets_other; ++i) {
      if (!in_s[i] && h.Contains(f, arc.point(i))) meets_other = true;
    }
    if (!meets_other) out.push_back(h);
  }
  if (out.size() != static_cast<std::size_t>(arc.t())) {
    throw Error(ErrorCode::kTangentCountMismatch,
                std::to_string(out.size()) + " tangent hyperplanes, expected t = " +
                    std::to_string(arc.t()));
  }
  return out;
}

HomogeneousForm UnscaledTangentForm(const Arc& arc, std::span<const std::size_t> s) {
  std::vector<LinearForm> factors;
  for (const auto& h : TangentHyperplanes(arc, s)) {
    factors.push_back(HomogeneousForm::Linear(h.rep()));
  }
  return ProductLinearForms(arc.field(), arc.k(), factors);
}

ScalingStep ScalingStepFor(std::span<const std::size_t> e_set,
                           std::span<const std::size_t> s) {
  ScalingStep step;
  auto in = [](std::span<const std::size_t> set, std::size_t x) {
    return std::find(set.begin(), set.end(), x) != set.end();
  };
  bool found_e = false;
  for (std::size_t x : e_set) {
    if (!in(s, x)) {
      step.e = x;
      found_e = true;
      break;
    }
  }
  bool found_a = false;
  for (std::size_t x : s) {
    if (!in(e_set, x) && (!found_a || x > step.a)) {
      step.a = x;
      found_a = true;
    }
  }
  if (!found_e || !found_a) {
    throw Error(ErrorCode::kInvalidInput, "scaling step requested for S = E");
  }
  IndexTuple concat = Sorted(s);
  concat.push_back(step.e);
  step.parity = InversionParity(concat);
  for (std::size_t x : s) {
    if (x != step.a) step.s_prime.push_back(x);
  }
  step.s_prime.push_back(step.e);
  std::sort(step.s_prime.begin(), step.s_prime.end());
  return step;
}

TangentSystem::TangentSystem(Arc arc, IndexTuple e, std::size_t anchor,
                             std::map<IndexTuple, HomogeneousForm> forms)
    : arc_(std::move(arc)), e_(std::move(e)), anchor_(anchor), forms_(std::move(forms)) {}

const HomogeneousForm& TangentSystem::form(std::span<const std::size_t> s) const {
  auto it = forms_.find(Sorted(s));
  if (it == forms_.end()) {
    throw Error(ErrorCode::kIndexOutOfRange, "no tangent form for the given subset");
  }
  return it->second;
}

TangentSystem TangentSystem::WithForm(IndexTuple s, HomogeneousForm form) const {
  TangentSystem copy = *this;
  copy.forms_[Sorted(s)] = std::move(form);
  return copy;
}

TangentSystem BuildTangentSystem(const Arc& arc) {
  RequireTangentArc(arc);
  RequireArc(arc);
  const Field& f = arc.field();
  const std::size_t k = arc.k();
  const std::size_t n = arc.size();
  IndexTuple e(k - 2);
  std::iota(e.begin(), e.end(), std::size_t{0});
  const std::size_t anchor = k - 2;

  // Group subsets by r = |S \ E|; level r only depends on level r - 1.
  std::vector<std::vector<IndexTuple>> levels(k - 1);
  ForEachCombination(n, k - 2, [&](const IndexTuple& s) {
    const auto r = static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [&](std::size_t x) { return x >= k - 2; }));
    levels[r].push_back(s);
  });
  for (auto& level : levels) {
    std::stable_sort(level.begin(), level.end(), [](const IndexTuple& a, const IndexTuple& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
  }

  std::map<IndexTuple, HomogeneousForm> forms;
  {
    HomogeneousForm p = UnscaledTangentForm(arc, e);
    const Element at_anchor = EvaluateForm(f, p, arc.point(anchor));
    forms.emplace(e, Scale(f, f.Inv(at_anchor), p));
  }
  const Element sign = f.Sign(static_cast<std::int64_t>(arc.t()) + 1);
  for (std::size_t r = 1; r < levels.size(); ++r) {
    for (const auto& s : levels[r]) {
      HomogeneousForm p = UnscaledTangentForm(arc, s);
      const ScalingStep step = ScalingStepFor(e, s);
      Element target = EvaluateForm(f, forms.at(step.s_prime), arc.point(step.a));
      if (step.parity) target = f.Mul(sign, target);
      // p(e) != 0: e is an arc point outside S, so it is on no tangent.
      const Element lambda = f.Div(target, EvaluateForm(f, p, arc.point(step.e)));
      forms.emplace(s, Scale(f, lambda, p));
    }
  }
  return TangentSystem(arc, std::move(e), anchor, std::move(forms));
}

Element GValue(const TangentSystem& ts, std::span<const std::size_t> tuple) {
  const Arc& arc = ts.arc();
  if (tuple.size() + 1 != arc.k()) {
    throw Error(ErrorCode::kDimensionMismatch, "g takes k-1 arc indices");
  }
  for (std::size_t i : tuple) {
    if (i >= arc.size()) throw Error(ErrorCode::kIndexOutOfRange, "arc index " + std::to_string(i));
  }
  if (HasRepeat(tuple)) return Field::zero();
  const Field& f = arc.field();
  const auto s = tuple.first(tuple.size() - 1);
  Element value = EvaluateForm(f, ts.form(s), arc.point(tuple.back()));
  if (InversionParity(s) && (ts.t() + 1) % 2 == 1) value = f.Neg(value);
  return value;
}

Report VerifyLemmaOfTangents(const TangentSystem& ts, const LemmaOptions& options) {
  const Arc& arc = ts.arc();
  const Field& f = arc.field();
  const std::size_t k = arc.k();
  const std::size_t n = arc.size();
  const std::uint32_t t = ts.t();
  const Element sign = f.Sign(static_cast<std::int64_t>(t) + 1);

  Report report;
  report.command = "tangents lemma-check";
  Check& count = report.AddCheck("tangent_count");
  Check& factor = report.AddCheck("factorization");
  Check& tangency = report.AddCheck("tangency");
  Check& chain = report.AddCheck("scaling_chain");
  Check& normal = report.AddCheck("normalization");

  const auto& stored = ts.forms();
  ForEachCombination(n, k - 2, [&](const IndexTuple& s) {
    auto it = stored.find(s);
    if (it == stored.end()) {
      count.Fail({{"S", s}, {"error", "missing f_S"}});
      return;
    }
    const HomogeneousForm& fs = it->second;
    std::vector<LinearForm> factors;
    try {
      for (const auto& h : TangentHyperplanes(arc, s)) {
        factors.push_back(HomogeneousForm::Linear(h.rep()));
      }
      count.Pass();
    } catch (const Error& err) {
      count.Fail({{"S", s}, {"error", err.what()}});
      return;
    }
    // f_S must be a nonzero multiple of the product of the tangent forms.
    const HomogeneousForm p = ProductLinearForms(f, k, factors);
    std::size_t lead = 0;
    while (lead < p.coeffs.size() && p.coeffs[lead].is_zero()) ++lead;
    const Element ratio = f.Div(fs.coeffs[lead], p.coeffs[lead]);
    factor.Record(!ratio.is_zero() && Scale(f, ratio, p) == fs,
                  [&] { return nlohmann::json{{"S", s}}; });
    std::vector<bool> in_s(n, false);
    for (std::size_t i : s) in_s[i] = true;
    for (std::size_t x = 0; x < n; ++x) {
      const bool zero = EvaluateForm(f, fs, arc.point(x)).is_zero();
      tangency.Record(zero == in_s[x], [&] { return nlohmann::json{{"S", s}, {"x", x}}; });
    }
    if (s == ts.e()) {
      normal.Record(EvaluateForm(f, fs, arc.point(ts.anchor())) == Field::one(),
                    [&] { return nlohmann::json{{"S", s}, {"anchor", ts.anchor()}}; });
      return;
    }
    const ScalingStep step = ScalingStepFor(ts.e(), s);
    Element rhs = EvaluateForm(f, ts.form(step.s_prime), arc.point(step.a));
    if (step.parity) rhs = f.Mul(sign, rhs);
    chain.Record(EvaluateForm(f, fs, arc.point(step.e)) == rhs, [&] {
      return nlohmann::json{{"S", s}, {"e", step.e}, {"a", step.a}};
    });
  });

  Check& adjacent = report.AddCheck("lemma_adjacent_transpositions");
  ForEachCombination(n, k - 1, [&](const IndexTuple& subset) {
    IndexTuple order = subset;
    do {
      const Element base = GValue(ts, order);
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        IndexTuple swapped = order;
        std::swap(swapped[i], swapped[i + 1]);
        adjacent.Record(GValue(ts, swapped) == f.Mul(sign, base), [&] {
          return nlohmann::json{{"T", order}, {"swap", i}};
        });
      }
    } while (std::next_permutation(order.begin(), order.end()));
  });

  Check& random = report.AddCheck("lemma_random_permutations");
  std::mt19937_64 rng(options.seed);
  if (n >= k - 1) {
    for (std::size_t trial = 0; trial < options.random_trials; ++trial) {
      const IndexTuple tuple = RandomDistinct(rng, n, k - 1);
      IndexTuple sigma(k - 1);
      std::iota(sigma.begin(), sigma.end(), std::size_t{0});
      Shuffle(rng, sigma);
      IndexTuple permuted(k - 1);
      for (std::size_t i = 0; i < k - 1; ++i) permuted[i] = tuple[sigma[i]];
      Element expected = GValue(ts, tuple);
      if (InversionParity(sigma)) expected = f.Mul(sign, expected);
      random.Record(GValue(ts, permuted) == expected, [&] {
        return nlohmann::json{{"T", tuple}, {"sigma", sigma}};
      });
    }
  }
  report.inputs = {{"k", k}, {"n", n}, {"t", t}, {"seed", options.seed}};
  return report;
}

}  // namespace arcforms
