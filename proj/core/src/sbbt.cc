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

#include "arcforms/sbbt.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "arcforms/errors.h"
#include "arcforms/linalg.h"

namespace arcforms {
namespace {

void RequireRows(std::span<const Vector> rows, std::size_t k) {
  if (rows.size() + 1 != k) {
    throw Error(ErrorCode::kDimensionMismatch, "need k-1 rows");
  }
  for (const auto& r : rows) {
    if (r.size() != k) throw Error(ErrorCode::kDimensionMismatch, "row length differs from k");
  }
}

Element DetOfRows(const Field& f, std::span<const Vector> rows) {
  Matrix m(0, rows.front().size());
  for (const auto& r : rows) m.AppendRow(r);
  return Det(f, std::move(m));
}

std::size_t PointsOn(const Field& f, const Arc& arc, const DualPoint& h) {
  std::size_t count = 0;
  for (const auto& p : arc.points()) {
    if (h.Contains(f, p)) ++count;
  }
  return count;
}

nlohmann::json ElementsJson(std::span<const Element> v) {
  nlohmann::json j = nlohmann::json::array();
  for (Element e : v) j.push_back(e.code());
  return j;
}

}  // namespace

Element DetMinor(const Field& f, std::span<const Vector> rows, std::size_t j) {
  if (rows.empty()) throw Error(ErrorCode::kDimensionMismatch, "need k-1 rows");
  const std::size_t k = rows.front().size();
  RequireRows(rows, k);
  if (j >= k) throw Error(ErrorCode::kIndexOutOfRange, "minor column out of range");
  Matrix m(rows.size(), k - 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0, out = 0; c < k; ++c) {
      if (c != j) m(r, out++) = rows[r][c];
    }
  }
  return Det(f, std::move(m));
}

Vector MinorVector(const Field& f, std::span<const Vector> rows) {
  if (rows.empty()) throw Error(ErrorCode::kDimensionMismatch, "need k-1 rows");
  Vector z(rows.front().size());
  for (std::size_t j = 0; j < z.size(); ++j) z[j] = DetMinor(f, rows, j);
  return z;
}

Vector DualToZ(const Field& f, std::span<const Element> w) {
  const std::size_t k = w.size();
  Vector z(k);
  // Sign (-1)^{k+j} with 1-based j, i.e. (-1)^{k-1+j} 0-based.
  for (std::size_t j = 0; j < k; ++j) {
    z[j] = f.Mul(f.Sign(static_cast<std::int64_t>(k - 1 + j)), w[j]);
  }
  return z;
}

LinearForm LaplaceForm(const Field& f, std::span<const Element> u) {
  const Vector z = DualToZ(f, u);
  return HomogeneousForm::Linear(z);
}

SbbtForm BuildSbbt(const TangentSystem& ts) {
  const Arc& arc = ts.arc();
  const Field& f = arc.field();
  if (arc.t() < 1) throw Error(ErrorCode::kDegenerateT, "dual form needs t >= 1");
  const std::size_t k = arc.k();
  const std::uint32_t t = ts.t();
  const std::uint32_t m = f.is_even() ? 1 : 2;
  const std::size_t needed = m * t + k - 1;
  if (arc.size() < needed) {
    throw Error(ErrorCode::kSizeTooSmall,
                "arc has " + std::to_string(arc.size()) + " points, interpolation needs " +
                    std::to_string(needed));
  }
  SbbtForm sb;
  sb.m = m;
  sb.e.resize(needed);
  for (std::size_t i = 0; i < needed; ++i) sb.e[i] = i;
  sb.phi = HomogeneousForm::Zero(k, m * t);

  ForEachCombination(needed, k - 1, [&](const IndexTuple& tuple) {
    const IndexTuple s(tuple.begin(), tuple.end() - 1);
    const std::size_t last = tuple.back();
    Element c = f.Pow(EvaluateForm(f, ts.form(s), arc.point(last)), m);

    std::vector<Vector> rows = arc.Subset(tuple);
    rows.emplace_back();
    std::vector<LinearForm> factors;
    for (std::size_t u = 0; u < needed; ++u) {
      if (std::binary_search(tuple.begin(), tuple.end(), u)) continue;
      rows.back() = arc.point(u);
      const Element d = DetOfRows(f, rows);
      if (d.is_zero()) {
        throw Error(ErrorCode::kNotAnArc, "interpolation denominator vanished");
      }
      c = f.Div(c, d);
      factors.push_back(LaplaceForm(f, arc.point(u)));
    }
    sb.phi = Add(f, sb.phi, Scale(f, c, ProductLinearForms(f, k, factors)));
  });
  return sb;
}

Element EvaluateG(const Field& f, const SbbtForm& sb, std::span<const Vector> rows) {
  RequireRows(rows, sb.phi.k);
  return EvaluateForm(f, sb.phi, MinorVector(f, rows));
}

HomogeneousForm GRestriction(const Field& f, const SbbtForm& sb,
                             std::span<const Vector> prefix) {
  const std::size_t k = sb.phi.k;
  if (prefix.size() + 2 != k) throw Error(ErrorCode::kDimensionMismatch, "need k-2 prefix rows");
  std::vector<Vector> rows(prefix.begin(), prefix.end());
  rows.emplace_back(k);
  // Each minor is linear in the last row; read its coefficients off the
  // unit vectors.
  std::vector<Vector> minor_coeffs(k, Vector(k));
  for (std::size_t i = 0; i < k; ++i) {
    std::fill(rows.back().begin(), rows.back().end(), Field::zero());
    rows.back()[i] = Field::one();
    RequireRows(rows, k);
    for (std::size_t j = 0; j < k; ++j) minor_coeffs[j][i] = DetMinor(f, rows, j);
  }
  std::vector<LinearForm> substitution;
  for (const auto& c : minor_coeffs) substitution.push_back(HomogeneousForm::Linear(c));
  return SubstituteLinear(f, sb.phi, substitution);
}

std::vector<DualClass> ClassifyDuals(const Arc& arc, const SbbtForm& sb) {
  const Field& f = arc.field();
  std::vector<DualClass> out;
  for (const auto& h : AllHyperplanes(f, arc.k())) {
    out.push_back(DualClass{h.rep(), PointsOn(f, arc, h),
                            EvaluateForm(f, sb.phi, DualToZ(f, h.rep()))});
  }
  return out;
}

std::optional<Vector> TangentNucleus(const Arc& arc) {
  const Field& f = arc.field();
  if (arc.k() != 3 || arc.t() != 1 || !f.is_even()) return std::nullopt;
  Matrix lines(0, 3);
  for (std::size_t i = 0; i < arc.size(); ++i) {
    const std::size_t s[] = {i};
    for (const auto& h : TangentHyperplanes(arc, s)) lines.AppendRow(h.rep());
  }
  const Nullspace ns = RightNullspace(f, lines);
  if (ns.basis.rows() != 1) return std::nullopt;
  return Normalize(f, ns.basis.RowVector(0));
}

Report VerifySbbt(const TangentSystem& ts, const SbbtForm& sb, std::uint64_t seed) {
  const Arc& arc = ts.arc();
  const Field& f = arc.field();
  const std::size_t k = arc.k();
  const std::uint32_t t = ts.t();
  Report report;
  report.command = "sbbt verify";
  report.inputs = {{"k", k}, {"n", arc.size()}, {"t", t}, {"m", sb.m}, {"seed", seed}};

  Check& shape = report.AddCheck("degree_and_m");
  const std::uint32_t expected_m = f.is_even() ? 1 : 2;
  shape.Record(sb.m == expected_m && sb.phi.k == k && sb.phi.t == sb.m * t &&
                   sb.e.size() == sb.m * t + k - 1,
               [&] {
                 return nlohmann::json{{"m", sb.m}, {"degree", sb.phi.t}};
               });
  if (!shape.passed()) return report;

  Check& restriction = report.AddCheck("a_restriction_identity");
  ForEachCombination(arc.size(), k - 2, [&](const IndexTuple& s) {
    const HomogeneousForm g = GRestriction(f, sb, arc.Subset(s));
    restriction.Record(g == Power(f, ts.form(s), sb.m),
                       [&] { return nlohmann::json{{"S", s}}; });
  });

  Check& tuples = report.AddCheck("g_power_on_arc_tuples");
  ForEachTuple(arc.size(), k - 1, [&](const IndexTuple& tuple) {
    const Element lhs = EvaluateG(f, sb, arc.Subset(tuple));
    tuples.Record(lhs == f.Pow(GValue(ts, tuple), sb.m),
                  [&] { return nlohmann::json{{"tuple", tuple}}; });
  });

  Check& tangent_duals = report.AddCheck("b_zero_on_k_minus_2_hyperplanes");
  Check& secant_duals = report.AddCheck("c_nonzero_on_k_minus_1_hyperplanes");
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> unasserted;
  const auto classes = ClassifyDuals(arc, sb);
  for (const auto& c : classes) {
    auto witness = [&] {
      return nlohmann::json{{"dual", ElementsJson(c.dual)}, {"phi_value", c.phi_value.code()}};
    };
    if (c.arc_points_on == k - 2) {
      tangent_duals.Record(c.phi_value.is_zero(), witness);
    } else if (c.arc_points_on == k - 1) {
      secant_duals.Record(!c.phi_value.is_zero(), witness);
    } else if (c.arc_points_on < k - 2) {
      auto& slot = unasserted[c.arc_points_on];
      (c.phi_value.is_zero() ? slot.first : slot.second)++;
    }
  }
  nlohmann::json low = nlohmann::json::array();
  for (const auto& [on, counts] : unasserted) {
    low.push_back({{"arc_points_on", on}, {"phi_zero", counts.first},
                   {"phi_nonzero", counts.second}});
  }
  report.notes["hyperplanes"] = classes.size();
  report.notes["low_incidence_hyperplanes"] = low;

  if (k == 3 && t == 1 && f.is_even()) {
    Check& pencil = report.AddCheck("zero_set_is_nucleus_pencil");
    const auto nucleus = TangentNucleus(arc);
    if (!nucleus) {
      pencil.Fail({{"error", "tangent lines do not concur"}});
    } else {
      report.notes["nucleus"] = ElementsJson(*nucleus);
      for (const auto& c : classes) {
        const bool through = Dot(f, c.dual, *nucleus).is_zero();
        pencil.Record(through == c.phi_value.is_zero(), [&] {
          return nlohmann::json{{"dual", ElementsJson(c.dual)}, {"through_nucleus", through}};
        });
      }
    }
  }

  Check& symmetry = report.AddCheck("d_row_permutation_symmetry");
  std::mt19937_64 rng(seed);
  const std::size_t q = static_cast<std::size_t>(f.order());
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vector> rows(k - 1, Vector(k));
    for (auto& r : rows) {
      for (auto& e : r) e = f.At(RandomIndex(rng, q));
    }
    IndexTuple perm(k - 1);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Shuffle(rng, perm);
    std::vector<Vector> permuted;
    for (std::size_t i : perm) permuted.push_back(rows[i]);
    const Element sign =
        f.Sign(static_cast<std::int64_t>(InversionParity(perm)) * sb.m * t);
    symmetry.Record(EvaluateG(f, sb, permuted) == f.Mul(sign, EvaluateG(f, sb, rows)),
                    [&] { return nlohmann::json{{"trial", trial}, {"sigma", perm}}; });
  }
  return report;
}

}  // namespace arcforms
