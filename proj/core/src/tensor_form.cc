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

#include "arcforms/tensor_form.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "arcforms/combinatorics.h"
#include "arcforms/errors.h"

namespace arcforms {
namespace {

std::size_t IntPow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void RequireSameShape(const MultiForm& a, const MultiForm& b) {
  if (a.k != b.k || a.blocks != b.blocks || a.t != b.t) {
    throw Error(ErrorCode::kDimensionMismatch, "multiforms differ in shape");
  }
}

Matrix RowMatrix(std::span<const Element> row) {
  return Matrix(1, row.size(), Vector(row.begin(), row.end()));
}

// Sign (-1)^{parity (t+1)} as a field element.
Element TupleSign(const Field& f, int parity, std::uint32_t t) {
  return f.Sign(static_cast<std::int64_t>(parity) * (static_cast<std::int64_t>(t) + 1));
}

// Every ordering of every r-subset of {0..n-1}.
std::vector<IndexTuple> OrderedSubsets(std::size_t n, std::size_t r) {
  std::vector<IndexTuple> out;
  ForEachCombination(n, r, [&](const IndexTuple& c) {
    IndexTuple p = c;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  });
  return out;
}

}  // namespace

MultiForm MultiForm::Zero(std::size_t k, std::size_t blocks, std::uint32_t t) {
  return MultiForm{k, blocks, t, Vector(IntPow(MonomialCount(k, t), blocks))};
}

std::size_t MultiForm::Offset(std::span<const std::size_t> index) const {
  if (index.size() != blocks) {
    throw Error(ErrorCode::kDimensionMismatch, "multiform index arity mismatch");
  }
  const std::size_t n = extent();
  std::size_t off = 0;
  for (std::size_t i : index) {
    if (i >= n) throw Error(ErrorCode::kIndexOutOfRange, "monomial index out of range");
    off = off * n + i;
  }
  return off;
}

Vector ContractMode(const Field& f, std::span<const Element> tensor,
                    std::vector<std::size_t>& dims, std::size_t mode, const Matrix& m) {
  if (m.cols() != dims[mode]) {
    throw Error(ErrorCode::kDimensionMismatch, "contraction matrix does not fit the mode");
  }
  std::size_t outer = 1;
  for (std::size_t i = 0; i < mode; ++i) outer *= dims[i];
  std::size_t inner = 1;
  for (std::size_t i = mode + 1; i < dims.size(); ++i) inner *= dims[i];
  const std::size_t in_extent = dims[mode];
  const std::size_t out_extent = m.rows();
  Vector out(outer * out_extent * inner);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t c = 0; c < in_extent; ++c) {
      const Element* src = tensor.data() + (o * in_extent + c) * inner;
      for (std::size_t r = 0; r < out_extent; ++r) {
        const Element w = m(r, c);
        if (w.is_zero()) continue;
        Element* dst = out.data() + (o * out_extent + r) * inner;
        for (std::size_t i = 0; i < inner; ++i) {
          if (!src[i].is_zero()) dst[i] = f.Add(dst[i], f.Mul(w, src[i]));
        }
      }
    }
  }
  dims[mode] = out_extent;
  return out;
}

Element EvaluateMultiForm(const Field& f, const MultiForm& form,
                          std::span<const Vector> points) {
  if (points.size() != form.blocks) {
    throw Error(ErrorCode::kDimensionMismatch, "one point per block required");
  }
  std::vector<std::size_t> dims(form.blocks, form.extent());
  Vector current = form.coeffs;
  for (std::size_t m = 0; m < form.blocks; ++m) {
    if (points[m].size() != form.k) {
      throw Error(ErrorCode::kDimensionMismatch, "point length differs from k");
    }
    current = ContractMode(f, current, dims, m,
                           RowMatrix(MonomialValues(f, points[m], form.t)));
  }
  return current.empty() ? Field::zero() : current[0];
}

MultiForm Sub(const Field& f, const MultiForm& a, const MultiForm& b) {
  RequireSameShape(a, b);
  MultiForm out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = f.Sub(a.coeffs[i], b.coeffs[i]);
  }
  return out;
}

MultiForm Scale(const Field& f, Element c, const MultiForm& a) {
  MultiForm out = a;
  for (auto& e : out.coeffs) e = f.Mul(c, e);
  return out;
}

MultiForm PermuteBlocks(const MultiForm& form, std::span<const std::size_t> perm) {
  if (perm.size() != form.blocks) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation arity mismatch");
  }
  MultiForm out = MultiForm::Zero(form.k, form.blocks, form.t);
  IndexTuple source(form.blocks);
  ForEachTuple(form.extent(), form.blocks, [&](const IndexTuple& target) {
    for (std::size_t m = 0; m < form.blocks; ++m) source[m] = target[perm[m]];
    out.at(target) = form.at(source);
  });
  return out;
}

Socle ComputeSocle(const Arc& arc, std::uint32_t t) {
  const Field& f = arc.field();
  const std::size_t n_monomials = MonomialCount(arc.k(), t);
  Socle socle;
  Matrix rows(0, n_monomials);
  for (std::size_t i = 0; i < arc.size() && rows.rows() < n_monomials; ++i) {
    Matrix candidate = rows;
    candidate.AppendRow(Veronese(f, arc.point(i), t));
    if (Rank(f, candidate) > socle.w()) {
      rows = std::move(candidate);
      socle.indices.push_back(i);
    }
  }
  return socle;
}

BasisExtension ExtendBasis(const Arc& arc, const Socle& socle, std::uint32_t t,
                           ComplementOrder order) {
  const Field& f = arc.field();
  const std::size_t n_monomials = MonomialCount(arc.k(), t);
  // Built as rows, transposed at the end.
  Matrix columns(0, n_monomials);
  for (std::size_t i : socle.indices) columns.AppendRow(Veronese(f, arc.point(i), t));
  std::size_t rank = Rank(f, columns);
  if (rank != socle.w()) {
    throw Error(ErrorCode::kInvalidInput, "socle images are not independent");
  }
  for (std::size_t step = 0; step < n_monomials && rank < n_monomials; ++step) {
    const std::size_t j =
        order == ComplementOrder::kAscending ? step : n_monomials - 1 - step;
    Vector unit(n_monomials);
    unit[j] = Field::one();
    Matrix candidate = columns;
    candidate.AppendRow(unit);
    const std::size_t r = Rank(f, candidate);
    if (r > rank) {
      columns = std::move(candidate);
      rank = r;
    }
  }
  BasisExtension ext;
  ext.w = socle.w();
  ext.basis = Transpose(columns);
  auto inv = Inverse(f, ext.basis);
  if (!inv) throw Error(ErrorCode::kInvalidInput, "basis extension is singular");
  ext.inverse = std::move(*inv);
  return ext;
}

MultiForm BuildTensorForm(const TangentSystem& ts, ComplementOrder order) {
  const Arc& arc = ts.arc();
  if (arc.t() < 1) throw Error(ErrorCode::kDegenerateT, "tensor form needs t >= 1");
  const Field& f = arc.field();
  const std::uint32_t t = ts.t();
  const std::size_t blocks = arc.k() - 1;
  const Socle socle = ComputeSocle(arc, t);
  const BasisExtension ext = ExtendBasis(arc, socle, t, order);
  const std::size_t w = socle.w();
  const std::size_t n_monomials = MonomialCount(arc.k(), t);

  // g on the socle, a w^{k-1} tensor.
  Vector tensor;
  tensor.reserve(IntPow(w, blocks));
  IndexTuple points(blocks);
  ForEachTuple(w, blocks, [&](const IndexTuple& idx) {
    for (std::size_t m = 0; m < blocks; ++m) points[m] = socle.indices[idx[m]];
    tensor.push_back(GValue(ts, points));
  });

  // Coordinate functionals of the socle directions: rows 0..w-1 of B^{-1},
  // applied as an N x w matrix in every mode.
  Matrix coordinate(n_monomials, w);
  for (std::size_t j = 0; j < n_monomials; ++j) {
    for (std::size_t i = 0; i < w; ++i) coordinate(j, i) = ext.inverse(i, j);
  }
  std::vector<std::size_t> dims(blocks, w);
  for (std::size_t m = 0; m < blocks; ++m) {
    tensor = ContractMode(f, tensor, dims, m, coordinate);
  }
  return MultiForm{arc.k(), blocks, t, std::move(tensor)};
}

HomogeneousForm PartialEvaluate(const Field& f, const MultiForm& form,
                                std::span<const Vector> prefix) {
  if (form.blocks == 0 || prefix.size() + 1 != form.blocks) {
    throw Error(ErrorCode::kDimensionMismatch, "prefix must fill all but the last block");
  }
  std::vector<std::size_t> dims(form.blocks, form.extent());
  Vector current = form.coeffs;
  for (std::size_t m = 0; m < prefix.size(); ++m) {
    if (prefix[m].size() != form.k) {
      throw Error(ErrorCode::kDimensionMismatch, "point length differs from k");
    }
    current = ContractMode(f, current, dims, m,
                           RowMatrix(MonomialValues(f, prefix[m], form.t)));
  }
  return HomogeneousForm{form.k, form.t, std::move(current)};
}

Vector ArcTupleValues(const MultiForm& form, const Arc& arc) {
  const Field& f = arc.field();
  if (form.k != arc.k()) throw Error(ErrorCode::kDimensionMismatch, "multiform k differs from arc");
  const Matrix v = VeroneseMatrix(f, arc.points(), form.t);
  std::vector<std::size_t> dims(form.blocks, form.extent());
  Vector current = form.coeffs;
  for (std::size_t m = 0; m < form.blocks; ++m) {
    current = ContractMode(f, current, dims, m, v);
  }
  return current;
}

bool IsBlockCongruent(const MultiForm& d, const Arc& arc) {
  return IsZeroVector(ArcTupleValues(d, arc));
}

Report VerifyTensorForm(const TangentSystem& ts, const MultiForm& form,
                        const TensorVerifyOptions& options) {
  const Arc& arc = ts.arc();
  const Field& f = arc.field();
  const std::size_t n = arc.size();
  const std::size_t k = arc.k();
  const std::size_t blocks = k - 1;
  const std::uint32_t t = ts.t();

  Report report;
  report.command = "tensor verify";
  report.inputs = {{"k", k}, {"n", n}, {"t", t}};
  if (form.k != k || form.blocks != blocks || form.t != t) {
    report.AddCheck("shape").Fail({{"error", "multiform shape does not match the arc"}});
    return report;
  }

  Check& contract = report.AddCheck("defining_contract");
  Check& repeated_tuple = report.AddCheck("ii_repeated_tuple");
  {
    const Vector values = ArcTupleValues(form, arc);
    std::size_t pos = 0;
    ForEachTuple(n, blocks, [&](const IndexTuple& tuple) {
      const Element value = values[pos++];
      contract.Record(value == GValue(ts, tuple), [&] {
        return nlohmann::json{{"tuple", tuple}};
      });
      if (HasRepeat(tuple)) {
        repeated_tuple.Record(value.is_zero(), [&] { return nlohmann::json{{"tuple", tuple}}; });
      }
    });
  }

  Check& restriction = report.AddCheck("i_tangent_restriction");
  for (const auto& ordered : OrderedSubsets(n, k - 2)) {
    const HomogeneousForm expected =
        Scale(f, TupleSign(f, InversionParity(ordered), t), ts.form(ordered));
    const HomogeneousForm residual =
        Sub(f, PartialEvaluate(f, form, arc.Subset(ordered)), expected);
    restriction.Record(VanishesOn(f, residual, arc.points()), [&] {
      return nlohmann::json{{"S", ordered}};
    });
  }

  Check& repeated_prefix = report.AddCheck("ii_repeated_prefix");
  ForEachTuple(n, k - 2, [&](const IndexTuple& prefix) {
    if (!HasRepeat(prefix)) return;
    repeated_prefix.Record(
        VanishesOn(f, PartialEvaluate(f, form, arc.Subset(prefix)), arc.points()),
        [&] { return nlohmann::json{{"prefix", prefix}}; });
  });

  Check& symmetry = report.AddCheck("iii_block_symmetry");
  std::size_t exact_symmetric = 0;
  {
    IndexTuple perm(blocks);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    while (std::next_permutation(perm.begin(), perm.end())) {
      const MultiForm diff = Sub(f, PermuteBlocks(form, perm),
                                 Scale(f, TupleSign(f, InversionParity(perm), t), form));
      if (IsZeroVector(diff.coeffs)) ++exact_symmetric;
      symmetry.Record(IsBlockCongruent(diff, arc), [&] {
        return nlohmann::json{{"sigma", perm}};
      });
    }
  }

  Check& uniqueness = report.AddCheck("iv_uniqueness");
  const MultiForm alternate = BuildTensorForm(ts, ComplementOrder::kDescending);
  uniqueness.Record(IsBlockCongruent(Sub(f, form, alternate), arc), [] {
    return nlohmann::json{{"alternate", "descending complement"}};
  });

  const FormSubspace phi = VanishingSubspace(f, k, arc.points(), t);
  report.notes["phi_t_dim"] = phi.dim();
  report.notes["socle_size"] = ComputeSocle(arc, t).w();
  report.notes["permutations_exactly_symmetric"] = exact_symmetric;
  report.notes["alternate_build_identical"] = (alternate == form);
  if (options.search_exact) report.notes["exact_correction"] = SearchExactCorrection(ts, form);
  return report;
}

HomogeneousForm ShiftExtract(const Field& f, const MultiForm& form,
                             std::span<const MultiIndex> exponents) {
  if (form.blocks < 1 || exponents.size() + 1 != form.blocks) {
    throw Error(ErrorCode::kDimensionMismatch, "need one exponent per shifted block");
  }
  std::uint32_t removed = 0;
  for (const auto& e : exponents) {
    if (e.degrees.size() != form.k) {
      throw Error(ErrorCode::kDimensionMismatch, "exponent length differs from k");
    }
    if (e.total() > form.t) {
      throw Error(ErrorCode::kExponentTooLarge,
                  "exponent total " + std::to_string(e.total()) + " exceeds t");
    }
    removed += e.total();
  }
  const std::uint32_t degree = static_cast<std::uint32_t>(form.blocks) * form.t - removed;
  HomogeneousForm out = HomogeneousForm::Zero(form.k, degree);
  const auto monomials = MonomialBasis(form.k, form.t);
  const std::size_t shifted = exponents.size();
  std::vector<std::uint32_t> x_degree(form.k);
  ForEachTuple(form.extent(), form.blocks, [&](const IndexTuple& idx) {
    const Element c = form.at(idx);
    if (c.is_zero()) return;
    bool diagonal = true;
    std::int64_t multiplier = 1;
    std::fill(x_degree.begin(), x_degree.end(), 0);
    for (std::size_t m = 0; m < shifted; ++m) {
      const auto& j = monomials[idx[m]].degrees;
      const auto& i = exponents[m].degrees;
      for (std::size_t v = 0; v < form.k; ++v) {
        if (j[v] < i[v]) return;
        if (j[v] != i[v]) diagonal = false;
        multiplier = (multiplier * static_cast<std::int64_t>(Binomial(j[v], i[v]) %
                                                             f.characteristic())) %
                     f.characteristic();
        x_degree[v] += j[v] - i[v];
      }
    }
    if (diagonal) return;
    const auto& last = monomials[idx[shifted]].degrees;
    for (std::size_t v = 0; v < form.k; ++v) x_degree[v] += last[v];
    Element& slot = out.coeffs[MonomialIndex(x_degree)];
    slot = f.Add(slot, f.Mul(c, f.FromInt(multiplier)));
  });
  return out;
}

std::vector<std::vector<MultiIndex>> AdmissibleExponents(std::size_t k,
                                                         std::size_t count,
                                                         std::uint32_t t) {
  std::vector<MultiIndex> single;
  for (std::uint32_t d = 0; d <= t; ++d) {
    for (auto& m : MonomialBasis(k, d)) single.push_back(std::move(m));
  }
  std::vector<std::vector<MultiIndex>> out;
  ForEachTuple(single.size(), count, [&](const IndexTuple& idx) {
    std::vector<MultiIndex> seq;
    for (std::size_t i : idx) seq.push_back(single[i]);
    out.push_back(std::move(seq));
  });
  return out;
}

Report VerifyShiftExtraction(const TangentSystem& ts, const MultiForm& form) {
  const Arc& arc = ts.arc();
  const Field& f = arc.field();
  const std::uint32_t t = ts.t();
  Report report;
  report.command = "tensor extract";
  const std::size_t phi_dim = VanishingSubspace(f, arc.k(), arc.points(), t).dim();
  const bool asserted = phi_dim == 0;
  report.inputs = {{"k", arc.k()}, {"t", t}, {"phi_t_dim", phi_dim}};

  Check& degree = report.AddCheck("degree");
  Check* vanishing = asserted ? &report.AddCheck("vanishing_on_arc") : nullptr;
  std::size_t total = 0;
  std::size_t vanished = 0;
  std::size_t nonzero = 0;
  for (const auto& exps : AdmissibleExponents(arc.k(), form.blocks - 1, t)) {
    const HomogeneousForm h = ShiftExtract(f, form, exps);
    std::uint32_t removed = 0;
    for (const auto& e : exps) removed += e.total();
    auto witness = [&] {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& e : exps) j.push_back(e.degrees);
      return nlohmann::json{{"exponents", j}};
    };
    degree.Record(h.t == form.blocks * t - removed, witness);
    const bool zero_on_arc = VanishesOn(f, h, arc.points());
    ++total;
    if (zero_on_arc) ++vanished;
    if (!h.is_zero()) ++nonzero;
    if (vanishing) vanishing->Record(zero_on_arc, witness);
  }
  report.notes["vanishing_asserted"] = asserted;
  report.notes["extracted"] = total;
  report.notes["nonzero_forms"] = nonzero;
  report.notes["vanishing_on_arc"] = vanished;
  return report;
}

QuadricCheck CheckQuadric(const Arc& arc) {
  const Field& f = arc.field();
  if (arc.k() != 4 || arc.size() != f.order() + 1 || f.is_even()) {
    throw Error(ErrorCode::kPreconditionFailed,
                "quadric check needs an arc of size q + 1 in PG(3, q), q odd");
  }
  RequireArc(arc);
  const FormSubspace phi2 = VanishingSubspace(f, 4, arc.points(), 2);
  QuadricCheck out;
  out.phi2_dim = phi2.dim();
  if (phi2.dim() > 0) out.quadric = phi2.BasisForm(0);
  return out;
}

nlohmann::json SearchExactCorrection(const TangentSystem& ts, const MultiForm& form) {
  const Arc& arc = ts.arc();
  const Field& f = arc.field();
  const std::uint32_t t = ts.t();
  const std::size_t k = arc.k();
  const std::size_t prefix_blocks = form.blocks - 1;
  const FormSubspace phi = VanishingSubspace(f, k, arc.points(), t);
  const std::size_t d = phi.dim();
  const auto ordered = OrderedSubsets(arc.size(), k - 2);

  nlohmann::json out;
  out["phi_t_dim"] = d;
  out["ordered_subsets"] = ordered.size();

  // Residuals +-f_S - F(S, X) and their coordinates in the Phi_t basis.
  const Matrix phi_columns = Transpose(phi.basis);
  std::vector<Vector> coords;
  std::vector<HomogeneousForm> targets;
  for (const auto& s : ordered) {
    HomogeneousForm target =
        Scale(f, TupleSign(f, InversionParity(s), t), ts.form(s));
    const HomogeneousForm residual =
        Sub(f, target, PartialEvaluate(f, form, arc.Subset(s)));
    targets.push_back(std::move(target));
    if (d == 0) {
      if (!residual.is_zero()) {
        out["exact_correction_exists"] = false;
        out["reason"] = "residual outside Phi_t";
        return out;
      }
      coords.emplace_back();
      continue;
    }
    auto c = Solve(f, phi_columns, residual.coeffs);
    if (!c) {
      out["exact_correction_exists"] = false;
      out["reason"] = "residual outside Phi_t";
      return out;
    }
    coords.push_back(std::move(*c));
  }
  if (d == 0) {
    out["exact_correction_exists"] = true;
    out["verified"] = true;
    out["reason"] = "Phi_t = 0, F is already exact";
    return out;
  }

  // Interpolation system: one row per ordered subset, the tensor product of
  // the Veronese images of its points.
  const std::size_t n_monomials = form.extent();
  Matrix system(0, IntPow(n_monomials, prefix_blocks));
  for (const auto& s : ordered) {
    Vector row{Field::one()};
    for (std::size_t i : s) {
      const Vector v = Veronese(f, arc.point(i), t);
      Vector next;
      next.reserve(row.size() * v.size());
      for (Element a : row) {
        for (Element b : v) next.push_back(f.Mul(a, b));
      }
      row = std::move(next);
    }
    system.AppendRow(row);
  }
  MultiForm corrected = form;
  for (std::size_t i = 0; i < d; ++i) {
    Vector rhs;
    for (const auto& c : coords) rhs.push_back(c[i]);
    auto solution = Solve(f, system, rhs);
    if (!solution) {
      out["exact_correction_exists"] = false;
      out["reason"] = "interpolation system inconsistent for Phi_t basis form " +
                      std::to_string(i);
      return out;
    }
    const Vector basis_form = phi.basis.RowVector(i);
    for (std::size_t p = 0; p < solution->size(); ++p) {
      if ((*solution)[p].is_zero()) continue;
      for (std::size_t j = 0; j < n_monomials; ++j) {
        Element& slot = corrected.coeffs[p * n_monomials + j];
        slot = f.Add(slot, f.Mul((*solution)[p], basis_form[j]));
      }
    }
  }
  bool verified = true;
  for (std::size_t idx = 0; idx < ordered.size() && verified; ++idx) {
    verified = PartialEvaluate(f, corrected, arc.Subset(ordered[idx])) == targets[idx];
  }
  out["exact_correction_exists"] = true;
  out["verified"] = verified;
  return out;
}

}  // namespace arcforms
