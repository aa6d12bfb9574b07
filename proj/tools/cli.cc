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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "arcforms/errors.h"
#include "arcforms/field.h"
#include "arcforms/forms.h"
#include "arcforms/geometry.h"
#include "arcforms/io.h"
#include "arcforms/report.h"
#include "arcforms/sbbt.h"
#include "arcforms/tangents.h"
#include "arcforms/tensor_form.h"

namespace arcforms::cli {
namespace {

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;

  std::string arc_path;
  std::string output;
  std::string type;
  std::uint64_t q = 0;
  std::optional<std::size_t> k;
  std::string points_path;
  std::size_t index = 0;
  std::uint32_t t = 0;
  std::string tangents_path;
  std::string tensor_path;
  std::string sbbt_path;
  std::string exponents;
  bool search_exact = false;
};

Arc LoadArc(const std::string& path) { return ArcFromJson(ReadJsonFile(path)); }

TangentSystem LoadOrBuildTangents(const Arc& arc, const Options& o) {
  if (o.tangents_path.empty()) return BuildTangentSystem(arc);
  RequireArc(arc);
  return TangentSystemFromJson(arc, ReadJsonFile(o.tangents_path));
}

MultiForm LoadOrBuildTensor(const TangentSystem& ts, const Options& o) {
  if (o.tensor_path.empty()) return BuildTensorForm(ts);
  return MultiFormFromJson(ts.field(), ReadJsonFile(o.tensor_path));
}

nlohmann::json ArcSummary(const Arc& arc) {
  return {{"q", arc.field().order()}, {"k", arc.k()}, {"n", arc.size()}, {"t", arc.t()}};
}

Report ArcVerifyReport(const Arc& arc) {
  Report r;
  r.command = "arc verify";
  const ArcCheck c = CheckArc(arc);
  r.AddCheck("is_arc").Record(c.is_arc, [&] {
    nlohmann::json w{{"reason", c.reason}};
    if (c.witness) w["dependent_subset"] = *c.witness;
    return w;
  });
  r.notes = ArcSummary(arc);
  return r;
}

Report MdsReport(const Arc& arc) {
  Report r;
  r.command = "arc mds";
  const MdsCheck c = CheckMds(arc);
  r.AddCheck("all_minors_nonzero").Record(c.is_mds, [&] {
    nlohmann::json w = nlohmann::json::object();
    if (c.witness) w["zero_minor_columns"] = *c.witness;
    return w;
  });
  nlohmann::json generator = nlohmann::json::array();
  for (std::size_t i = 0; i < c.generator.rows(); ++i) {
    generator.push_back(VectorToJson(arc.field(), c.generator.RowVector(i)));
  }
  r.notes["generator"] = std::move(generator);
  r.notes["code"] = {{"length", arc.size()}, {"dimension", arc.k()},
                     {"min_distance_if_mds", arc.size() - arc.k() + 1}};
  return r;
}

Report ExtractReport(const TangentSystem& ts, const MultiForm& form,
                     const std::string& exponents) {
  if (exponents == "all") return VerifyShiftExtraction(ts, form);
  const Field& f = ts.field();
  const Arc& arc = ts.arc();
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(exponents);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("--exponents: ") + e.what());
  }
  if (!parsed.is_array()) throw Error(ErrorCode::kParseError, "--exponents must be a list");
  std::vector<MultiIndex> exps;
  for (const auto& e : parsed) {
    MultiIndex m;
    if (!e.is_array()) throw Error(ErrorCode::kParseError, "each exponent must be a list");
    for (const auto& d : e) {
      if (!d.is_number_unsigned()) {
        throw Error(ErrorCode::kParseError, "exponents must be non-negative integers");
      }
      m.degrees.push_back(d.get<std::uint32_t>());
    }
    exps.push_back(std::move(m));
  }
  const HomogeneousForm h = ShiftExtract(f, form, exps);
  std::uint32_t removed = 0;
  for (const auto& e : exps) removed += e.total();
  const std::size_t phi_dim = VanishingSubspace(f, arc.k(), arc.points(), ts.t()).dim();

  Report r;
  r.command = "tensor extract";
  r.inputs = {{"exponents", parsed}, {"phi_t_dim", phi_dim}};
  r.AddCheck("degree").Record(h.t == form.blocks * form.t - removed,
                              [&] { return nlohmann::json{{"degree", h.t}}; });
  const bool vanishes = VanishesOn(f, h, arc.points());
  if (phi_dim == 0) {
    r.AddCheck("vanishing_on_arc").Record(vanishes, [] { return nlohmann::json::object(); });
  }
  r.notes["form"] = FormToJson(f, h);
  r.notes["vanishes_on_arc"] = vanishes;
  r.notes["vanishing_asserted"] = phi_dim == 0;
  return r;
}

Report QuadricReport(const Arc& arc) {
  Report r;
  r.command = "tensor quadric-check";
  const QuadricCheck c = CheckQuadric(arc);
  r.AddCheck("quadric_found").Record(c.quadric.has_value() && !c.quadric->is_zero(), [&] {
    return nlohmann::json{{"phi2_dim", c.phi2_dim}};
  });
  if (c.quadric) {
    r.AddCheck("quadric_vanishes_on_arc")
        .Record(VanishesOn(arc.field(), *c.quadric, arc.points()),
                [] { return nlohmann::json::object(); });
    r.notes["quadric"] = FormToJson(arc.field(), *c.quadric);
  }
  r.notes["phi2_dim"] = c.phi2_dim;
  return r;
}

// Tensor entries visited by a full extraction sweep.
constexpr double kExtractionBudget = 1e9;

double ExtractionCost(const MultiForm& form) {
  double exponent_choices = 0;
  for (std::uint32_t d = 0; d <= form.t; ++d) {
    exponent_choices += static_cast<double>(MonomialCount(form.k, d));
  }
  return std::pow(exponent_choices, static_cast<double>(form.blocks - 1)) *
         std::pow(static_cast<double>(form.extent()), static_cast<double>(form.blocks));
}

bool QuadricApplies(const Arc& arc) {
  return arc.k() == 4 && arc.size() == arc.field().order() + 1 && !arc.field().is_even();
}

Report SuiteReport(const Arc& arc, const Options& o) {
  Report r;
  r.command = "suite";
  nlohmann::json skipped = nlohmann::json::array();
  const Report arc_report = ArcVerifyReport(arc);
  r.Merge(arc_report, "arc");
  if (!arc_report.passed()) {
    skipped.push_back("everything after arc: the point set is not an arc");
    r.notes["skipped"] = skipped;
    return r;
  }
  r.Merge(MdsReport(arc), "mds");
  if (arc.k() < 3 || arc.t() < 1) {
    skipped.push_back("tangents, tensor, sbbt: need k >= 3 and t >= 1");
    r.notes["skipped"] = skipped;
    return r;
  }
  const TangentSystem ts = BuildTangentSystem(arc);
  r.Merge(VerifyLemmaOfTangents(ts, LemmaOptions{o.seed, 100}), "tangents");
  const MultiForm form = BuildTensorForm(ts);
  r.Merge(VerifyTensorForm(ts, form), "tensor");
  if (ExtractionCost(form) <= kExtractionBudget) {
    r.Merge(VerifyShiftExtraction(ts, form), "extract");
  } else {
    skipped.push_back("extract: sweep exceeds the work budget; run `tensor extract` directly");
  }
  if (QuadricApplies(arc)) {
    r.Merge(QuadricReport(arc), "quadric");
  } else {
    skipped.push_back("quadric: needs n = q + 1 in PG(3, q) with q odd");
  }
  const std::size_t m = arc.field().is_even() ? 1 : 2;
  if (arc.size() >= m * ts.t() + arc.k() - 1) {
    r.Merge(VerifySbbt(ts, BuildSbbt(ts), o.seed), "sbbt");
  } else {
    skipped.push_back("sbbt: n < mt + k - 1");
  }
  r.notes["skipped"] = skipped;
  return r;
}

Arc NewArc(const Options& o) {
  const Field f = Field::OfOrder(o.q);
  if (o.type == "nrc") {
    if (!o.k) throw Error(ErrorCode::kInvalidInput, "--k is required for --type nrc");
    return NormalRationalCurve(f, *o.k);
  }
  if (o.type == "conic") {
    if (o.k && *o.k != 3) throw Error(ErrorCode::kInvalidInput, "a conic has k = 3");
    return NormalRationalCurve(f, 3);
  }
  if (o.type == "hyperoval") {
    if (o.k && *o.k != 3) throw Error(ErrorCode::kInvalidInput, "a hyperoval has k = 3");
    return Hyperoval(f);
  }
  // custom
  if (o.points_path.empty()) {
    throw Error(ErrorCode::kInvalidInput, "--points is required for --type custom");
  }
  nlohmann::json doc = ReadJsonFile(o.points_path);
  if (doc.is_object() && doc.contains("points")) doc = doc["points"];
  if (!doc.is_array() || doc.empty()) {
    throw Error(ErrorCode::kParseError, "points file must hold a non-empty list of points");
  }
  std::vector<Vector> points;
  for (const auto& p : doc) points.push_back(VectorFromJson(f, p));
  const std::size_t k = o.k.value_or(points.front().size());
  for (const auto& p : points) {
    if (p.size() != k) throw Error(ErrorCode::kDimensionMismatch, "point length differs from k");
  }
  return Arc(f, k, std::move(points));
}

void Emit(const Report& r, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format == "human") {
    out << r.Human();
  } else {
    out << r.ToJson().dump(2) << '\n';
  }
  err << r.Human();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact constructions and checks for arcs in finite projective spaces",
               "arcforms"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "stdout rendering")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized spot checks");

  auto leaf = [](CLI::App* parent, const char* name, const char* help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto group = [](CLI::App* parent, const char* name, const char* help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->require_subcommand(1);
    return sub;
  };
  auto arc_arg = [&](CLI::App* sub) {
    sub->add_option("arc", o.arc_path, "arc JSON file")->required();
  };
  auto output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "output file")->required();
  };

  CLI::App* arc = group(&app, "arc", "construct and check arcs");
  CLI::App* arc_new = leaf(arc, "new", "write a reference arc");
  arc_new->add_option("--type", o.type)
      ->required()
      ->check(CLI::IsMember({"nrc", "conic", "hyperoval", "custom"}));
  arc_new->add_option("--q", o.q, "field order")->required();
  arc_new->add_option("--k", o.k, "projective dimension plus one");
  arc_new->add_option("--points", o.points_path, "JSON file listing the points for --type custom");
  output(arc_new);
  CLI::App* arc_verify = leaf(arc, "verify", "check the arc property");
  arc_arg(arc_verify);
  CLI::App* arc_project = leaf(arc, "project", "project from one arc point");
  arc_arg(arc_project);
  arc_project->add_option("--index", o.index, "projection centre")->required();
  output(arc_project);
  CLI::App* arc_mds = leaf(arc, "mds", "check the generator matrix is MDS");
  arc_arg(arc_mds);

  CLI::App* phi = leaf(&app, "phi", "forms of degree t vanishing on the arc");
  arc_arg(phi);
  phi->add_option("--t", o.t, "degree")->required();

  CLI::App* tangents = group(&app, "tangents", "scaled tangent forms");
  CLI::App* tangents_build = leaf(tangents, "build", "write the tangent system");
  arc_arg(tangents_build);
  output(tangents_build);
  CLI::App* tangents_lemma = leaf(tangents, "lemma-check", "check scaling and g");
  arc_arg(tangents_lemma);
  tangents_lemma->add_option("--tangents", o.tangents_path, "use a saved tangent system");

  CLI::App* tensor = group(&app, "tensor", "the tensor form");
  CLI::App* tensor_build = leaf(tensor, "build", "write the tensor form");
  arc_arg(tensor_build);
  output(tensor_build);
  CLI::App* tensor_verify = leaf(tensor, "verify", "check the tensor form");
  arc_arg(tensor_verify);
  tensor_verify->add_flag("--search-exact", o.search_exact,
                          "search for an exact correction inside the vanishing forms");
  CLI::App* tensor_extract = leaf(tensor, "extract", "coefficient extraction");
  arc_arg(tensor_extract);
  tensor_extract->add_option("--exponents", o.exponents,
                             "JSON list of k-2 exponent vectors, or \"all\"")
      ->required();
  CLI::App* tensor_quadric = leaf(tensor, "quadric-check", "a quadric through the arc");
  arc_arg(tensor_quadric);
  for (CLI::App* sub : {tensor_build, tensor_verify, tensor_extract}) {
    sub->add_option("--tangents", o.tangents_path, "use a saved tangent system");
  }
  for (CLI::App* sub : {tensor_verify, tensor_extract}) {
    sub->add_option("--tensor", o.tensor_path, "use a saved tensor form");
  }

  CLI::App* sbbt = group(&app, "sbbt", "the dual hypersurface");
  CLI::App* sbbt_build = leaf(sbbt, "build", "write the dual form");
  arc_arg(sbbt_build);
  output(sbbt_build);
  CLI::App* sbbt_verify = leaf(sbbt, "verify", "check the dual form");
  arc_arg(sbbt_verify);
  sbbt_verify->add_option("--sbbt", o.sbbt_path, "use a saved dual form");
  for (CLI::App* sub : {sbbt_build, sbbt_verify}) {
    sub->add_option("--tangents", o.tangents_path, "use a saved tangent system");
  }

  CLI::App* suite = leaf(&app, "suite", "run every applicable verifier");
  arc_arg(suite);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (arc_new->parsed()) {
      const Arc a = NewArc(o);
      WriteJsonFile(o.output, ArcToJson(a));
      report.command = "arc new";
      report.inputs = {{"type", o.type}, {"q", o.q}, {"output", o.output}};
      const ArcCheck c = CheckArc(a);
      report.AddCheck("is_arc").Record(c.is_arc, [&] {
        nlohmann::json w{{"reason", c.reason}};
        if (c.witness) w["dependent_subset"] = *c.witness;
        return w;
      });
      report.notes = ArcSummary(a);
    } else if (arc_verify->parsed()) {
      report = ArcVerifyReport(LoadArc(o.arc_path));
    } else if (arc_project->parsed()) {
      const Arc projected = Project(LoadArc(o.arc_path), o.index);
      WriteJsonFile(o.output, ArcToJson(projected));
      report = ArcVerifyReport(projected);
      report.command = "arc project";
      report.inputs["index"] = o.index;
    } else if (arc_mds->parsed()) {
      report = MdsReport(LoadArc(o.arc_path));
    } else if (phi->parsed()) {
      const Arc a = LoadArc(o.arc_path);
      const FormSubspace space = VanishingSubspace(a.field(), a.k(), a.points(), o.t);
      report.command = "phi";
      report.inputs["t"] = o.t;
      report.notes["dim"] = space.dim();
      nlohmann::json basis = nlohmann::json::array();
      for (std::size_t i = 0; i < space.dim(); ++i) {
        basis.push_back(FormToJson(a.field(), space.BasisForm(i)));
      }
      report.notes["basis"] = std::move(basis);
    } else if (tangents_build->parsed()) {
      const TangentSystem ts = BuildTangentSystem(LoadArc(o.arc_path));
      WriteJsonFile(o.output, TangentSystemToJson(ts));
      report.command = "tangents build";
      report.notes = ArcSummary(ts.arc());
      report.notes["subsets"] = ts.forms().size();
    } else if (tangents_lemma->parsed()) {
      report = VerifyLemmaOfTangents(LoadOrBuildTangents(LoadArc(o.arc_path), o),
                                     LemmaOptions{o.seed, 100});
    } else if (tensor_build->parsed()) {
      const TangentSystem ts = LoadOrBuildTangents(LoadArc(o.arc_path), o);
      const MultiForm form = BuildTensorForm(ts);
      WriteJsonFile(o.output, MultiFormToJson(ts.field(), form));
      report.command = "tensor build";
      report.notes = ArcSummary(ts.arc());
      report.notes["socle_size"] = ComputeSocle(ts.arc(), ts.t()).w();
      report.notes["coefficients"] = form.coeffs.size();
    } else if (tensor_verify->parsed()) {
      const TangentSystem ts = LoadOrBuildTangents(LoadArc(o.arc_path), o);
      report = VerifyTensorForm(ts, LoadOrBuildTensor(ts, o),
                                TensorVerifyOptions{o.search_exact});
    } else if (tensor_extract->parsed()) {
      const TangentSystem ts = LoadOrBuildTangents(LoadArc(o.arc_path), o);
      report = ExtractReport(ts, LoadOrBuildTensor(ts, o), o.exponents);
    } else if (tensor_quadric->parsed()) {
      report = QuadricReport(LoadArc(o.arc_path));
    } else if (sbbt_build->parsed()) {
      const TangentSystem ts = LoadOrBuildTangents(LoadArc(o.arc_path), o);
      const SbbtForm sb = BuildSbbt(ts);
      WriteJsonFile(o.output, SbbtToJson(ts.field(), sb));
      report.command = "sbbt build";
      report.notes = ArcSummary(ts.arc());
      report.notes["m"] = sb.m;
      report.notes["degree"] = sb.phi.t;
    } else if (sbbt_verify->parsed()) {
      const TangentSystem ts = LoadOrBuildTangents(LoadArc(o.arc_path), o);
      const SbbtForm sb = o.sbbt_path.empty()
                              ? BuildSbbt(ts)
                              : SbbtFromJson(ts.field(), ReadJsonFile(o.sbbt_path));
      report = VerifySbbt(ts, sb, o.seed);
      const auto classes = ClassifyDuals(ts.arc(), sb);
      report.notes["dual_classification"] = DualClassesToJson(ts.field(), classes);
    } else if (suite->parsed()) {
      report = SuiteReport(LoadArc(o.arc_path), o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!o.arc_path.empty()) report.inputs["arc"] = o.arc_path;
  if (report.inputs.is_object() && !report.inputs.contains("seed")) {
    report.inputs["seed"] = o.seed;
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  Emit(report, o, out, err);
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace arcforms::cli
