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

#include "arcforms/io.h"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "arcforms/errors.h"

namespace arcforms {
namespace {

[[noreturn]] void ParseFail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

const json& Member(const json& j, const char* key) {
  if (!j.is_object()) ParseFail(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) ParseFail(std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t AsInt(const json& j, const char* what) {
  if (!j.is_number_integer()) ParseFail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t AsIndex(const json& j, const char* what) {
  const std::int64_t v = AsInt(j, what);
  if (v < 0) ParseFail(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

const json& AsArray(const json& j, const char* what) {
  if (!j.is_array()) ParseFail(std::string(what) + " must be an array");
  return j;
}

IndexTuple IndicesFromJson(const json& j, const char* what) {
  IndexTuple out;
  for (const auto& e : AsArray(j, what)) out.push_back(AsIndex(e, what));
  return out;
}

Vector ElementsFromJson(const Field& f, const json& j, const char* what) {
  Vector out;
  for (const auto& e : AsArray(j, what)) out.push_back(ElementFromJson(f, e));
  return out;
}

}  // namespace

json FieldSpecToJson(const FieldSpec& spec) {
  return json{{"p", spec.p}, {"h", spec.h}, {"irreducible", spec.irreducible}};
}

Field FieldFromJson(const json& j) {
  const std::int64_t p = AsInt(Member(j, "p"), "p");
  const std::int64_t h = AsInt(Member(j, "h"), "h");
  std::optional<std::vector<std::int64_t>> poly;
  if (j.contains("irreducible")) {
    poly.emplace();
    for (const auto& c : AsArray(j["irreducible"], "irreducible")) {
      poly->push_back(AsInt(c, "irreducible coefficient"));
    }
  }
  return Field::Make(p, h, poly);
}

json ElementToJson(const Field& f, Element e) {
  if (f.degree() == 1) return e.code();
  return f.Coeffs(e);
}

Element ElementFromJson(const Field& f, const json& j) {
  if (f.degree() == 1) {
    const std::int64_t v = AsInt(j, "field element");
    if (v < 0 || static_cast<std::uint64_t>(v) >= f.order()) {
      ParseFail("field element " + std::to_string(v) + " out of range");
    }
    return Element(static_cast<std::uint32_t>(v));
  }
  std::vector<std::int64_t> coeffs;
  for (const auto& c : AsArray(j, "field element")) {
    const std::int64_t v = AsInt(c, "field element coefficient");
    if (v < 0 || static_cast<std::uint64_t>(v) >= f.characteristic()) {
      ParseFail("coefficient " + std::to_string(v) + " outside the prime field");
    }
    coeffs.push_back(v);
  }
  if (coeffs.size() != f.degree()) {
    ParseFail("field element needs " + std::to_string(f.degree()) + " coefficients");
  }
  return f.FromCoeffs(coeffs);
}

json VectorToJson(const Field& f, std::span<const Element> v) {
  json out = json::array();
  for (Element e : v) out.push_back(ElementToJson(f, e));
  return out;
}

Vector VectorFromJson(const Field& f, const json& j) {
  return ElementsFromJson(f, j, "vector");
}

json FormToJson(const Field& f, const HomogeneousForm& form) {
  return json{{"k", form.k}, {"t", form.t}, {"coeffs", VectorToJson(f, form.coeffs)}};
}

HomogeneousForm FormFromJson(const Field& f, const json& j) {
  HomogeneousForm form;
  form.k = AsIndex(Member(j, "k"), "k");
  form.t = static_cast<std::uint32_t>(AsIndex(Member(j, "t"), "t"));
  form.coeffs = ElementsFromJson(f, Member(j, "coeffs"), "coeffs");
  if (form.k == 0 || form.coeffs.size() != MonomialCount(form.k, form.t)) {
    ParseFail("form coefficient count does not match k and t");
  }
  return form;
}

json ArcToJson(const Arc& arc) {
  json points = json::array();
  for (const auto& p : arc.points()) points.push_back(VectorToJson(arc.field(), p));
  return json{{"field", FieldSpecToJson(arc.field().spec())},
              {"k", arc.k()},
              {"points", std::move(points)}};
}

Arc ArcFromJson(const json& j) {
  const Field f = FieldFromJson(Member(j, "field"));
  const std::size_t k = AsIndex(Member(j, "k"), "k");
  std::vector<Vector> points;
  for (const auto& p : AsArray(Member(j, "points"), "points")) {
    Vector v = ElementsFromJson(f, p, "point");
    if (v.size() != k) ParseFail("point length differs from k");
    points.push_back(std::move(v));
  }
  return Arc(f, k, std::move(points));
}

json TangentSystemToJson(const TangentSystem& ts) {
  json fs = json::array();
  for (const auto& [s, form] : ts.forms()) {
    fs.push_back(json{{"S", s}, {"form", FormToJson(ts.field(), form)}});
  }
  return json{{"E", ts.e()}, {"anchor", ts.anchor()}, {"fS", std::move(fs)}};
}

TangentSystem TangentSystemFromJson(const Arc& arc, const json& j) {
  IndexTuple e = IndicesFromJson(Member(j, "E"), "E");
  const std::size_t anchor = AsIndex(Member(j, "anchor"), "anchor");
  std::map<IndexTuple, HomogeneousForm> forms;
  for (const auto& entry : AsArray(Member(j, "fS"), "fS")) {
    IndexTuple s = IndicesFromJson(Member(entry, "S"), "S");
    for (std::size_t i : s) {
      if (i >= arc.size()) ParseFail("subset index out of range");
    }
    HomogeneousForm form = FormFromJson(arc.field(), Member(entry, "form"));
    if (form.k != arc.k()) ParseFail("tangent form k differs from arc");
    forms.emplace(std::move(s), std::move(form));
  }
  if (anchor >= arc.size()) ParseFail("anchor out of range");
  return TangentSystem(arc, std::move(e), anchor, std::move(forms));
}

json MultiFormToJson(const Field& f, const MultiForm& form) {
  return json{{"k", form.k},
              {"blocks", form.blocks},
              {"t", form.t},
              {"coeffs", VectorToJson(f, form.coeffs)}};
}

MultiForm MultiFormFromJson(const Field& f, const json& j) {
  MultiForm form;
  form.k = AsIndex(Member(j, "k"), "k");
  form.blocks = AsIndex(Member(j, "blocks"), "blocks");
  form.t = static_cast<std::uint32_t>(AsIndex(Member(j, "t"), "t"));
  form.coeffs = ElementsFromJson(f, Member(j, "coeffs"), "coeffs");
  std::size_t expected = 1;
  for (std::size_t i = 0; i < form.blocks; ++i) expected *= form.extent();
  if (form.k == 0 || form.coeffs.size() != expected) {
    ParseFail("multiform coefficient count does not match its shape");
  }
  return form;
}

json SbbtToJson(const Field& f, const SbbtForm& sb) {
  return json{{"m", sb.m}, {"E", sb.e}, {"phi", FormToJson(f, sb.phi)}};
}

SbbtForm SbbtFromJson(const Field& f, const json& j) {
  SbbtForm sb;
  sb.m = static_cast<std::uint32_t>(AsIndex(Member(j, "m"), "m"));
  sb.e = IndicesFromJson(Member(j, "E"), "E");
  sb.phi = FormFromJson(f, Member(j, "phi"));
  return sb;
}

json DualClassesToJson(const Field& f, std::span<const DualClass> classes) {
  json out = json::array();
  for (const auto& c : classes) {
    out.push_back(json{{"dual", VectorToJson(f, c.dual)},
                       {"arc_points_on", c.arc_points_on},
                       {"phi_value", ElementToJson(f, c.phi_value)}});
  }
  return out;
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    ParseFail(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kInvalidInput, "write failed for " + path);
}

}  // namespace arcforms
