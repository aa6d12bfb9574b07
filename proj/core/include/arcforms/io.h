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

// JSON encodings. Element: an int over a prime field, otherwise the
// little-endian coefficient list. Loaders throw kParseError on malformed
// documents and propagate domain errors from the constructors.

#ifndef ARCFORMS_IO_H_
#define ARCFORMS_IO_H_

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arcforms/field.h"
#include "arcforms/forms.h"
#include "arcforms/geometry.h"
#include "arcforms/sbbt.h"
#include "arcforms/tangents.h"
#include "arcforms/tensor_form.h"

namespace arcforms {

using nlohmann::json;

json FieldSpecToJson(const FieldSpec& spec);
Field FieldFromJson(const json& j);

json ElementToJson(const Field& f, Element e);
Element ElementFromJson(const Field& f, const json& j);
json VectorToJson(const Field& f, std::span<const Element> v);
Vector VectorFromJson(const Field& f, const json& j);

json FormToJson(const Field& f, const HomogeneousForm& form);
HomogeneousForm FormFromJson(const Field& f, const json& j);

json ArcToJson(const Arc& arc);
Arc ArcFromJson(const json& j);

json TangentSystemToJson(const TangentSystem& ts);
// The forms are taken as given; run VerifyLemmaOfTangents to check them.
TangentSystem TangentSystemFromJson(const Arc& arc, const json& j);

json MultiFormToJson(const Field& f, const MultiForm& form);
MultiForm MultiFormFromJson(const Field& f, const json& j);

json SbbtToJson(const Field& f, const SbbtForm& sb);
SbbtForm SbbtFromJson(const Field& f, const json& j);

json DualClassesToJson(const Field& f, std::span<const DualClass> classes);

json ReadJsonFile(const std::string& path);
// Two-space indentation and a trailing newline.
void WriteJsonFile(const std::string& path, const json& j);

}  // namespace arcforms

#endif  // ARCFORMS_IO_H_
