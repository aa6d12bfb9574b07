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

#include "arcforms/report.h"

#include <algorithm>
#include <sstream>

namespace arcforms {

void Check::Fail(nlohmann::json witness) {
  ++total;
  ++failed;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

Check& Report::AddCheck(std::string name) {
  checks.emplace_back();
  checks.back().name = std::move(name);
  return checks.back();
}

const Check* Report::Find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed(); });
}

void Report::Merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    copy.name = prefix + "/" + c.name;
    checks.push_back(std::move(copy));
  }
  if (!other.notes.empty()) notes[prefix] = other.notes;
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
}

nlohmann::json Report::ToJson() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"total", c.total},
                           {"failed", c.failed},
                           {"witnesses", c.witnesses}});
  }
  if (!notes.empty()) j["notes"] = notes;
  j["passed"] = passed();
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string Report::Human() const {
  std::ostringstream os;
  os << command << ": " << (passed() ? "PASS" : "FAIL") << " (" << elapsed_ms
     << " ms)\n";
  for (const auto& c : checks) {
    os << "  [" << (c.passed() ? "ok" : "FAILED") << "] " << c.name << "  "
       << (c.total - c.failed) << "/" << c.total << "\n";
    for (const auto& w : c.witnesses) os << "      witness: " << w.dump() << "\n";
  }
  return os.str();
}

}  // namespace arcforms
