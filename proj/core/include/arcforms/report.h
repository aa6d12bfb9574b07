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

#ifndef ARCFORMS_REPORT_H_
#define ARCFORMS_REPORT_H_

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace arcforms {

// Outcome of one named verification sweep.
struct Check {
  static constexpr std::size_t kMaxWitnesses = 10;

  std::string name;
  std::uint64_t total = 0;
  std::uint64_t failed = 0;
  std::vector<nlohmann::json> witnesses;

  void Pass() { ++total; }
  void Fail(nlohmann::json witness);
  // `witness` is only invoked on failure.
  template <typename WitnessFn>
  void Record(bool ok, WitnessFn&& witness) {
    if (ok) {
      Pass();
    } else {
      Fail(witness());
    }
  }

  bool passed() const { return failed == 0; }
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  // A deque so references returned by AddCheck stay valid.
  std::deque<Check> checks;
  // Values that are recorded but not asserted.
  nlohmann::json notes = nlohmann::json::object();
  std::int64_t elapsed_ms = 0;

  Check& AddCheck(std::string name);
  const Check* Find(std::string_view name) const;
  bool passed() const;

  // Appends the other report's checks (names prefixed with `prefix/`) and
  // notes, then orders checks by name.
  void Merge(const Report& other, const std::string& prefix);

  nlohmann::json ToJson() const;
  std::string Human() const;
};

}  // namespace arcforms

#endif  // ARCFORMS_REPORT_H_
