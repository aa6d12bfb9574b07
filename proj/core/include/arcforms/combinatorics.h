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

#ifndef ARCFORMS_COMBINATORICS_H_
#define ARCFORMS_COMBINATORICS_H_

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace arcforms {

using IndexTuple = std::vector<std::size_t>;

inline std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// Parity (0 or 1) of the permutation that sorts `tuple` ascending, counted
// by inversions. Entries are assumed distinct.
inline int InversionParity(std::span<const std::size_t> tuple) {
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] > tuple[j]) ++inversions;
    }
  }
  return inversions & 1;
}

inline bool HasRepeat(std::span<const std::size_t> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return true;
    }
  }
  return false;
}

// Calls fn(const IndexTuple&) for every r-subset of {0..n-1}, as ascending
// tuples in lexicographic order. Stops early if fn returns false.
template <typename Fn>
void ForEachCombination(std::size_t n, std::size_t r, Fn&& fn) {
  if (r > n) return;
  IndexTuple c(r);
  std::iota(c.begin(), c.end(), std::size_t{0});
  while (true) {
    if constexpr (std::is_same_v<decltype(fn(c)), bool>) {
      if (!fn(static_cast<const IndexTuple&>(c))) return;
    } else {
      fn(static_cast<const IndexTuple&>(c));
    }
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

inline std::vector<IndexTuple> Combinations(std::size_t n, std::size_t r) {
  std::vector<IndexTuple> out;
  ForEachCombination(n, r, [&](const IndexTuple& c) { out.push_back(c); });
  return out;
}

// Calls fn(const IndexTuple&) for every tuple in {0..n-1}^len, last position
// varying fastest.
template <typename Fn>
void ForEachTuple(std::size_t n, std::size_t len, Fn&& fn) {
  if (n == 0 && len > 0) return;
  IndexTuple t(len, 0);
  while (true) {
    fn(static_cast<const IndexTuple&>(t));
    std::size_t i = len;
    while (i > 0 && ++t[i - 1] == n) t[--i] = 0;
    if (i == 0) return;
  }
}

// Uniform-enough index in [0, n) from a 64-bit engine. Modulo reduction is
// used instead of std::uniform_int_distribution so sequences are identical
// across standard libraries.
template <typename Engine>
std::size_t RandomIndex(Engine& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

// Fisher-Yates shuffle with RandomIndex.
template <typename Engine>
void Shuffle(Engine& rng, IndexTuple& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[RandomIndex(rng, i)]);
  }
}

// r distinct indices from {0..n-1} in random order.
template <typename Engine>
IndexTuple RandomDistinct(Engine& rng, std::size_t n, std::size_t r) {
  IndexTuple all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  Shuffle(rng, all);
  all.resize(r);
  return all;
}

}  // namespace arcforms

#endif  // ARCFORMS_COMBINATORICS_H_
