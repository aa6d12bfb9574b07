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

// Exact arithmetic in GF(p^h).
//
// An element of GF(p^h) is a polynomial c_0 + c_1 x + ... + c_{h-1} x^{h-1}
// over GF(p), reduced modulo a fixed monic irreducible polynomial. We store
// it as the single integer code c_0 + c_1 p + ... + c_{h-1} p^{h-1}. The
// code is also the enumeration index of the element: 0, 1, ..., p-1 are the
// prime subfield and the extension elements follow in little-endian
// coefficient counting order.

#ifndef ARCFORMS_FIELD_H_
#define ARCFORMS_FIELD_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace arcforms {

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t h = 1;
  // Little-endian coefficients of the monic defining polynomial, length h+1.
  // For h == 1 this is the placeholder {0, 1}.
  std::vector<std::uint32_t> irreducible{0, 1};

  std::uint64_t q() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint32_t code_ = 0;
};

using Vector = std::vector<Element>;

// Immutable handle to GF(q). Copies share the arithmetic tables.
class Field {
 public:
  // Validates p, h and the defining polynomial. When h > 1 and no polynomial
  // is supplied, the built-in Conway polynomial for q <= 256 is used.
  static Field Make(std::int64_t p, std::int64_t h,
                    std::optional<std::vector<std::int64_t>> irreducible =
                        std::nullopt);
  // GF(q) for a prime power q, using the built-in polynomial table.
  static Field OfOrder(std::uint64_t q);
  static Field FromSpec(const FieldSpec& spec);

  const FieldSpec& spec() const;
  std::uint64_t order() const;
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  bool is_even() const { return characteristic() == 2; }

  static constexpr Element zero() { return Element{0}; }
  static constexpr Element one() { return Element{1}; }

  bool contains(Element a) const { return a.code() < order(); }

  // Image of an integer in the prime subfield.
  Element FromInt(std::int64_t value) const;
  // The element with enumeration index `index` (0 <= index < q).
  Element At(std::uint64_t index) const;
  Element FromCoeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<std::uint32_t> Coeffs(Element a) const;

  Element Add(Element a, Element b) const;
  Element Sub(Element a, Element b) const;
  Element Neg(Element a) const;
  Element Mul(Element a, Element b) const;
  // Throws kDivisionByZero for a == 0.
  Element Inv(Element a) const;
  Element Div(Element a, Element b) const;
  // Negative exponents are allowed for nonzero a.
  Element Pow(Element a, std::int64_t exponent) const;

  // (-1)^e.
  Element Sign(std::int64_t e) const { return (e & 1) ? Neg(one()) : one(); }

  std::string ToString(Element a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.spec() == b.spec();
  }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

enum class ArithOp { kAdd, kSub, kMul, kInv, kNeg, kPow };

using Operand = std::variant<std::monostate, Element, std::int64_t>;

// Dispatching form of the arithmetic methods: `b` is an Element for the
// binary operations and an integer exponent for kPow.
Element FieldArith(const Field& field, ArithOp op, Element a, Operand b = {});

bool IsPrime(std::uint64_t n);

// The Conway polynomial used for GF(p^h), if it is in the built-in table
// (prime powers q <= 256 with h > 1).
std::optional<std::vector<std::uint32_t>> BuiltinPolynomial(std::uint32_t p,
                                                            std::uint32_t h);

// Splits q into (p, h) if q is a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> PrimePowerDecompose(
    std::uint64_t q);

// True if the monic polynomial (little-endian) has no monic factor of degree
// 1..deg/2 over GF(p).
bool IsIrreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

}  // namespace arcforms

#endif  // ARCFORMS_FIELD_H_
