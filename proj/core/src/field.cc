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

#include "arcforms/field.h"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "arcforms/errors.h"

namespace arcforms {
namespace {

// Conway polynomials C_{p,h}, little-endian, for every prime power
// q = p^h <= 256 with h > 1. These fix the element encoding, so they must
// never change.
const std::map<std::pair<std::uint32_t, std::uint32_t>,
               std::vector<std::uint32_t>>&
ConwayTable() {
  static const auto* table = new std::map<
      std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>{
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return *table;
}

// Multiplicative log/exp tables are built for fields up to this order.
constexpr std::uint64_t kTableLimit = 1u << 16;

// Operands stay below 2^32, so the product fits in 64 bits.
std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (a % m) * (b % m) % m;
}

// Remainder of `num` modulo the monic `den` over GF(p); both little-endian.
std::vector<std::uint64_t> PolyRem(std::vector<std::uint64_t> num,
                                   std::span<const std::uint64_t> den,
                                   std::uint64_t p) {
  const std::size_t d = den.size() - 1;
  while (num.size() > d) {
    const std::uint64_t lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - d;
      for (std::size_t i = 0; i < d; ++i) {
        num[shift + i] = (num[shift + i] + p - MulMod(lead, den[i], p)) % p;
      }
    }
    num.pop_back();
  }
  return num;
}

}  // namespace

struct Field::Impl {
  FieldSpec spec;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> p_pow;  // p^0 .. p^h
  bool has_tables = false;
  std::vector<std::uint32_t> exp;  // length 2(q-1)
  std::vector<std::uint32_t> log;  // length q, log[0] unused

  std::uint32_t Digit(std::uint32_t code, std::uint32_t i) const {
    return static_cast<std::uint32_t>((code / p_pow[i]) % spec.p);
  }

  std::uint32_t Encode(std::span<const std::uint64_t> digits) const {
    std::uint64_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * spec.p + digits[i];
    return static_cast<std::uint32_t>(code);
  }

  std::uint32_t AddCodes(std::uint32_t a, std::uint32_t b) const {
    if (spec.h == 1) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % spec.p);
    if (spec.p == 2) return a ^ b;
    std::uint64_t code = 0;
    for (std::uint32_t i = spec.h; i-- > 0;) {
      code = code * spec.p + (Digit(a, i) + Digit(b, i)) % spec.p;
    }
    return static_cast<std::uint32_t>(code);
  }

  std::uint32_t NegCode(std::uint32_t a) const {
    if (spec.h == 1) return a == 0 ? 0 : spec.p - a;
    if (spec.p == 2) return a;
    std::uint64_t code = 0;
    for (std::uint32_t i = spec.h; i-- > 0;) {
      const std::uint32_t d = Digit(a, i);
      code = code * spec.p + (d == 0 ? 0 : spec.p - d);
    }
    return static_cast<std::uint32_t>(code);
  }

  std::uint32_t SlowMul(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t p = spec.p;
    if (spec.h == 1) return static_cast<std::uint32_t>(MulMod(a, b, p));
    std::vector<std::uint64_t> prod(2 * spec.h - 1, 0);
    for (std::uint32_t i = 0; i < spec.h; ++i) {
      const std::uint64_t ai = Digit(a, i);
      if (ai == 0) continue;
      for (std::uint32_t j = 0; j < spec.h; ++j) {
        prod[i + j] = (prod[i + j] + MulMod(ai, Digit(b, j), p)) % p;
      }
    }
    std::vector<std::uint64_t> modulus(spec.irreducible.begin(),
                                       spec.irreducible.end());
    auto rem = PolyRem(std::move(prod), modulus, p);
    rem.resize(spec.h, 0);
    return Encode(rem);
  }

  std::uint32_t Mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables) return exp[log[a] + log[b]];
    return SlowMul(a, b);
  }

  std::uint32_t Pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1) result = Mul(result, a);
      a = Mul(a, a);
      e >>= 1;
    }
    return result;
  }

  void BuildTables() {
    if (q > kTableLimit) return;
    const std::uint64_t order = q - 1;
    // Prime factors of q-1 for the primitivity test.
    std::vector<std::uint64_t> factors;
    std::uint64_t rest = order;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
      if (rest % f == 0) {
        factors.push_back(f);
        while (rest % f == 0) rest /= f;
      }
    }
    if (rest > 1) factors.push_back(rest);
    std::uint32_t generator = 0;
    for (std::uint32_t g = 1; g < q; ++g) {
      bool primitive = true;
      for (std::uint64_t f : factors) {
        if (Pow(g, order / f) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = g;
        break;
      }
    }
    exp.assign(2 * order, 0);
    log.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp[i] = x;
      exp[i + order] = x;
      log[x] = static_cast<std::uint32_t>(i);
      x = SlowMul(x, generator);
    }
    has_tables = true;
  }
};

std::uint64_t FieldSpec::q() const {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < h; ++i) result *= p;
  return result;
}

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> BuiltinPolynomial(std::uint32_t p,
                                                            std::uint32_t h) {
  const auto& table = ConwayTable();
  auto it = table.find({p, h});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> PrimePowerDecompose(
    std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t h = 0;
  while (q % p == 0) {
    q /= p;
    ++h;
  }
  if (q != 1 || p > std::numeric_limits<std::uint32_t>::max()) {
    return std::nullopt;
  }
  return std::make_pair(static_cast<std::uint32_t>(p), h);
}

bool IsIrreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t n = poly.size() - 1;
  std::vector<std::uint64_t> target(poly.begin(), poly.end());
  for (std::size_t d = 1; d <= n / 2; ++d) {
    // Enumerate monic divisors of degree d by counting their lower
    // coefficients in base p.
    std::vector<std::uint64_t> divisor(d + 1, 0);
    divisor[d] = 1;
    while (true) {
      auto rem = PolyRem(target, divisor, p);
      if (std::all_of(rem.begin(), rem.end(),
                      [](std::uint64_t c) { return c == 0; })) {
        return false;
      }
      std::size_t i = 0;
      while (i < d && ++divisor[i] == p) divisor[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

Field Field::Make(std::int64_t p, std::int64_t h,
                  std::optional<std::vector<std::int64_t>> irreducible) {
  if (p < 2 || p > std::numeric_limits<std::int32_t>::max()) {
    throw Error(ErrorCode::kNotPrime, "characteristic out of range");
  }
  if (!IsPrime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (h < 1) throw Error(ErrorCode::kInvalidInput, "extension degree must be >= 1");

  auto impl = std::make_shared<Impl>();
  impl->spec.p = static_cast<std::uint32_t>(p);
  impl->spec.h = static_cast<std::uint32_t>(h);

  std::uint64_t q = 1;
  for (std::int64_t i = 0; i < h; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorCode::kUnsupportedField, "field order exceeds 2^32");
    }
  }
  impl->q = q;

  if (irreducible) {
    if (irreducible->size() != static_cast<std::size_t>(h) + 1) {
      throw Error(ErrorCode::kInvalidInput,
                  "defining polynomial must have h+1 coefficients");
    }
    std::vector<std::uint32_t> poly;
    for (std::int64_t c : *irreducible) {
      const std::int64_t r = ((c % p) + p) % p;
      poly.push_back(static_cast<std::uint32_t>(r));
    }
    if (poly.back() != 1) {
      throw Error(ErrorCode::kInvalidInput, "defining polynomial must be monic");
    }
    if (h == 1) {
      poly = {0, 1};
    } else if (!IsIrreducible(impl->spec.p, poly)) {
      throw Error(ErrorCode::kReduciblePolynomial,
                  "defining polynomial is reducible over GF(" +
                      std::to_string(p) + ")");
    }
    impl->spec.irreducible = std::move(poly);
  } else if (h == 1) {
    impl->spec.irreducible = {0, 1};
  } else {
    auto builtin = BuiltinPolynomial(impl->spec.p, impl->spec.h);
    if (!builtin) {
      throw Error(ErrorCode::kUnsupportedField,
                  "no built-in polynomial for q = " +
                      std::to_string(impl->q) + "; supply one");
    }
    impl->spec.irreducible = *builtin;
  }

  impl->p_pow.resize(impl->spec.h + 1);
  impl->p_pow[0] = 1;
  for (std::uint32_t i = 1; i <= impl->spec.h; ++i) {
    impl->p_pow[i] = impl->p_pow[i - 1] * impl->spec.p;
  }
  impl->BuildTables();
  return Field(std::move(impl));
}

Field Field::OfOrder(std::uint64_t q) {
  auto ph = PrimePowerDecompose(q);
  if (!ph) {
    throw Error(ErrorCode::kNotPrime, std::to_string(q) + " is not a prime power");
  }
  return Make(ph->first, ph->second);
}

Field Field::FromSpec(const FieldSpec& spec) {
  std::vector<std::int64_t> poly(spec.irreducible.begin(), spec.irreducible.end());
  return Make(spec.p, spec.h, std::move(poly));
}

const FieldSpec& Field::spec() const { return impl_->spec; }
std::uint64_t Field::order() const { return impl_->q; }
std::uint32_t Field::characteristic() const { return impl_->spec.p; }
std::uint32_t Field::degree() const { return impl_->spec.h; }

Element Field::FromInt(std::int64_t value) const {
  const std::int64_t p = impl_->spec.p;
  return Element{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Element Field::At(std::uint64_t index) const {
  if (index >= impl_->q) {
    throw Error(ErrorCode::kIndexOutOfRange, "element index out of range");
  }
  return Element{static_cast<std::uint32_t>(index)};
}

Element Field::FromCoeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != impl_->spec.h) {
    throw Error(ErrorCode::kDimensionMismatch,
                "element needs " + std::to_string(impl_->spec.h) + " coefficients");
  }
  const std::int64_t p = impl_->spec.p;
  std::vector<std::uint64_t> digits;
  for (std::int64_t c : coeffs) {
    if (c < 0 || c >= p) {
      throw Error(ErrorCode::kInvalidInput, "coefficient not reduced mod p");
    }
    digits.push_back(static_cast<std::uint64_t>(c));
  }
  return Element{impl_->Encode(digits)};
}

std::vector<std::uint32_t> Field::Coeffs(Element a) const {
  std::vector<std::uint32_t> out(impl_->spec.h);
  for (std::uint32_t i = 0; i < impl_->spec.h; ++i) out[i] = impl_->Digit(a.code(), i);
  return out;
}

Element Field::Add(Element a, Element b) const {
  return Element{impl_->AddCodes(a.code(), b.code())};
}

Element Field::Sub(Element a, Element b) const {
  return Element{impl_->AddCodes(a.code(), impl_->NegCode(b.code()))};
}

Element Field::Neg(Element a) const { return Element{impl_->NegCode(a.code())}; }

Element Field::Mul(Element a, Element b) const {
  return Element{impl_->Mul(a.code(), b.code())};
}

Element Field::Inv(Element a) const {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (impl_->has_tables) {
    const std::uint64_t order = impl_->q - 1;
    const std::uint32_t l = impl_->log[a.code()];
    return Element{impl_->exp[(order - l) % order]};
  }
  return Element{impl_->Pow(a.code(), impl_->q - 2)};
}

Element Field::Div(Element a, Element b) const { return Mul(a, Inv(b)); }

Element Field::Pow(Element a, std::int64_t exponent) const {
  if (exponent < 0) {
    a = Inv(a);
    exponent = -exponent;
  }
  if (exponent == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t reduced =
      static_cast<std::uint64_t>(exponent) % (impl_->q - 1);
  return Element{impl_->Pow(a.code(), reduced == 0 ? impl_->q - 1 : reduced)};
}

std::string Field::ToString(Element a) const {
  if (impl_->spec.h == 1) return std::to_string(a.code());
  std::ostringstream os;
  os << '[';
  const auto c = Coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

Element FieldArith(const Field& field, ArithOp op, Element a, Operand b) {
  auto second = [&]() -> Element {
    if (const auto* e = std::get_if<Element>(&b)) return *e;
    throw Error(ErrorCode::kInvalidInput, "binary operation needs an element");
  };
  switch (op) {
    case ArithOp::kAdd: return field.Add(a, second());
    case ArithOp::kSub: return field.Sub(a, second());
    case ArithOp::kMul: return field.Mul(a, second());
    case ArithOp::kInv: return field.Inv(a);
    case ArithOp::kNeg: return field.Neg(a);
    case ArithOp::kPow:
      if (const auto* e = std::get_if<std::int64_t>(&b)) return field.Pow(a, *e);
      throw Error(ErrorCode::kInvalidInput, "pow needs an integer exponent");
  }
  throw Error(ErrorCode::kInvalidInput, "unknown operation");
}

}  // namespace arcforms
