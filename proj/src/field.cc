// Copyright 2026 The ppcake Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ppcc/field.h"

#include <bit>
#include <string>

namespace ppcc {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) %
                                    m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (x % q == 0) return x == q;
  }
  std::uint64_t d = x - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t y = powmod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      y = mulmod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= kMaxModulus || !is_prime(p)) {
    throw FieldError("modulus must be an odd prime below 2^62, got " +
                     std::to_string(p));
  }
  bits_ = std::bit_width(p);  // == ceil(log2 p) since p is not a power of two
}

PrimeModulus PrimeModulus::smallest_above(std::uint64_t bound) {
  if (bound >= kMaxModulus - 1) {
    throw FieldError("no supported prime above " + std::to_string(bound));
  }
  std::uint64_t c = bound + 1;
  if (c < 3) c = 3;
  while (!is_prime(c)) {
    ++c;
    if (c >= kMaxModulus) {
      throw FieldError("no supported prime above " + std::to_string(bound));
    }
  }
  return PrimeModulus(c);
}

std::uint64_t PrimeModulus::pow(std::uint64_t base, std::uint64_t exp) const {
  return powmod(base, exp, p_);
}

std::uint64_t PrimeModulus::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw FieldError("inversion of zero");
  return powmod(a, p_ - 2, p_);
}

std::uint64_t PrimeModulus::from_signed(std::int64_t x) const {
  if (x >= 0) return static_cast<std::uint64_t>(x) % p_;
  std::uint64_t mag = static_cast<std::uint64_t>(-(x + 1)) + 1;
  return neg(mag % p_);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(modulus_ == o.modulus_)) throw FieldError("modulus mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return FieldElement(modulus_.add(value_, o.value_), modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return FieldElement(modulus_.sub(value_, o.value_), modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return FieldElement(modulus_.mul(value_, o.value_), modulus_);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(modulus_.neg(value_), modulus_);
}

FieldElement FieldElement::inverse() const {
  return FieldElement(modulus_.inv(value_), modulus_);
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b,
                         FieldOp op) {
  switch (op) {
    case FieldOp::kAdd:
      return a + b;
    case FieldOp::kSub:
      return a - b;
    case FieldOp::kMul:
      return a * b;
    case FieldOp::kNeg:
      return -a;
    case FieldOp::kInv:
      return a.inverse();
  }
  throw FieldError("unknown field op");
}

std::vector<int> to_bits(const FieldElement& a) {
  const int s = a.modulus().bits();
  std::vector<int> bits(s);
  for (int j = 0; j < s; ++j) {
    bits[s - 1 - j] = static_cast<int>((a.value() >> j) & 1);
  }
  return bits;
}

FieldElement from_bits(const std::vector<int>& bits,
                       const PrimeModulus& modulus) {
  std::uint64_t v = 0;
  for (int b : bits) v = (v << 1) | static_cast<std::uint64_t>(b & 1);
  return FieldElement(v, modulus);
}

}  // namespace ppcc
