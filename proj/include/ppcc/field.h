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

#ifndef PPCC_FIELD_H_
#define PPCC_FIELD_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ppcc {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t x);

// Largest modulus accepted. Products of two residues are formed in 128 bits.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 62);

// A public prime p together with s = ceil(log2 p), the bit length used for
// bit decompositions of residues.
class PrimeModulus {
 public:
  // Throws FieldError unless p is an odd prime below kMaxModulus.
  explicit PrimeModulus(std::uint64_t p);

  // Smallest prime strictly greater than `bound`.
  static PrimeModulus smallest_above(std::uint64_t bound);

  std::uint64_t p() const { return p_; }
  int bits() const { return bits_; }
  std::uint64_t half_inverse() const { return (p_ + 1) / 2; }

  std::uint64_t reduce(std::uint64_t x) const { return x % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  // Throws FieldError on zero.
  std::uint64_t inv(std::uint64_t a) const;

  // Maps a signed integer to its residue.
  std::uint64_t from_signed(std::int64_t x) const;

  bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
  int bits_;
};

// A residue modulo a public prime. Carries its modulus so mixed-field
// arithmetic is caught at runtime.
class FieldElement {
 public:
  FieldElement(std::uint64_t value, const PrimeModulus& modulus)
      : value_(modulus.reduce(value)), modulus_(modulus) {}

  std::uint64_t value() const { return value_; }
  const PrimeModulus& modulus() const { return modulus_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const {
    return value_ == o.value_ && modulus_ == o.modulus_;
  }

 private:
  void check_same(const FieldElement& o) const;

  std::uint64_t value_;
  PrimeModulus modulus_;
};

enum class FieldOp { kAdd, kSub, kMul, kNeg, kInv };

// Applies `op` to a (and b for binary ops). kNeg and kInv ignore b.
FieldElement field_arith(const FieldElement& a, const FieldElement& b,
                         FieldOp op);

// Big-endian bits b_{s-1} ... b_0 of a.value(), s = modulus bit length.
std::vector<int> to_bits(const FieldElement& a);
FieldElement from_bits(const std::vector<int>& bits,
                       const PrimeModulus& modulus);

}  // namespace ppcc

#endif  // PPCC_FIELD_H_
