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

// Plaintext piecewise-uniform valuations: exact rational supports on the
// unit cake, their quantization to the integer grid [0, Q], and measure.

#ifndef PPCC_VALUATION_H_
#define PPCC_VALUATION_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ppcc {

using Rational = boost::multiprecision::cpp_rational;

class ValuationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Half-open [lo, hi).
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi > lo ? Rational(hi - lo) : Rational(0); }
  bool operator==(const Interval&) const = default;
};

class PiecewiseUniformValuation {
 public:
  PiecewiseUniformValuation() = default;
  explicit PiecewiseUniformValuation(std::vector<Interval> intervals)
      : intervals_(std::move(intervals)) {}

  const std::vector<Interval>& intervals() const { return intervals_; }
  int size() const { return static_cast<int>(intervals_.size()); }
  Rational support_length() const;

 private:
  std::vector<Interval> intervals_;
};

enum class ViolationKind { kReversal, kOverlap, kEmptySupport, kOutOfRange };

const char* violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int index;  // 1-based interval index, 0 for whole-valuation problems
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string describe() const;
};

ValidationReport validate(const PiecewiseUniformValuation& v);

// Parses "0.125", "1", "3/8". Throws ValuationError on malformed text.
Rational parse_endpoint(std::string_view text);

// Smallest d with x * 10^d integral; throws for non-terminating decimals.
int decimal_digits(const Rational& x);

struct Precision {
  int d = 0;
  std::int64_t Q = 1;
};

// d is the largest per-endpoint digit count; the resulting Q is lossless.
int required_digits(const PiecewiseUniformValuation& v);
Precision choose_precision(std::span<const PiecewiseUniformValuation> vs);
std::int64_t pow10(int d);

// Endpoints a_1, b_1, ..., a_L, b_L on [0, Q]; entries past 2 * ell are Q.
struct IntegerValuation {
  std::vector<std::int64_t> endpoints;
  std::int64_t Q = 0;
  int ell = 0;

  int slots() const { return static_cast<int>(endpoints.size() / 2); }
  std::int64_t a(int j) const { return endpoints[2 * (j - 1)]; }  // 1-based
  std::int64_t b(int j) const { return endpoints[2 * (j - 1) + 1]; }
  IntegerValuation padded(int L) const;
  // Checks the integer ordering constraint and the padding rule.
  bool well_formed() const;
};

IntegerValuation discretize(const PiecewiseUniformValuation& v,
                            std::int64_t Q);
PiecewiseUniformValuation from_integer(const IntegerValuation& v);

// |piece ∩ supp(v)| / |supp(v)|; the piece intervals must be disjoint.
Rational measure(const PiecewiseUniformValuation& v,
                 std::span<const Interval> piece);

// Length of the intersection of two interval lists.
Rational overlap_length(std::span<const Interval> x,
                        std::span<const Interval> y);

std::string format_rational(const Rational& r);
std::string format_decimal(const Rational& r, int digits = 6);

}  // namespace ppcc

#endif  // PPCC_VALUATION_H_
