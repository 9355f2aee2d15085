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

#include "ppcc/valuation.h"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ppcc {

namespace {

using boost::multiprecision::cpp_int;

bool parse_digits(std::string_view s, cpp_int& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  return true;
}

}  // namespace

Rational PiecewiseUniformValuation::support_length() const {
  Rational total = 0;
  for (const auto& iv : intervals_) total += iv.length();
  return total;
}

const char* violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kReversal: return "reversal";
    case ViolationKind::kOverlap: return "overlap";
    case ViolationKind::kEmptySupport: return "empty support";
    case ViolationKind::kOutOfRange: return "out of range";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) os << "; ";
    os << violation_name(violations[k].kind);
    if (violations[k].index > 0) os << " at interval " << violations[k].index;
  }
  return os.str();
}

ValidationReport validate(const PiecewiseUniformValuation& v) {
  ValidationReport report;
  const auto& ivs = v.intervals();
  for (std::size_t j = 0; j < ivs.size(); ++j) {
    const int idx = static_cast<int>(j) + 1;
    if (ivs[j].lo < 0 || ivs[j].hi > 1) {
      report.violations.push_back({ViolationKind::kOutOfRange, idx});
    }
    if (ivs[j].hi < ivs[j].lo) {
      report.violations.push_back({ViolationKind::kReversal, idx});
    }
    if (j > 0 && ivs[j].lo < ivs[j - 1].hi) {
      report.violations.push_back({ViolationKind::kOverlap, idx});
    }
  }
  if (v.support_length() <= 0) {
    report.violations.push_back({ViolationKind::kEmptySupport, 0});
  }
  return report;
}

Rational parse_endpoint(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ValuationError("malformed endpoint '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    cpp_int num, den;
    if (!parse_digits(text.substr(0, slash), num) ||
        !parse_digits(text.substr(slash + 1), den) || den == 0) {
      return fail();
    }
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  cpp_int whole = 0, frac = 0, scale = 1;
  if (dot == std::string_view::npos) {
    if (!parse_digits(text, whole)) return fail();
    return Rational(whole);
  }
  const auto head = text.substr(0, dot);
  const auto tail = text.substr(dot + 1);
  if (head.empty() && tail.empty()) return fail();
  if (!head.empty() && !parse_digits(head, whole)) return fail();
  if (!tail.empty()) {
    if (!parse_digits(tail, frac)) return fail();
    for (std::size_t k = 0; k < tail.size(); ++k) scale *= 10;
  }
  return Rational(whole) + Rational(frac, scale);
}

int decimal_digits(const Rational& x) {
  cpp_int den = boost::multiprecision::denominator(x);
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) {
    throw ValuationError("endpoint " + format_rational(x) +
                         " is not a terminating decimal");
  }
  return std::max(twos, fives);
}

int required_digits(const PiecewiseUniformValuation& v) {
  int d = 0;
  for (const auto& iv : v.intervals()) {
    d = std::max({d, decimal_digits(iv.lo), decimal_digits(iv.hi)});
  }
  return d;
}

std::int64_t pow10(int d) {
  if (d < 0 || d > 18) throw ValuationError("precision out of range");
  std::int64_t q = 1;
  for (int k = 0; k < d; ++k) q *= 10;
  return q;
}

Precision choose_precision(std::span<const PiecewiseUniformValuation> vs) {
  Precision p;
  for (const auto& v : vs) p.d = std::max(p.d, required_digits(v));
  p.Q = pow10(p.d);
  return p;
}

IntegerValuation IntegerValuation::padded(int L) const {
  if (L < slots()) throw ValuationError("cannot pad below the slot count");
  IntegerValuation out = *this;
  out.endpoints.resize(2 * static_cast<std::size_t>(L), Q);
  return out;
}

bool IntegerValuation::well_formed() const {
  if (endpoints.size() % 2 != 0 || ell < 0 || ell > slots()) return false;
  std::int64_t prev = 0;
  for (std::size_t k = 0; k < endpoints.size(); ++k) {
    if (endpoints[k] < prev || endpoints[k] > Q) return false;
    prev = endpoints[k];
    if (static_cast<int>(k / 2) >= ell && endpoints[k] != Q) return false;
  }
  return true;
}

IntegerValuation discretize(const PiecewiseUniformValuation& v,
                            std::int64_t Q) {
  IntegerValuation out;
  out.Q = Q;
  out.ell = v.size();
  for (const auto& iv : v.intervals()) {
    for (const Rational* x : {&iv.lo, &iv.hi}) {
      const Rational scaled = *x * Q;
      if (boost::multiprecision::denominator(scaled) != 1) {
        throw ValuationError("endpoint " + format_rational(*x) +
                             " is not on the 1/" + std::to_string(Q) +
                             " grid");
      }
      out.endpoints.push_back(
          static_cast<std::int64_t>(boost::multiprecision::numerator(scaled)));
    }
  }
  return out;
}

PiecewiseUniformValuation from_integer(const IntegerValuation& v) {
  std::vector<Interval> ivs;
  for (int j = 1; j <= v.ell; ++j) {
    ivs.push_back({Rational(v.a(j), v.Q), Rational(v.b(j), v.Q)});
  }
  return PiecewiseUniformValuation(std::move(ivs));
}

Rational overlap_length(std::span<const Interval> x,
                        std::span<const Interval> y) {
  Rational total = 0;
  for (const auto& p : x) {
    for (const auto& q : y) {
      const Rational lo = std::max(p.lo, q.lo);
      const Rational hi = std::min(p.hi, q.hi);
      if (hi > lo) total += hi - lo;
    }
  }
  return total;
}

Rational measure(const PiecewiseUniformValuation& v,
                 std::span<const Interval> piece) {
  const Rational support = v.support_length();
  if (support <= 0) throw ValuationError("valuation has empty support");
  return overlap_length(v.intervals(), piece) / support;
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) {
    os << '/' << boost::multiprecision::denominator(r);
  }
  return os.str();
}

std::string format_decimal(const Rational& r, int digits) {
  cpp_int scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  const Rational scaled = r * scale;
  cpp_int num = boost::multiprecision::numerator(scaled);
  cpp_int den = boost::multiprecision::denominator(scaled);
  const bool neg = num < 0;
  if (neg) num = -num;
  cpp_int rounded = (2 * num + den) / (2 * den);  // half up
  std::string s = rounded.str();
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
  }
  s.insert(s.size() - digits, ".");
  return neg ? "-" + s : s;
}

}  // namespace ppcc
