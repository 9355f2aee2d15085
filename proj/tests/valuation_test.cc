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

#include "doctest.h"
#include "test_support.h"

namespace ppcc {
namespace {

using testing::R;
using testing::V;

TEST_CASE("endpoint parsing") {
  CHECK(R("0.125") == Rational(1, 8));
  CHECK(R(".5") == Rational(1, 2));
  CHECK(R("1") == 1);
  CHECK(R("3/8") == Rational(3, 8));
  CHECK(R("1.") == 1);
  for (const char* bad : {"", ".", "-0.1", "1/0", "a", "0.1.2", "1/2/3", " 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_endpoint(bad), ValuationError);
  }
}

TEST_CASE("decimal digits and precision") {
  CHECK(decimal_digits(R("0")) == 0);
  CHECK(decimal_digits(R("0.25")) == 2);
  CHECK(decimal_digits(R("1/8")) == 3);
  CHECK(decimal_digits(R("0.50")) == 1);
  CHECK_THROWS_AS(decimal_digits(R("1/3")), ValuationError);
  const std::vector<PiecewiseUniformValuation> vs = testing::worked_example();
  const Precision p = choose_precision(vs);
  CHECK(p.d == 2);
  CHECK(p.Q == 100);
  CHECK(pow10(0) == 1);
  CHECK_THROWS_AS(pow10(19), ValuationError);
}

TEST_CASE("validation reports every violation kind") {
  CHECK(validate(V({{"0", "0.2"}, {"0.3", "0.4"}})).ok());
  // touching intervals are fine
  CHECK(validate(V({{"0", "0.2"}, {"0.2", "0.4"}})).ok());
  CHECK(validate(V({{"0.7", "0.3"}})).has(ViolationKind::kReversal));
  CHECK(validate(V({{"0", "0.5"}, {"0.4", "0.6"}})).has(ViolationKind::kOverlap));
  CHECK(validate(V({{"0.5", "0.5"}})).has(ViolationKind::kEmptySupport));
  CHECK(validate(V({{"0.5", "3/2"}})).has(ViolationKind::kOutOfRange));
  const auto rep = validate(V({{"0.7", "0.3"}}));
  CHECK(rep.describe().find("reversal") != std::string::npos);
}

TEST_CASE("discretize, pad and convert back") {
  const auto v = V({{"0.1", "0.25"}, {"0.5", "1"}});
  const IntegerValuation w = discretize(v, 100);
  CHECK(w.endpoints == std::vector<std::int64_t>{10, 25, 50, 100});
  CHECK(w.ell == 2);
  CHECK(w.well_formed());
  const IntegerValuation p = w.padded(4);
  CHECK(p.endpoints == std::vector<std::int64_t>{10, 25, 50, 100, 100, 100, 100, 100});
  CHECK(p.a(3) == 100);
  CHECK(p.well_formed());
  CHECK_THROWS_AS(w.padded(1), ValuationError);
  CHECK(from_integer(p).intervals() == v.intervals());
  CHECK_THROWS_AS(discretize(v, 10), ValuationError);

  IntegerValuation bad = p;
  bad.endpoints[5] = 99;  // padding slot below Q
  CHECK_FALSE(bad.well_formed());
}

TEST_CASE("measure and overlap") {
  const auto v = V({{"0", "0.2"}, {"0.6", "0.8"}});
  CHECK(v.support_length() == Rational(2, 5));
  const std::vector<Interval> piece{{R("0.1"), R("0.7")}};
  CHECK(overlap_length(v.intervals(), piece) == Rational(1, 5));
  CHECK(measure(v, piece) == Rational(1, 2));
  CHECK_THROWS_AS(measure(V({{"0.5", "0.5"}}), piece), ValuationError);
}

TEST_CASE("formatting") {
  CHECK(format_rational(Rational(3, 8)) == "3/8");
  CHECK(format_rational(Rational(2)) == "2");
  CHECK(format_decimal(Rational(1, 8)) == "0.125000");
  CHECK(format_decimal(Rational(2, 3), 3) == "0.667");
  CHECK(format_decimal(Rational(1), 2) == "1.00");
}

}  // namespace
}  // namespace ppcc
