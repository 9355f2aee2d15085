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

#include "ppcc/shamir.h"

#include <vector>

#include "doctest.h"

namespace ppcc {
namespace {

TEST_CASE("threshold is floor((n+1)/2)") {
  CHECK(ShareParams::for_parties(2).t == 1);
  CHECK(ShareParams::for_parties(3).t == 2);
  CHECK(ShareParams::for_parties(4).t == 2);
  CHECK(ShareParams::for_parties(7).t == 4);
  CHECK_THROWS_AS(ShareParams::for_parties(0), SharingError);
}

TEST_CASE("any t shares reconstruct") {
  PrimeModulus m(1000003);
  Rng rng(7);
  for (int n = 2; n <= 7; ++n) {
    const auto params = ShareParams::for_parties(n);
    const Sharing s = share(424242, params, m, rng);
    for (int start = 1; start + params.t - 1 <= n; ++start) {
      std::vector<SharePoint> pts;
      for (int i = start; i < start + params.t; ++i) {
        pts.emplace_back(i, s.share_of(i));
      }
      CHECK(reconstruct(pts, params, m).value() == 424242);
    }
    CHECK(reconstruct_secret(s, m) == 424242);
  }
}

TEST_CASE("reconstruction rejects bad point sets") {
  PrimeModulus m(101);
  Rng rng(1);
  const auto params = ShareParams::for_parties(5);
  const Sharing s = share(9, params, m, rng);
  std::vector<SharePoint> few{{1, s.share_of(1)}, {2, s.share_of(2)}};
  CHECK_THROWS_AS(reconstruct(few, params, m), SharingError);
  std::vector<SharePoint> dup{{1, s.share_of(1)}, {1, s.share_of(1)},
                              {2, s.share_of(2)}};
  CHECK_THROWS_AS(reconstruct(dup, params, m), SharingError);
  std::vector<SharePoint> range{{0, 1}, {2, 2}, {3, 3}};
  CHECK_THROWS_AS(reconstruct(range, params, m), SharingError);
}

TEST_CASE("fewer than t shares are uniformly distributed") {
  // n = 5, t = 3: two shares of 0 and of 1 should look alike.
  PrimeModulus m(11);
  const auto params = ShareParams::for_parties(5);
  Rng rng(3);
  std::vector<int> h0(121), h1(121);
  for (int k = 0; k < 60500; ++k) {
    const Sharing a = share(0, params, m, rng);
    const Sharing b = share(1, params, m, rng);
    ++h0[a.share_of(1) * 11 + a.share_of(2)];
    ++h1[b.share_of(1) * 11 + b.share_of(2)];
  }
  for (int c = 0; c < 121; ++c) {
    CHECK(h0[c] > 350);
    CHECK(h0[c] < 650);
    CHECK(h1[c] > 350);
    CHECK(h1[c] < 650);
  }
}

TEST_CASE("lagrange coefficients sum to one") {
  PrimeModulus m(101);
  const std::vector<PartyId> xs{1, 3, 4};
  std::uint64_t acc = 0;
  for (auto l : lagrange_at_zero(xs, m)) acc = m.add(acc, l);
  CHECK(acc == 1);
}

}  // namespace
}  // namespace ppcc
