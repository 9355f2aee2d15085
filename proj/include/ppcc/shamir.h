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

// Shamir (t, n) threshold sharing over F_p with evaluation points 1..n and
// threshold t = floor((n + 1) / 2).

#ifndef PPCC_SHAMIR_H_
#define PPCC_SHAMIR_H_

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ppcc/field.h"

namespace ppcc {

using Rng = std::mt19937_64;

// 1-based party index.
using PartyId = int;

class SharingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShareParams {
  int n = 0;
  int t = 0;

  // Honest-majority threshold; throws for n < 1. With one party the
  // sharing is the secret itself.
  static ShareParams for_parties(int n);

  bool operator==(const ShareParams&) const = default;
};

// The n shares of one secret; shares[i - 1] belongs to party i.
struct Sharing {
  std::vector<std::uint64_t> shares;
  ShareParams params;

  std::uint64_t share_of(PartyId i) const { return shares[i - 1]; }
};

// Uniform residue in [0, p) by rejection sampling.
std::uint64_t uniform_residue(Rng& rng, const PrimeModulus& mod);

Sharing share(const FieldElement& secret, const ShareParams& params,
              Rng& rng);
Sharing share(std::uint64_t secret, const ShareParams& params,
              const PrimeModulus& mod, Rng& rng);

Sharing constant_sharing(const FieldElement& alpha, const ShareParams& params);

using SharePoint = std::pair<PartyId, std::uint64_t>;

// Lagrange interpolation at zero. Needs at least t points with distinct
// party indices in [1, n].
FieldElement reconstruct(std::span<const SharePoint> points,
                         const ShareParams& params, const PrimeModulus& mod);

// Reconstructs from the first t shares.
std::uint64_t reconstruct_secret(const Sharing& s, const PrimeModulus& mod);

// Lagrange coefficients lambda_x such that f(0) = sum lambda_x f(x) for
// polynomials of degree < xs.size().
std::vector<std::uint64_t> lagrange_at_zero(std::span<const PartyId> xs,
                                            const PrimeModulus& mod);

}  // namespace ppcc

#endif  // PPCC_SHAMIR_H_
