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

#include <bit>
#include <set>
#include <string>

namespace ppcc {

ShareParams ShareParams::for_parties(int n) {
  if (n < 1) throw SharingError("need at least one party");
  return ShareParams{n, (n + 1) / 2};
}

std::uint64_t uniform_residue(Rng& rng, const PrimeModulus& mod) {
  const std::uint64_t mask = (std::uint64_t{1} << mod.bits()) - 1;
  for (;;) {
    std::uint64_t r = rng() & mask;
    if (r < mod.p()) return r;
  }
}

Sharing share(std::uint64_t secret, const ShareParams& params,
              const PrimeModulus& mod, Rng& rng) {
  // f(x) = secret + c_1 x + ... + c_{t-1} x^{t-1}
  std::vector<std::uint64_t> coeffs(params.t);
  coeffs[0] = mod.reduce(secret);
  for (int j = 1; j < params.t; ++j) coeffs[j] = uniform_residue(rng, mod);
  Sharing out{std::vector<std::uint64_t>(params.n), params};
  for (int i = 1; i <= params.n; ++i) {
    std::uint64_t acc = 0;
    for (int j = params.t - 1; j >= 0; --j) {
      acc = mod.add(mod.mul(acc, static_cast<std::uint64_t>(i)), coeffs[j]);
    }
    out.shares[i - 1] = acc;
  }
  return out;
}

Sharing share(const FieldElement& secret, const ShareParams& params,
              Rng& rng) {
  return share(secret.value(), params, secret.modulus(), rng);
}

Sharing constant_sharing(const FieldElement& alpha,
                         const ShareParams& params) {
  return Sharing{std::vector<std::uint64_t>(params.n, alpha.value()), params};
}

std::vector<std::uint64_t> lagrange_at_zero(std::span<const PartyId> xs,
                                            const PrimeModulus& mod) {
  std::vector<std::uint64_t> lambda(xs.size());
  for (std::size_t a = 0; a < xs.size(); ++a) {
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::size_t b = 0; b < xs.size(); ++b) {
      if (a == b) continue;
      num = mod.mul(num, mod.neg(mod.reduce(xs[b])));
      den = mod.mul(den, mod.sub(mod.reduce(xs[a]), mod.reduce(xs[b])));
    }
    lambda[a] = mod.mul(num, mod.inv(den));
  }
  return lambda;
}

FieldElement reconstruct(std::span<const SharePoint> points,
                         const ShareParams& params, const PrimeModulus& mod) {
  if (static_cast<int>(points.size()) < params.t) {
    throw SharingError("need at least " + std::to_string(params.t) +
                       " shares, got " + std::to_string(points.size()));
  }
  std::set<PartyId> seen;
  std::vector<PartyId> xs;
  for (const auto& [id, _] : points) {
    if (id < 1 || id > params.n) {
      throw SharingError("party index out of range: " + std::to_string(id));
    }
    if (!seen.insert(id).second) {
      throw SharingError("duplicate party index " + std::to_string(id));
    }
    xs.push_back(id);
  }
  const auto lambda = lagrange_at_zero(xs, mod);
  std::uint64_t acc = 0;
  for (std::size_t a = 0; a < points.size(); ++a) {
    acc = mod.add(acc, mod.mul(lambda[a], mod.reduce(points[a].second)));
  }
  return FieldElement(acc, mod);
}

std::uint64_t reconstruct_secret(const Sharing& s, const PrimeModulus& mod) {
  std::vector<SharePoint> pts;
  for (int i = 1; i <= s.params.t; ++i) pts.emplace_back(i, s.share_of(i));
  return reconstruct(pts, s.params, mod).value();
}

}  // namespace ppcc
