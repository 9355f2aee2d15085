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

#include "ppcc/config.h"

#include <string>

namespace ppcc {

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw FieldError("factorial out of range");
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::int64_t magnitude_bound(int n, std::int64_t Q) {
  if (n < 1 || Q < 1) throw FieldError("magnitude bound needs n, Q >= 1");
  const unsigned __int128 m = static_cast<unsigned __int128>(factorial(n)) *
                              static_cast<unsigned __int128>(Q) *
                              static_cast<unsigned __int128>(n) *
                              static_cast<unsigned __int128>(Q + 1);
  if (2 * m >= kMaxModulus / 2) {
    throw FieldError("instance too large: n=" + std::to_string(n) +
                     ", Q=" + std::to_string(Q) +
                     " exceeds the 62-bit field");
  }
  return static_cast<std::int64_t>(m);
}

PrimeModulus choose_prime(int n, std::int64_t Q,
                          std::optional<std::uint64_t> override_p) {
  const auto bound = static_cast<std::uint64_t>(2 * magnitude_bound(n, Q));
  if (!override_p) return PrimeModulus::smallest_above(bound);
  PrimeModulus p(*override_p);
  if (p.p() <= bound) {
    throw FieldError("prime " + std::to_string(p.p()) +
                     " must exceed 2M = " + std::to_string(bound));
  }
  return p;
}

}  // namespace ppcc
