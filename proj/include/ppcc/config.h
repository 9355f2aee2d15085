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

#ifndef PPCC_CONFIG_H_
#define PPCC_CONFIG_H_

#include <cstdint>
#include <optional>

#include "ppcc/field.h"

namespace ppcc {

enum class SearchMode { kExhaustive, kPolynomial };
enum class Visibility { kRestricted, kFull };

// Deliberate defects used to check that oracle-check notices divergence.
enum class Fault {
  kNone,
  kAvailabilityOffByOne,  // availability update reads SelectedInterval(k-1)
};

struct ProtocolConfig {
  SearchMode mode = SearchMode::kExhaustive;
  Visibility visibility = Visibility::kRestricted;
  bool pad_iterations = false;
  bool strict_no_ell = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> prime;
  // Polynomial mode: bisect over the sorted candidate averages instead of
  // [0, Q n! + 1].
  bool search_candidates = false;
  // Polynomial mode: run floor(log2 N) bisection steps before the first
  // termination check.
  bool defer_search_check = false;
  Fault fault = Fault::kNone;
  bool record_messages = true;
};

std::int64_t factorial(int n);

// M = n! * Q * n * (Q + 1). Throws FieldError when 2M does not fit the
// supported modulus range.
std::int64_t magnitude_bound(int n, std::int64_t Q);

// Smallest prime above 2M, or the override after checking it is a prime
// above 2M.
PrimeModulus choose_prime(int n, std::int64_t Q,
                          std::optional<std::uint64_t> override_p);

}  // namespace ppcc

#endif  // PPCC_CONFIG_H_
