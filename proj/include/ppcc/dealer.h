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

// Correlated randomness for the bit-level gates. The engine only sees the
// Dealer interface, so a dealer-free preprocessing protocol can replace
// TrustedDealer without touching the gates.

#ifndef PPCC_DEALER_H_
#define PPCC_DEALER_H_

#include <cstdint>
#include <vector>

#include "ppcc/field.h"
#include "ppcc/shamir.h"

namespace ppcc {

// A sharing of a uniform r in [0, p) together with sharings of its bits,
// least significant first (bits.size() == s).
struct MaskTuple {
  std::uint64_t id = 0;
  Sharing value;
  std::vector<Sharing> bits;
};

struct RandomBit {
  std::uint64_t id = 0;
  Sharing bit;
};

struct DealerStats {
  std::uint64_t masks = 0;
  std::uint64_t bits = 0;
};

class Dealer {
 public:
  virtual ~Dealer() = default;
  // Tape ids are strictly increasing across both entry kinds.
  virtual MaskTuple next_mask() = 0;
  virtual RandomBit next_random_bit() = 0;
  virtual DealerStats stats() const = 0;
};

class TrustedDealer final : public Dealer {
 public:
  TrustedDealer(ShareParams params, PrimeModulus modulus, std::uint64_t seed);

  MaskTuple next_mask() override;
  RandomBit next_random_bit() override;
  DealerStats stats() const override { return stats_; }

 private:
  ShareParams params_;
  PrimeModulus modulus_;
  Rng rng_;
  std::uint64_t next_id_ = 1;
  DealerStats stats_;
};

}  // namespace ppcc

#endif  // PPCC_DEALER_H_
