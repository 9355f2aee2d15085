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

#include "ppcc/dealer.h"

namespace ppcc {

TrustedDealer::TrustedDealer(ShareParams params, PrimeModulus modulus,
                             std::uint64_t seed)
    : params_(params), modulus_(modulus), rng_(seed) {}

MaskTuple TrustedDealer::next_mask() {
  MaskTuple out;
  out.id = next_id_++;
  const std::uint64_t r = uniform_residue(rng_, modulus_);
  out.value = share(r, params_, modulus_, rng_);
  out.bits.reserve(modulus_.bits());
  for (int j = 0; j < modulus_.bits(); ++j) {
    out.bits.push_back(share((r >> j) & 1, params_, modulus_, rng_));
  }
  ++stats_.masks;
  return out;
}

RandomBit TrustedDealer::next_random_bit() {
  RandomBit out;
  out.id = next_id_++;
  out.bit = share(rng_() & 1, params_, modulus_, rng_);
  ++stats_.bits;
  return out;
}

}  // namespace ppcc
