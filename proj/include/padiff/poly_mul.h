// Copyright 2026 The padiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace padiff {

enum class MulAlgorithm { kAuto, kSchoolbook, kKaratsuba, kNtt };

// Below this many coefficients (in the shorter operand) kAuto uses the
// schoolbook product.
inline constexpr size_t kKaratsubaThreshold = 32;
// At or above this size kAuto switches to the multi-prime NTT.
inline constexpr size_t kNttThreshold = 160;

// Full product of two polynomials with coefficients in [0, q), q < 2^62.
// `terms_per_coeff` scales the bound used to choose the number of NTT
// primes; callers packing several digits per slot pass the slot width.
std::vector<uint64_t> MulZq(std::span<const uint64_t> a,
                            std::span<const uint64_t> b, uint64_t q,
                            MulAlgorithm alg = MulAlgorithm::kAuto,
                            size_t terms_per_coeff = 1);

// Modular helpers shared across the library.
inline uint64_t AddMod(uint64_t a, uint64_t b, uint64_t q) {
  uint64_t s = a + b;
  return s >= q ? s - q : s;
}
inline uint64_t SubMod(uint64_t a, uint64_t b, uint64_t q) {
  return a >= b ? a - b : a + q - b;
}
inline uint64_t MulMod(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}
uint64_t PowMod(uint64_t a, uint64_t e, uint64_t q);

}  // namespace padiff
