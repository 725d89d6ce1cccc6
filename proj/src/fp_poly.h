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

// Small dense polynomial helpers over a prime field F_p on raw coefficient
// vectors (low degree first). Used where the full Poly type would create a
// dependency cycle, e.g. while validating a context's modulus.

#include <cstdint>
#include <vector>

namespace padiff::fp {

using Vec = std::vector<uint64_t>;

void Trim(Vec& a);
Vec Mul(const Vec& a, const Vec& b, uint64_t p);
// Remainder of a by b (b nonzero).
Vec Rem(Vec a, const Vec& b, uint64_t p);
Vec MulMod(const Vec& a, const Vec& b, const Vec& m, uint64_t p);
Vec PowMod(Vec base, uint64_t e, const Vec& m, uint64_t p);
Vec Gcd(Vec a, Vec b, uint64_t p);
// Inverse of a modulo m; empty when gcd(a, m) != 1.
Vec InverseMod(const Vec& a, const Vec& m, uint64_t p);
// Rabin's test for a monic polynomial of degree >= 1.
bool IsIrreducible(const Vec& f, uint64_t p);

}  // namespace padiff::fp
