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
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "padiff/padic.h"
#include "padiff/poly.h"

namespace padiff {

// Arithmetic over the residue field F_q (contexts with M = 1) and Hensel
// lifting from F_q to the unramified ring at precision M.

uint64_t FieldSize(const PadicContext& ctx);  // q = p^d
PadicElement Pow(const PadicElement& a, uint64_t e);
PadicElement RandomElement(const ContextPtr& ctx, std::mt19937_64& rng);

// Square root in F_q (q odd) by Tonelli-Shanks; nullopt for non-squares.
std::optional<PadicElement> SqrtFq(const PadicElement& a, std::mt19937_64& rng);

// base^e mod m over F_q, with m monic.
Poly PowMod(const Poly& base, uint64_t e, const Poly& m);
bool IsSquarefree(const Poly& f);
bool IsIrreducible(const Poly& f);

// Distinct-degree factorisation of a monic squarefree polynomial: pairs
// (product of all irreducible factors of degree k, k) for every k present.
std::vector<std::pair<Poly, int>> DistinctDegreeFactorization(const Poly& f);

// Roots in F_q of a nonzero polynomial, sorted by digits. Scans F_q when
// q <= 10^6, otherwise splits gcd(f, x^q - x) by Cantor-Zassenhaus.
std::vector<PadicElement> FindRoots(const Poly& f, std::mt19937_64& rng);

// Lifts a simple root r (in the residue field) of f (over Z/p^M) to the
// unique root of f at precision M congruent to r. Throws RepeatedRootError
// when f'(r) = 0 mod p.
PadicElement HenselLiftRoot(const Poly& f, const PadicElement& r);

}  // namespace padiff
