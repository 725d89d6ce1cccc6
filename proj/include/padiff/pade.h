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

#include "padiff/poly.h"
#include "padiff/series.h"

namespace padiff {

struct PadeResult {
  Poly numerator;
  Poly denominator;  // normalised so that denominator(0) = 1
};

// Finds N/D = s mod t^order(s) with deg N <= dN, deg D <= dD, D(0) != 0 and
// gcd(N, D) = 1 over the residue field of s's context. `fast` selects the
// half-gcd path; both paths stop at the first remainder of degree <= dN and
// return identical results. Throws ReconstructionError when no fraction
// satisfies the bounds.
PadeResult PadeReconstruct(const Series& s, int dN, int dD, bool fast = true);

// 2x2 polynomial matrix (row-major) acting on column pairs (a, b).
struct PolyMatrix2 {
  Poly m00, m01, m10, m11;
};

// Transition matrix R with R (a, b) = (r_j, r_{j+1}), the consecutive pair of
// the Euclidean remainder sequence of (a, b) with deg r_j > d >= deg r_{j+1}.
// Requires deg a > deg b and deg a > d.
PolyMatrix2 EuclidReduceTo(const Poly& a, const Poly& b, int d, bool fast);

}  // namespace padiff
