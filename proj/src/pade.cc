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

#include "padiff/pade.h"

#include <string>
#include <utility>

#include "padiff/errors.h"

namespace padiff {
namespace {

PolyMatrix2 Identity(const ContextPtr& ctx) {
  Poly one = Poly::Constant(PadicElement(ctx, 1));
  return {one, Poly(ctx), Poly(ctx), one};
}

PolyMatrix2 Multiply(const PolyMatrix2& x, const PolyMatrix2& y) {
  return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
          x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

void Apply(const PolyMatrix2& r, Poly& a, Poly& b) {
  Poly na = r.m00 * a + r.m01 * b;
  Poly nb = r.m10 * a + r.m11 * b;
  a = std::move(na);
  b = std::move(nb);
}

// One Euclidean step (a, b) -> (b, a mod b), folded into r.
void Step(Poly& a, Poly& b, PolyMatrix2& r) {
  auto [q, rem] = a.DivRem(b);
  PolyMatrix2 s = {Poly(a.context()), Poly::Constant(PadicElement(a.context(), 1)),
                   Poly::Constant(PadicElement(a.context(), 1)), -q};
  r = Multiply(s, r);
  a = std::move(b);
  b = std::move(rem);
}

// Returns R with R (a, b) = (r_j, r_{j+1}) and
// deg r_j >= ceil(deg a / 2) > deg r_{j+1}. Requires deg a > deg b.
PolyMatrix2 HalfGcd(Poly a, Poly b) {
  const ContextPtr& ctx = a.context();
  const int m = (a.degree() + 1) / 2;
  if (b.degree() < m) return Identity(ctx);
  PolyMatrix2 r = HalfGcd(a.ShiftDown(m), b.ShiftDown(m));
  Apply(r, a, b);
  if (b.degree() < m) return r;
  Step(a, b, r);
  if (b.degree() < m) return r;
  const int k = 2 * m - a.degree();
  PolyMatrix2 r2 = HalfGcd(a.ShiftDown(k), b.ShiftDown(k));
  return Multiply(r2, r);
}

}  // namespace

PolyMatrix2 EuclidReduceTo(const Poly& a0, const Poly& b0, int d, bool fast) {
  Poly a = a0, b = b0;
  PolyMatrix2 r = Identity(a.context());
  if (a.degree() <= d) throw InternalError("reduction threshold above deg a");
  while (b.degree() > d) {
    if (!fast) {
      Step(a, b, r);
      continue;
    }
    const int k = 2 * d + 2 - a.degree();
    if (k < 0 && b.degree() < (a.degree() + 1) / 2) {
      // Large degree gap: a half-gcd call would make no progress.
      Step(a, b, r);
      continue;
    }
    PolyMatrix2 h = k >= 0 ? HalfGcd(a.ShiftDown(k), b.ShiftDown(k))
                           : HalfGcd(a, b);
    Apply(h, a, b);
    r = Multiply(h, r);
    if (a.degree() <= d) throw InternalError("half-gcd overshot its target");
    // A shifted call can stop one step early; finish with plain steps.
    if (k >= 0) {
      while (b.degree() > d) Step(a, b, r);
    }
  }
  return r;
}

PadeResult PadeReconstruct(const Series& s, int dN, int dD, bool fast) {
  const ContextPtr& ctx = s.context();
  if (!ctx->is_field()) {
    throw InvalidArgumentError("Pade reconstruction runs over a residue field");
  }
  const int n = static_cast<int>(s.order());
  if (dN < 0 || dD < 0 || n < dN + dD + 1) {
    throw InvalidArgumentError("Pade needs order >= dN + dD + 1, got order " +
                               std::to_string(n) + " for bounds " +
                               std::to_string(dN) + "/" + std::to_string(dD));
  }
  Poly a = Poly::Monomial(ctx, n);
  Poly b = Poly::FromSeries(s);
  Poly num = b, den = Poly::Constant(PadicElement(ctx, 1));
  if (b.degree() > dN) {
    PolyMatrix2 r = EuclidReduceTo(a, b, dN, fast);
    num = r.m10 * a + r.m11 * b;
    den = r.m11;
  }
  if (den.degree() > dD) {
    throw ReconstructionError("denominator degree " +
                              std::to_string(den.degree()) + " exceeds bound " +
                              std::to_string(dD));
  }
  PadicElement d0 = den[0];
  if (d0.IsZero()) throw ReconstructionError("denominator vanishes at t = 0");
  if (!num.IsZero() && GcdField(num, den).degree() > 0) {
    throw ReconstructionError("numerator and denominator share a factor");
  }
  PadicElement inv = d0.Inverse();
  return {num.Scale(inv), den.Scale(inv)};
}

}  // namespace padiff
