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

#include "padiff/finite_field.h"

#include <algorithm>

#include "padiff/errors.h"

namespace padiff {
namespace {

void RequireField(const PadicContext& ctx) {
  if (!ctx.is_field()) throw InvalidArgumentError("operation needs a residue field");
}

Poly XPoly(const ContextPtr& ctx) { return Poly::Monomial(ctx, 1); }

// x^(q^k) mod m by k successive q-th powers.
Poly FrobeniusPower(int k, const Poly& m, uint64_t q) {
  Poly r = XPoly(m.context()).Mod(m);
  for (int i = 0; i < k; ++i) r = PowMod(r, q, m);
  return r;
}

// Splits a product of distinct linear factors into its roots.
void SplitLinear(const Poly& f, uint64_t q, std::mt19937_64& rng,
                 std::vector<PadicElement>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    Poly m = f.Monic();
    out.push_back(-m[0]);
    return;
  }
  const ContextPtr& ctx = f.context();
  while (true) {
    // gcd(f, (x + a)^((q-1)/2) - 1) separates residues from non-residues.
    Poly h = Poly::FromElements(ctx, {RandomElement(ctx, rng), PadicElement(ctx, 1)});
    Poly g = PowMod(h, (q - 1) / 2, f) - Poly::Constant(PadicElement(ctx, 1));
    Poly s = GcdField(f, g);
    if (s.degree() > 0 && s.degree() < f.degree()) {
      SplitLinear(s, q, rng, out);
      SplitLinear(f.ExactDiv(s), q, rng, out);
      return;
    }
  }
}

bool DigitsLess(const PadicElement& a, const PadicElement& b) {
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(),
                                      b.coeffs().rbegin(), b.coeffs().rend());
}

}  // namespace

uint64_t FieldSize(const PadicContext& ctx) {
  uint64_t q = 1;
  for (int i = 0; i < ctx.degree(); ++i) q *= ctx.p();
  return q;
}

PadicElement Pow(const PadicElement& a, uint64_t e) {
  PadicElement r(a.context(), 1), b = a;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

PadicElement RandomElement(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> dist(0, ctx->pm() - 1);
  std::vector<uint64_t> c(ctx->degree());
  for (auto& x : c) x = dist(rng);
  return PadicElement::FromDigits(ctx, std::move(c));
}

std::optional<PadicElement> SqrtFq(const PadicElement& a, std::mt19937_64& rng) {
  const ContextPtr& ctx = a.context();
  RequireField(*ctx);
  if (ctx->p() == 2) throw InvalidArgumentError("SqrtFq needs odd characteristic");
  if (a.IsZero()) return a;
  const uint64_t q = FieldSize(*ctx);
  const PadicElement one(ctx, 1);
  if (!(Pow(a, (q - 1) / 2) == one)) return std::nullopt;
  uint64_t t = q - 1;
  int s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  PadicElement z(ctx);
  do {
    z = RandomElement(ctx, rng);
  } while (z.IsZero() || Pow(z, (q - 1) / 2) == one);
  PadicElement c = Pow(z, t);
  PadicElement x = Pow(a, (t + 1) / 2);
  PadicElement b = Pow(a, t);
  int m = s;
  while (!(b == one)) {
    int i = 0;
    PadicElement b2 = b;
    while (!(b2 == one)) {
      b2 *= b2;
      ++i;
    }
    PadicElement w = c;
    for (int j = 0; j < m - i - 1; ++j) w *= w;
    x *= w;
    c = w * w;
    b *= c;
    m = i;
  }
  return x;
}

Poly PowMod(const Poly& base, uint64_t e, const Poly& m) {
  Poly r = Poly::Constant(PadicElement(m.context(), 1)).Mod(m);
  Poly b = base.Mod(m);
  while (e > 0) {
    if (e & 1) r = (r * b).Mod(m);
    e >>= 1;
    if (e) b = (b * b).Mod(m);
  }
  return r;
}

bool IsSquarefree(const Poly& f) {
  RequireField(*f.context());
  if (f.degree() <= 0) return true;
  Poly df = f.Derivative();
  if (df.IsZero()) return false;
  return GcdField(f, df).degree() == 0;
}

bool IsIrreducible(const Poly& f0) {
  RequireField(*f0.context());
  const int d = f0.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  Poly f = f0.Monic();
  const uint64_t q = FieldSize(*f.context());
  const Poly x = XPoly(f.context());
  if (!(FrobeniusPower(d, f, q) - x).Mod(f).IsZero()) return false;
  int rem = d;
  for (int r = 2; r <= rem; ++r) {
    if (rem % r) continue;
    while (rem % r == 0) rem /= r;
    Poly g = GcdField(f, FrobeniusPower(d / r, f, q) - x);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::vector<std::pair<Poly, int>> DistinctDegreeFactorization(const Poly& f0) {
  RequireField(*f0.context());
  std::vector<std::pair<Poly, int>> out;
  Poly f = f0.Monic();
  const uint64_t q = FieldSize(*f.context());
  const Poly x = XPoly(f.context());
  Poly h = x.Mod(f);
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    h = PowMod(h, q, f);
    Poly g = GcdField(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, k);
      f = f.ExactDiv(g);
      h = h.Mod(f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<PadicElement> FindRoots(const Poly& f, std::mt19937_64& rng) {
  const ContextPtr& ctx = f.context();
  RequireField(*ctx);
  if (f.IsZero()) throw InvalidArgumentError("roots of the zero polynomial");
  std::vector<PadicElement> roots;
  const uint64_t q = FieldSize(*ctx);
  if (q <= 1000000) {
    const int d = ctx->degree();
    std::vector<uint64_t> digits(d, 0);
    for (uint64_t idx = 0; idx < q; ++idx) {
      uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        digits[i] = v % ctx->p();
        v /= ctx->p();
      }
      PadicElement e = PadicElement::FromDigits(ctx, digits);
      if (f.Evaluate(e).IsZero()) roots.push_back(e);
    }
  } else {
    const Poly x = XPoly(ctx);
    Poly lin = GcdField(f, PowMod(x, q, f.Monic()) - x);
    if (q % 2 == 0) throw InvalidArgumentError("characteristic 2 is not supported");
    SplitLinear(lin, q, rng, roots);
  }
  std::sort(roots.begin(), roots.end(), DigitsLess);
  return roots;
}

PadicElement HenselLiftRoot(const Poly& f, const PadicElement& r) {
  const ContextPtr& ctx = f.context();
  if (!r.context()->SameTower(*ctx)) {
    throw ContextMismatchError("root and polynomial live in different towers");
  }
  PadicElement x = PadicElement::FromDigits(ctx, r.coeffs());
  const Poly df = f.Derivative();
  PadicElement dfx = df.Evaluate(x);
  if (!dfx.IsUnit()) throw RepeatedRootError("root is not simple modulo p");
  for (int digits = 1; digits < ctx->precision(); digits *= 2) {
    x = x - f.Evaluate(x).Div(df.Evaluate(x));
  }
  return x;
}

}  // namespace padiff
