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

#include "padiff/hyperelliptic.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "padiff/errors.h"
#include "padiff/finite_field.h"

namespace padiff {
namespace {

bool CoprimeModP(const Poly& a, const Poly& b) {
  Poly ar = a.ReduceLift(1), br = b.ReduceLift(1);
  if (ar.IsZero() || br.IsZero()) return ar.degree() == 0 || br.degree() == 0;
  return GcdField(ar, br).degree() == 0;
}

MumfordDivisor Reduce(const HyperellipticCurve& c, Poly u, Poly v) {
  const int g = c.genus();
  v = v.Mod(u);
  while (u.degree() > g) {
    Poly un = (c.f() - v * v).ExactDiv(u).Monic();
    v = (-v).Mod(un);
    u = std::move(un);
  }
  return {u, v};
}

// Composition for U1, U2 coprime modulo p.
MumfordDivisor ComposeCoprime(const MumfordDivisor& a, const MumfordDivisor& b) {
  Poly inv = InverseMod(a.u.Mod(b.u), b.u);
  Poly k = ((b.v - a.v) * inv).Mod(b.u);
  return {a.u * b.u, a.v + a.u * k};
}

// Composition of D with itself when U and 2V are coprime modulo p.
MumfordDivisor ComposeDouble(const HyperellipticCurve& c, const MumfordDivisor& a) {
  Poly w = (c.f() - a.v * a.v).ExactDiv(a.u);
  Poly inv = InverseMod((a.v + a.v).Mod(a.u), a.u);
  Poly k = (w.Mod(a.u) * inv).Mod(a.u);
  return {a.u * a.u, a.v + a.u * k};
}

// Textbook Cantor composition through extended gcds.
MumfordDivisor ComposeGeneral(const HyperellipticCurve& c, const MumfordDivisor& a,
                              const MumfordDivisor& b) {
  Xgcd x1 = ExtendedGcd(a.u, b.u);  // x1.g = s a.u + t b.u
  Xgcd x2 = ExtendedGcd(x1.g, a.v + b.v);
  const Poly& d = x2.g;
  Poly s1 = x2.s * x1.s, s2 = x2.s * x1.t, s3 = x2.t;
  Poly u = (a.u * b.u).ExactDiv(d * d);
  Poly num = s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + c.f());
  Poly v = num.ExactDiv(d).Mod(u);
  return {u, v};
}

}  // namespace

HyperellipticCurve::HyperellipticCurve(Poly f) : f_(std::move(f)) {
  const ContextPtr& ctx = f_.context();
  if (ctx->p() == 2) throw InvalidArgumentError("characteristic 2 is not supported");
  const int deg = f_.degree();
  if (deg < 3) throw InvalidArgumentError("curve polynomial must have degree >= 3");
  genus_ = (deg - 1) / 2;
  if (!f_.Leading().IsUnit()) {
    throw InvalidArgumentError("leading coefficient of f must be a unit");
  }
  if (!IsSquarefree(f_.ReduceLift(1))) {
    throw InvalidArgumentError("f is not squarefree modulo p (bad reduction)");
  }
}

HyperellipticCurve HyperellipticCurve::ReduceLift(int target_precision) const {
  return HyperellipticCurve(f_.ReduceLift(target_precision));
}

HyperellipticCurve HyperellipticCurve::Embed(const ContextPtr& ext) const {
  return HyperellipticCurve(f_.Embed(ext));
}

MumfordDivisor MumfordDivisor::Identity(const ContextPtr& ctx) {
  return {Poly::Constant(PadicElement(ctx, 1)), Poly(ctx)};
}

MumfordDivisor MumfordDivisor::ReduceLift(int target_precision) const {
  return {u.ReduceLift(target_precision), v.ReduceLift(target_precision)};
}

std::string MumfordDivisor::ToString() const {
  return "(" + u.ToString() + ", " + v.ToString() + ")";
}

bool IsValidDivisor(const HyperellipticCurve& c, const MumfordDivisor& d) {
  if (d.u.IsZero() || !(d.u.Leading() == PadicElement(c.context(), 1))) return false;
  if (d.u.degree() > c.genus() || d.v.degree() >= d.u.degree()) return false;
  return (d.v * d.v - c.f()).Mod(d.u).IsZero();
}

MumfordDivisor Negate(const MumfordDivisor& d) { return {d.u, (-d.v).Mod(d.u)}; }

namespace {

MumfordDivisor CantorAddCore(const HyperellipticCurve& c, const MumfordDivisor& a,
                             const MumfordDivisor& b) {
  if (a.IsIdentity()) return b;
  if (b.IsIdentity()) return a;
  MumfordDivisor comp;
  if (c.context()->is_field()) {
    comp = ComposeGeneral(c, a, b);
  } else if (CoprimeModP(a.u, b.u)) {
    comp = ComposeCoprime(a, b);
  } else if (a == b && CoprimeModP(a.u, a.v + a.v)) {
    comp = ComposeDouble(c, a);
  } else {
    comp = ComposeGeneral(c, a, b);
  }
  return Reduce(c, comp.u, comp.v);
}

// Working precision for ring arithmetic: about twice M, capped so that
// p^M' < 2^62. A leading coefficient that vanishes modulo p^M can be a
// nonzero non-unit; Cantor would then silently take the wrong branch. At M'
// such a coefficient is visible and Monic() raises NonUnitInversionError.
int GuardPrecision(const PadicContext& ctx) {
  const int m = ctx.precision();
  int guard = m;
  unsigned __int128 pm = ctx.pm();
  while (guard < 2 * m && pm * ctx.p() < (static_cast<unsigned __int128>(1) << 62)) {
    pm *= ctx.p();
    ++guard;
  }
  return guard;
}

// Some divisor over the higher-precision curve reducing to d. V is refined
// by Newton steps V <- V - (V^2 - f) / (2V) mod U, so 2V must be invertible
// modulo (U, p).
MumfordDivisor LiftDivisor(const HyperellipticCurve& high, const MumfordDivisor& d,
                           int from) {
  const int target = high.context()->precision();
  MumfordDivisor out = d.ReduceLift(target);
  if (out.IsIdentity()) return out;
  if (!CoprimeModP(out.u, out.v + out.v)) {
    throw NonUnitInversionError("cannot lift a divisor with Weierstrass support mod p");
  }
  for (int digits = from; digits < target; digits *= 2) {
    Poly err = (out.v * out.v - high.f()).Mod(out.u);
    Poly inv = InverseMod((out.v + out.v).Mod(out.u), out.u);
    out.v = (out.v - err * inv).Mod(out.u);
  }
  return out;
}

}  // namespace

MumfordDivisor CantorAdd(const HyperellipticCurve& c, const MumfordDivisor& a,
                         const MumfordDivisor& b) {
  if (!c.odd_degree()) {
    throw InvalidArgumentError("Jacobian arithmetic needs an odd-degree model");
  }
  const int m = c.context()->precision();
  const int guard = c.context()->is_field() ? m : GuardPrecision(*c.context());
  if (guard == m) return CantorAddCore(c, a, b);
  HyperellipticCurve high = c.ReduceLift(guard);
  return CantorAddCore(high, LiftDivisor(high, a, m), LiftDivisor(high, b, m))
      .ReduceLift(m);
}

MumfordDivisor ScalarMul(const HyperellipticCurve& c, uint64_t l,
                         const MumfordDivisor& d) {
  if (!c.odd_degree()) {
    throw InvalidArgumentError("Jacobian arithmetic needs an odd-degree model");
  }
  const int m = c.context()->precision();
  const int guard = c.context()->is_field() ? m : GuardPrecision(*c.context());
  HyperellipticCurve high = guard == m ? c : c.ReduceLift(guard);
  MumfordDivisor base = guard == m ? d : LiftDivisor(high, d, m);
  MumfordDivisor r = MumfordDivisor::Identity(high.context());
  for (int bit = 63; bit >= 0; --bit) {
    r = CantorAddCore(high, r, r);
    if ((l >> bit) & 1) r = CantorAddCore(high, r, base);
  }
  return guard == m ? r : r.ReduceLift(m);
}

MumfordDivisor DivisorFromPoint(const HyperellipticCurve& c, const CurvePoint& q) {
  if (q.infinity) throw InvalidArgumentError("point at infinity has no affine divisor");
  const ContextPtr& ctx = c.context();
  return {Poly::FromElements(ctx, {-q.x, PadicElement(ctx, 1)}), Poly::Constant(q.y)};
}

CurvePoint HenselLiftPoint(const HyperellipticCurve& c, const PadicElement& x0,
                           const PadicElement& y0_residue) {
  const ContextPtr& ctx = c.context();
  CheckSameRing(*ctx, *x0.context());
  if (!y0_residue.context()->SameTower(*ctx)) {
    throw ContextMismatchError("residue ordinate lives in another tower");
  }
  PadicElement y = PadicElement::FromDigits(ctx, y0_residue.ReduceLift(1).coeffs());
  if (y.IsZero()) throw WeierstrassError("y = 0 mod p has no unique lift");
  const PadicElement fx = c.f().Evaluate(x0);
  if (!(y * y - fx).ReduceLift(1).IsZero()) {
    throw InvalidArgumentError("residue point is not on the curve");
  }
  for (int digits = 1; digits < ctx->precision(); digits *= 2) {
    y = y - (y * y - fx).Div(y + y);
  }
  return {x0, y, false};
}

std::vector<CurvePoint> DivisorPoints(const HyperellipticCurve& c,
                                      const MumfordDivisor& d, uint64_t seed) {
  const int g = c.genus();
  if (d.u.degree() != g) {
    throw DegreeError("divisor has degree " + std::to_string(d.u.degree()) +
                      ", need " + std::to_string(g));
  }
  const ContextPtr& ctx = c.context();
  Poly ur = d.u.ReduceLift(1);
  if (!IsSquarefree(ur)) throw RepeatedRootError("U is not squarefree modulo p");
  int l = 1;
  for (const auto& [fac, k] : DistinctDegreeFactorization(ur)) l = std::lcm(l, k);
  ContextPtr ext = ctx;
  Poly u = d.u, v = d.v;
  if (l > 1) {
    if (ctx->degree() != 1) {
      throw InvalidArgumentError("divisor support needs a tower over a non-prime field");
    }
    ext = PadicContext::Create(ctx->p(), ctx->precision(), l, {}, seed);
    u = u.Embed(ext);
    v = v.Embed(ext);
  }
  std::mt19937_64 rng(seed);
  std::vector<PadicElement> roots = FindRoots(u.ReduceLift(1), rng);
  if (static_cast<int>(roots.size()) != g) {
    throw InternalError("splitting field does not split U");
  }
  std::vector<CurvePoint> pts;
  for (const auto& r : roots) {
    PadicElement x = HenselLiftRoot(u, r);
    PadicElement y = v.Evaluate(x);
    if (!y.IsUnit()) throw WeierstrassError("support point has y = 0 mod p");
    pts.push_back({x, y, false});
  }
  return pts;
}

}  // namespace padiff
