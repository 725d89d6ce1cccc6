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

#include "padiff/poly.h"

#include <algorithm>

#include "padiff/errors.h"

namespace padiff {

Poly::Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

Poly Poly::FromElements(ContextPtr ctx, const std::vector<PadicElement>& c) {
  Poly r(ctx);
  r.digits_.reserve(c.size() * ctx->degree());
  for (const auto& e : c) {
    CheckSameRing(*ctx, *e.context());
    r.digits_.insert(r.digits_.end(), e.coeffs().begin(), e.coeffs().end());
  }
  r.Trim();
  return r;
}

Poly Poly::FromInts(ContextPtr ctx, const std::vector<int64_t>& c) {
  Poly r(ctx);
  const size_t d = ctx->degree();
  r.digits_.assign(c.size() * d, 0);
  for (size_t k = 0; k < c.size(); ++k) r.digits_[k * d] = ctx->FromInt(c[k]);
  r.Trim();
  return r;
}

Poly Poly::FromDigits(ContextPtr ctx, std::vector<uint64_t> digits) {
  if (digits.size() % ctx->degree() != 0) {
    throw InvalidArgumentError("digit vector length is not a multiple of d");
  }
  for (auto& x : digits) x %= ctx->pm();
  Poly r(std::move(ctx));
  r.digits_ = std::move(digits);
  r.Trim();
  return r;
}

Poly Poly::Constant(const PadicElement& c) {
  return FromElements(c.context(), {c});
}

Poly Poly::Monomial(ContextPtr ctx, size_t k) {
  Poly r(ctx);
  r.digits_.assign((k + 1) * ctx->degree(), 0);
  r.digits_[k * ctx->degree()] = 1 % ctx->pm();
  return r;
}

Poly Poly::FromSeries(const Series& s) {
  return FromDigits(s.context(), s.digits());
}

void Poly::Trim() {
  const size_t dd = d();
  while (!digits_.empty() &&
         std::all_of(digits_.end() - dd, digits_.end(),
                     [](uint64_t x) { return x == 0; })) {
    digits_.resize(digits_.size() - dd);
  }
}

void Poly::CheckSame(const Poly& o) const {
  if (!ctx_ || !o.ctx_) throw InvalidArgumentError("uninitialised polynomial");
  CheckSameRing(*ctx_, *o.ctx_);
}

PadicElement Poly::operator[](size_t k) const {
  if (k >= size()) return PadicElement(ctx_);
  return PadicElement::FromDigits(ctx_, at(k));
}

PadicElement Poly::Leading() const {
  if (IsZero()) return PadicElement(ctx_);
  return (*this)[size() - 1];
}

Poly Poly::operator+(const Poly& o) const {
  CheckSame(o);
  Poly r(ctx_);
  r.digits_.assign(std::max(digits_.size(), o.digits_.size()), 0);
  const uint64_t q = ctx_->pm();
  for (size_t i = 0; i < r.digits_.size(); ++i) {
    uint64_t a = i < digits_.size() ? digits_[i] : 0;
    uint64_t b = i < o.digits_.size() ? o.digits_[i] : 0;
    r.digits_[i] = AddMod(a, b, q);
  }
  r.Trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  CheckSame(o);
  Poly r(ctx_);
  r.digits_.assign(std::max(digits_.size(), o.digits_.size()), 0);
  const uint64_t q = ctx_->pm();
  for (size_t i = 0; i < r.digits_.size(); ++i) {
    uint64_t a = i < digits_.size() ? digits_[i] : 0;
    uint64_t b = i < o.digits_.size() ? o.digits_[i] : 0;
    r.digits_[i] = SubMod(a, b, q);
  }
  r.Trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(ctx_);
  r.digits_ = digits_;
  const uint64_t q = ctx_->pm();
  for (auto& x : r.digits_) x = x == 0 ? 0 : q - x;
  return r;
}

Poly Poly::operator*(const Poly& o) const { return Mul(o, MulAlgorithm::kAuto); }

Poly Poly::Mul(const Poly& o, MulAlgorithm alg) const {
  CheckSame(o);
  Poly r(ctx_);
  if (IsZero() || o.IsZero()) return r;
  r.digits_ = ctx_->PolyMul(digits_, o.digits_, alg);
  r.Trim();
  return r;
}

bool Poly::operator==(const Poly& o) const {
  CheckSame(o);
  return digits_ == o.digits_;
}

Poly Poly::Scale(const PadicElement& c) const {
  CheckSameRing(*ctx_, *c.context());
  Poly r(ctx_);
  r.digits_.assign(digits_.size(), 0);
  for (size_t k = 0; k < size(); ++k)
    ctx_->ElemMul(at(k), c.data(), r.digits_.data() + k * d());
  r.Trim();
  return r;
}

std::pair<Poly, Poly> Poly::DivRem(const Poly& b) const {
  CheckSame(b);
  if (b.IsZero()) throw InvalidArgumentError("polynomial division by zero");
  const size_t dd = d();
  std::vector<uint64_t> inv(dd);
  if (!ctx_->ElemInverse(b.at(b.size() - 1), inv.data())) {
    throw NonUnitInversionError("divisor has a non-unit leading coefficient");
  }
  Poly rem = *this;
  Poly quo(ctx_);
  if (size() < b.size()) return {quo, rem};
  const size_t nq = size() - b.size() + 1;
  quo.digits_.assign(nq * dd, 0);
  std::vector<uint64_t> c(dd), t(dd);
  for (size_t k = nq; k-- > 0;) {
    uint64_t* top = rem.digits_.data() + (k + b.size() - 1) * dd;
    ctx_->ElemMul(top, inv.data(), c.data());
    std::copy(c.begin(), c.end(), quo.digits_.data() + k * dd);
    if (ctx_->ElemIsZero(c.data())) continue;
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t* dst = rem.digits_.data() + (k + i) * dd;
      ctx_->ElemMul(c.data(), b.at(i), t.data());
      ctx_->ElemSub(dst, t.data(), dst);
    }
  }
  rem.digits_.resize((b.size() - 1) * dd);
  rem.Trim();
  quo.Trim();
  return {quo, rem};
}

Poly Poly::ExactDiv(const Poly& b) const {
  auto [q, r] = DivRem(b);
  if (!r.IsZero()) throw InternalError("inexact polynomial division");
  return q;
}

Poly Poly::Monic() const {
  if (IsZero()) return *this;
  PadicElement lc = Leading();
  if (!lc.IsUnit()) {
    throw NonUnitInversionError("cannot make a polynomial with non-unit "
                                "leading coefficient monic");
  }
  return Scale(lc.Inverse());
}

PadicElement Poly::Evaluate(const PadicElement& x) const {
  CheckSameRing(*ctx_, *x.context());
  PadicElement r(ctx_);
  std::vector<uint64_t> t(d());
  for (size_t k = size(); k-- > 0;) {
    ctx_->ElemMul(r.data(), x.data(), t.data());
    ctx_->ElemAdd(t.data(), at(k), t.data());
    r = PadicElement::FromDigits(ctx_, t.data());
  }
  return r;
}

Poly Poly::Derivative() const {
  Poly r(ctx_);
  if (size() <= 1) return r;
  r.digits_.assign((size() - 1) * d(), 0);
  for (size_t k = 1; k < size(); ++k)
    ctx_->ElemScale(at(k), k % ctx_->pm(), r.digits_.data() + (k - 1) * d());
  r.Trim();
  return r;
}

Poly Poly::Compose(const Poly& g) const {
  CheckSame(g);
  Poly r(ctx_);
  for (size_t k = size(); k-- > 0;) {
    r = r * g;
    r = r + Constant((*this)[k]);
  }
  return r;
}

Poly Poly::TaylorShift(const PadicElement& c) const {
  return Compose(FromElements(ctx_, {c, PadicElement(ctx_, 1)}));
}

Series Poly::EvaluateSeries(const Series& x) const {
  CheckSameRing(*ctx_, *x.context());
  Series r(ctx_, x.order());
  if (x.order() == 0) return r;
  for (size_t k = size(); k-- > 0;) {
    r = r * x;
    ctx_->ElemAdd(r.at(0), at(k), r.at(0));
  }
  return r;
}

Series Poly::ToSeries(size_t order) const {
  std::vector<uint64_t> dg = digits_;
  dg.resize(order * d(), 0);
  return Series::FromDigits(ctx_, std::move(dg));
}

Poly Poly::Low(size_t k) const {
  Poly r(ctx_);
  r.digits_.assign(digits_.begin(),
                   digits_.begin() + std::min(digits_.size(), k * d()));
  r.Trim();
  return r;
}

Poly Poly::ShiftDown(size_t k) const {
  Poly r(ctx_);
  if (k * d() < digits_.size()) r.digits_.assign(digits_.begin() + k * d(), digits_.end());
  return r;
}

Poly Poly::ShiftUp(size_t k) const {
  Poly r(ctx_);
  if (IsZero()) return r;
  r.digits_.assign(k * d(), 0);
  r.digits_.insert(r.digits_.end(), digits_.begin(), digits_.end());
  return r;
}

Poly Poly::ReduceLift(int target_precision) const {
  ContextPtr t = ctx_->WithPrecision(target_precision);
  std::vector<uint64_t> dg = digits_;
  return FromDigits(t, std::move(dg));
}

Poly Poly::Embed(const ContextPtr& ext) const {
  if (ctx_->degree() != 1 || ext->p() != ctx_->p() ||
      ext->precision() != ctx_->precision()) {
    throw ContextMismatchError("cannot embed " + ctx_->Describe() + " into " +
                               ext->Describe());
  }
  Poly r(ext);
  const size_t de = ext->degree();
  r.digits_.assign(size() * de, 0);
  for (size_t k = 0; k < size(); ++k) r.digits_[k * de] = digits_[k];
  return r;
}

std::string Poly::ToString() const {
  std::string s = "[";
  for (size_t k = 0; k < size(); ++k) {
    if (k) s += ", ";
    s += (*this)[k].ToString();
  }
  return s + "]";
}

Poly GcdField(Poly a, Poly b) {
  if (!a.context()->is_field()) {
    throw InvalidArgumentError("GcdField needs a residue-field context");
  }
  while (!b.IsZero()) {
    Poly r = a.Mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.Monic();
}

Xgcd ExtendedGcd(const Poly& a, const Poly& b) {
  const ContextPtr& ctx = a.context();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::Constant(PadicElement(ctx, 1)), s1(ctx);
  Poly t0(ctx), t1 = Poly::Constant(PadicElement(ctx, 1));
  while (!r1.IsZero()) {
    auto [q, r] = r0.DivRem(r1);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.IsZero()) return {r0, s0, t0};
  PadicElement lc = r0.Leading();
  if (!lc.IsUnit()) {
    throw NonUnitInversionError("gcd has a non-unit leading coefficient");
  }
  PadicElement inv = lc.Inverse();
  return {r0.Scale(inv), s0.Scale(inv), t0.Scale(inv)};
}

Poly InverseMod(const Poly& a, const Poly& m) {
  const ContextPtr& ctx = a.context();
  CheckSameRing(*ctx, *m.context());
  if (m.degree() < 1 || !(m.Leading() == PadicElement(ctx, 1))) {
    throw InvalidArgumentError("InverseMod needs a monic modulus of degree >= 1");
  }
  ContextPtr res = ctx->Residue();
  Poly ar = a.ReduceLift(1), mr = m.ReduceLift(1);
  Xgcd x = ExtendedGcd(ar.Mod(mr), mr);
  if (x.g.degree() != 0) {
    throw NonUnitInversionError("polynomial is not invertible modulo (m, p)");
  }
  Poly s = x.s.Mod(mr).ReduceLift(ctx->precision());
  const Poly two = Poly::Constant(PadicElement(ctx, 2));
  const Poly am = a.Mod(m);
  for (int digits = 1; digits < ctx->precision(); digits *= 2) {
    s = (s * (two - (am * s).Mod(m))).Mod(m);
  }
  return s;
}

}  // namespace padiff
