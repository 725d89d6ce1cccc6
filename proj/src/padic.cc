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

#include "padiff/padic.h"

#include <random>
#include <sstream>
#include <utility>

#include "fp_poly.h"
#include "padiff/errors.h"

namespace padiff {

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PadicContext::PadicContext(uint64_t p, int precision, int degree,
                           std::vector<uint64_t> modulus)
    : p_(p), precision_(precision), degree_(degree), modulus_(std::move(modulus)) {
  pm_ = 1;
  for (int i = 0; i < precision; ++i) pm_ *= p;
}

ContextPtr PadicContext::Create(uint64_t p, int precision, int degree,
                                std::vector<uint64_t> modulus, uint64_t seed) {
  if (!IsPrime(p)) {
    throw InvalidArgumentError("p = " + std::to_string(p) + " is not prime");
  }
  if (precision < 1 || degree < 1) {
    throw InvalidArgumentError("precision and degree must be positive");
  }
  unsigned __int128 pm = 1;
  for (int i = 0; i < precision; ++i) {
    pm *= p;
    if (pm >= (static_cast<unsigned __int128>(1) << 62)) {
      throw InvalidArgumentError("p^M must stay below 2^62");
    }
  }
  const uint64_t q = static_cast<uint64_t>(pm);
  if (degree == 1) {
    if (!modulus.empty() && modulus.size() != 2) {
      throw InvalidArgumentError("degree-1 context takes no modulus");
    }
    return std::make_shared<PadicContext>(p, precision, 1,
                                          std::vector<uint64_t>{});
  }
  if (modulus.empty()) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> dist(0, p - 1);
    fp::Vec f(degree + 1);
    do {
      for (int i = 0; i < degree; ++i) f[i] = dist(rng);
      f[degree] = 1;
    } while (!fp::IsIrreducible(f, p));
    modulus = f;
  } else {
    if (static_cast<int>(modulus.size()) != degree + 1 || modulus.back() % q != 1) {
      throw InvalidArgumentError("modulus must be monic of the context degree");
    }
    fp::Vec red(modulus.size());
    for (size_t i = 0; i < modulus.size(); ++i) {
      modulus[i] %= q;
      red[i] = modulus[i] % p;
    }
    if (!fp::IsIrreducible(red, p)) {
      throw InvalidArgumentError("modulus is reducible modulo p");
    }
  }
  return std::make_shared<PadicContext>(p, precision, degree, std::move(modulus));
}

ContextPtr PadicContext::WithPrecision(int precision) const {
  if (precision < 1) throw InvalidArgumentError("precision must be positive");
  std::vector<uint64_t> mod = modulus_;
  if (precision < precision_) {
    uint64_t q = 1;
    for (int i = 0; i < precision; ++i) q *= p_;
    for (auto& c : mod) c %= q;
  }
  unsigned __int128 pm = 1;
  for (int i = 0; i < precision; ++i) {
    pm *= p_;
    if (pm >= (static_cast<unsigned __int128>(1) << 62)) {
      throw InvalidArgumentError("p^M must stay below 2^62");
    }
  }
  return std::make_shared<PadicContext>(p_, precision, degree_, std::move(mod));
}

bool PadicContext::SameRing(const PadicContext& o) const {
  return this == &o || (p_ == o.p_ && precision_ == o.precision_ &&
                        degree_ == o.degree_ && modulus_ == o.modulus_);
}

bool PadicContext::SameTower(const PadicContext& o) const {
  if (p_ != o.p_ || degree_ != o.degree_) return false;
  uint64_t q = std::min(pm_, o.pm_);
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (modulus_[i] % q != o.modulus_[i] % q) return false;
  }
  return true;
}

std::string PadicContext::Describe() const {
  std::ostringstream os;
  os << "Z/" << p_ << "^" << precision_;
  if (degree_ > 1) os << " (degree " << degree_ << ")";
  return os.str();
}

void CheckSameRing(const PadicContext& a, const PadicContext& b) {
  if (!a.SameRing(b)) {
    throw ContextMismatchError("operands live in " + a.Describe() + " and " +
                               b.Describe());
  }
}

uint64_t PadicContext::FromInt(int64_t v) const {
  if (v >= 0) return static_cast<uint64_t>(v) % pm_;
  uint64_t m = static_cast<uint64_t>(-(v + 1)) % pm_;  // avoids INT64_MIN overflow
  return pm_ - 1 - m;
}

uint64_t PadicContext::Valuation(uint64_t digit) const {
  if (digit == 0) return precision_;
  uint64_t v = 0;
  while (digit % p_ == 0) {
    digit /= p_;
    ++v;
  }
  return v;
}

int PadicContext::ElemValuation(const uint64_t* a) const {
  int v = precision_;
  for (int i = 0; i < degree_; ++i) v = std::min<int>(v, Valuation(a[i]));
  return v;
}

bool PadicContext::ElemIsZero(const uint64_t* a) const {
  for (int i = 0; i < degree_; ++i)
    if (a[i] != 0) return false;
  return true;
}

void PadicContext::ElemAdd(const uint64_t* a, const uint64_t* b, uint64_t* out) const {
  for (int i = 0; i < degree_; ++i) out[i] = AddMod(a[i], b[i], pm_);
}

void PadicContext::ElemSub(const uint64_t* a, const uint64_t* b, uint64_t* out) const {
  for (int i = 0; i < degree_; ++i) out[i] = SubMod(a[i], b[i], pm_);
}

void PadicContext::ElemNeg(const uint64_t* a, uint64_t* out) const {
  for (int i = 0; i < degree_; ++i) out[i] = a[i] == 0 ? 0 : pm_ - a[i];
}

void PadicContext::ElemScale(const uint64_t* a, uint64_t s, uint64_t* out) const {
  for (int i = 0; i < degree_; ++i) out[i] = MulMod(a[i], s, pm_);
}

void PadicContext::ReduceWide(uint64_t* wide, uint64_t* out) const {
  const int d = degree_;
  for (int k = 2 * d - 2; k >= d; --k) {
    uint64_t c = wide[k];
    if (c == 0) continue;
    for (int i = 0; i < d; ++i) {
      wide[k - d + i] = SubMod(wide[k - d + i], MulMod(c, modulus_[i], pm_), pm_);
    }
  }
  for (int i = 0; i < d; ++i) out[i] = wide[i];
}

void PadicContext::ElemMul(const uint64_t* a, const uint64_t* b, uint64_t* out) const {
  if (degree_ == 1) {
    out[0] = MulMod(a[0], b[0], pm_);
    return;
  }
  const int d = degree_;
  uint64_t wide[64];
  std::vector<uint64_t> heap;
  uint64_t* w = wide;
  if (2 * d - 1 > 64) {
    heap.assign(2 * d - 1, 0);
    w = heap.data();
  } else {
    std::fill(wide, wide + 2 * d - 1, 0);
  }
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      w[i + j] = AddMod(w[i + j], MulMod(a[i], b[j], pm_), pm_);
    }
  }
  ReduceWide(w, out);
}

uint64_t PadicContext::InverseUnitDigit(uint64_t a, uint64_t mod) const {
  __int128 t0 = 0, t1 = 1;
  __int128 r0 = mod, r1 = a % mod;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    std::swap(r0, r1);
    r1 -= q * r0;
    std::swap(t0, t1);
    t1 -= q * t0;
  }
  if (r0 != 1) return 0;
  if (t0 < 0) t0 += mod;
  return static_cast<uint64_t>(t0);
}

bool PadicContext::ElemInverse(const uint64_t* a, uint64_t* out) const {
  if (ElemValuation(a) != 0) return false;
  if (degree_ == 1) {
    out[0] = InverseUnitDigit(a[0], pm_);
    return true;
  }
  const int d = degree_;
  fp::Vec ar(d), mr(d + 1);
  for (int i = 0; i < d; ++i) ar[i] = a[i] % p_;
  for (int i = 0; i <= d; ++i) mr[i] = modulus_[i] % p_;
  fp::Trim(ar);
  fp::Vec inv = fp::InverseMod(ar, mr, p_);
  if (inv.empty()) return false;
  std::vector<uint64_t> y(d, 0), ay(d), two(d, 0), t(d);
  for (size_t i = 0; i < inv.size(); ++i) y[i] = inv[i];
  two[0] = 2 % pm_;
  // Newton: y <- y (2 - a y) doubles the number of correct digits.
  for (int digits = 1; digits < precision_; digits *= 2) {
    ElemMul(a, y.data(), ay.data());
    ElemSub(two.data(), ay.data(), t.data());
    ElemMul(y.data(), t.data(), ay.data());
    y = ay;
  }
  std::copy(y.begin(), y.end(), out);
  return true;
}

void PadicContext::ElemDiv(const uint64_t* a, const uint64_t* b, uint64_t* out) const {
  const int d = degree_;
  if (ElemIsZero(a)) {
    std::fill(out, out + d, 0);
    return;
  }
  const int va = ElemValuation(a), vb = ElemValuation(b);
  if (vb > va) {
    throw DivisionPrecisionError("division needs v(b) <= v(a), got v(b) = " +
                                 std::to_string(vb) + " > v(a) = " +
                                 std::to_string(va) + " in " + Describe());
  }
  uint64_t pv = 1;
  for (int i = 0; i < vb; ++i) pv *= p_;
  const uint64_t keep = pm_ / pv;  // p^(M - v(b))
  std::vector<uint64_t> as(d), bs(d), binv(d);
  for (int i = 0; i < d; ++i) {
    as[i] = a[i] / pv;
    bs[i] = b[i] / pv;
  }
  if (!ElemInverse(bs.data(), binv.data())) {
    throw InternalError("cancelled divisor is not a unit");
  }
  ElemMul(as.data(), binv.data(), out);
  for (int i = 0; i < d; ++i) out[i] %= keep;
}

std::vector<uint64_t> PadicContext::PolyMul(std::span<const uint64_t> a,
                                            std::span<const uint64_t> b,
                                            MulAlgorithm alg) const {
  const size_t d = degree_;
  if (a.empty() || b.empty()) return {};
  if (d == 1) return MulZq(a, b, pm_, alg);
  // Kronecker packing: element k occupies slot k of width 2d-1, so the
  // (2d-1)-digit products of different slot pairs never overlap.
  const size_t s = 2 * d - 1, na = a.size() / d, nb = b.size() / d;
  std::vector<uint64_t> pa(na * s, 0), pb(nb * s, 0);
  for (size_t k = 0; k < na; ++k)
    for (size_t i = 0; i < d; ++i) pa[k * s + i] = a[k * d + i];
  for (size_t k = 0; k < nb; ++k)
    for (size_t i = 0; i < d; ++i) pb[k * s + i] = b[k * d + i];
  std::vector<uint64_t> prod = MulZq(pa, pb, pm_, alg, d);
  const size_t nout = na + nb - 1;
  std::vector<uint64_t> out(nout * d);
  std::vector<uint64_t> wide(s);
  prod.resize(nout * s, 0);
  for (size_t k = 0; k < nout; ++k) {
    std::copy(prod.begin() + k * s, prod.begin() + (k + 1) * s, wide.begin());
    ReduceWide(wide.data(), out.data() + k * d);
  }
  return out;
}

// ---------------------------------------------------------------------------

PadicElement::PadicElement(ContextPtr ctx)
    : ctx_(std::move(ctx)), coeffs_(ctx_->degree(), 0) {}

PadicElement::PadicElement(ContextPtr ctx, int64_t value)
    : ctx_(std::move(ctx)), coeffs_(ctx_->degree(), 0) {
  coeffs_[0] = ctx_->FromInt(value);
}

PadicElement PadicElement::FromDigits(ContextPtr ctx, std::vector<uint64_t> coeffs) {
  if (static_cast<int>(coeffs.size()) != ctx->degree()) {
    throw InvalidArgumentError("element needs exactly d coefficients");
  }
  for (auto& c : coeffs) c %= ctx->pm();
  PadicElement e;
  e.ctx_ = std::move(ctx);
  e.coeffs_ = std::move(coeffs);
  return e;
}

PadicElement PadicElement::FromDigits(ContextPtr ctx, const uint64_t* coeffs) {
  std::vector<uint64_t> v(coeffs, coeffs + ctx->degree());
  return FromDigits(std::move(ctx), std::move(v));
}

void PadicElement::CheckSame(const PadicElement& o) const {
  if (!ctx_ || !o.ctx_) throw InvalidArgumentError("uninitialised element");
  CheckSameRing(*ctx_, *o.ctx_);
}

PadicElement PadicElement::operator+(const PadicElement& o) const {
  CheckSame(o);
  PadicElement r(ctx_);
  ctx_->ElemAdd(data(), o.data(), r.coeffs_.data());
  return r;
}

PadicElement PadicElement::operator-(const PadicElement& o) const {
  CheckSame(o);
  PadicElement r(ctx_);
  ctx_->ElemSub(data(), o.data(), r.coeffs_.data());
  return r;
}

PadicElement PadicElement::operator*(const PadicElement& o) const {
  CheckSame(o);
  PadicElement r(ctx_);
  ctx_->ElemMul(data(), o.data(), r.coeffs_.data());
  return r;
}

PadicElement PadicElement::operator-() const {
  PadicElement r(ctx_);
  ctx_->ElemNeg(data(), r.coeffs_.data());
  return r;
}

bool PadicElement::operator==(const PadicElement& o) const {
  CheckSame(o);
  return coeffs_ == o.coeffs_;
}

PadicElement PadicElement::Div(const PadicElement& b) const {
  CheckSame(b);
  PadicElement r(ctx_);
  ctx_->ElemDiv(data(), b.data(), r.coeffs_.data());
  return r;
}

PadicElement PadicElement::Inverse() const {
  return PadicElement(ctx_, 1).Div(*this);
}

int PadicElement::Valuation() const { return ctx_->ElemValuation(data()); }

bool PadicElement::IsZero() const { return ctx_->ElemIsZero(data()); }

PadicElement PadicElement::ReduceLift(int target_precision) const {
  ContextPtr t = ctx_->WithPrecision(target_precision);
  PadicElement r(t);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] % t->pm();
  return r;
}

PadicElement PadicElement::Embed(const ContextPtr& ext) const {
  if (ctx_->degree() != 1 || ext->p() != ctx_->p() ||
      ext->precision() != ctx_->precision()) {
    throw ContextMismatchError("cannot embed " + ctx_->Describe() + " into " +
                               ext->Describe());
  }
  PadicElement r(ext);
  r.coeffs_[0] = coeffs_[0];
  return r;
}

std::string PadicElement::ToString() const {
  if (coeffs_.size() == 1) return std::to_string(coeffs_[0]);
  std::string s = "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(coeffs_[i]);
  }
  return s + "]";
}

}  // namespace padiff
