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

#include "padiff/series.h"

#include <algorithm>
#include <utility>

#include "padiff/errors.h"

namespace padiff {

Series::Series(ContextPtr ctx, size_t order)
    : ctx_(std::move(ctx)), order_(order), digits_(order * ctx_->degree(), 0) {}

Series Series::FromElements(ContextPtr ctx, const std::vector<PadicElement>& c) {
  Series s(ctx, c.size());
  for (size_t k = 0; k < c.size(); ++k) s.Set(k, c[k]);
  return s;
}

Series Series::FromInts(ContextPtr ctx, const std::vector<int64_t>& c,
                        size_t order) {
  Series s(ctx, order);
  for (size_t k = 0; k < std::min(order, c.size()); ++k) {
    s.at(k)[0] = s.ctx_->FromInt(c[k]);
  }
  return s;
}

Series Series::FromDigits(ContextPtr ctx, std::vector<uint64_t> digits) {
  const size_t d = ctx->degree();
  if (digits.size() % d != 0) {
    throw InvalidArgumentError("digit vector length is not a multiple of d");
  }
  Series s;
  s.order_ = digits.size() / d;
  for (auto& x : digits) x %= ctx->pm();
  s.ctx_ = std::move(ctx);
  s.digits_ = std::move(digits);
  return s;
}

Series Series::Constant(const PadicElement& c, size_t order) {
  Series s(c.context(), order);
  if (order > 0) s.Set(0, c);
  return s;
}

Series Series::Variable(ContextPtr ctx, size_t order) {
  Series s(std::move(ctx), order);
  if (order > 1) s.at(1)[0] = 1 % s.ctx_->pm();
  return s;
}

PadicElement Series::operator[](size_t k) const {
  if (k >= order_) throw InvalidArgumentError("coefficient index out of range");
  return PadicElement::FromDigits(ctx_, at(k));
}

void Series::Set(size_t k, const PadicElement& c) {
  if (k >= order_) throw InvalidArgumentError("coefficient index out of range");
  CheckSameRing(*ctx_, *c.context());
  std::copy(c.coeffs().begin(), c.coeffs().end(), at(k));
}

bool Series::IsZero() const {
  return std::all_of(digits_.begin(), digits_.end(),
                     [](uint64_t x) { return x == 0; });
}

void Series::CheckSame(const Series& o) const {
  if (!ctx_ || !o.ctx_) throw InvalidArgumentError("uninitialised series");
  CheckSameRing(*ctx_, *o.ctx_);
}

Series Series::Resize(size_t order) const {
  Series r = *this;
  r.order_ = order;
  r.digits_.resize(order * d(), 0);
  return r;
}

Series Series::operator+(const Series& o) const {
  CheckSame(o);
  Series r(ctx_, std::min(order_, o.order_));
  const uint64_t q = ctx_->pm();
  for (size_t i = 0; i < r.digits_.size(); ++i)
    r.digits_[i] = AddMod(digits_[i], o.digits_[i], q);
  return r;
}

Series Series::operator-(const Series& o) const {
  CheckSame(o);
  Series r(ctx_, std::min(order_, o.order_));
  const uint64_t q = ctx_->pm();
  for (size_t i = 0; i < r.digits_.size(); ++i)
    r.digits_[i] = SubMod(digits_[i], o.digits_[i], q);
  return r;
}

Series Series::operator-() const {
  Series r(ctx_, order_);
  const uint64_t q = ctx_->pm();
  for (size_t i = 0; i < digits_.size(); ++i)
    r.digits_[i] = digits_[i] == 0 ? 0 : q - digits_[i];
  return r;
}

Series Series::operator*(const Series& o) const {
  return Mul(o, MulAlgorithm::kAuto);
}

Series Series::Mul(const Series& o, MulAlgorithm alg) const {
  CheckSame(o);
  const size_t n = std::min(order_, o.order_);
  Series r(ctx_, n);
  if (n == 0) return r;
  const size_t dd = d();
  std::vector<uint64_t> prod =
      ctx_->PolyMul(std::span(digits_.data(), n * dd),
                    std::span(o.digits_.data(), n * dd), alg);
  std::copy(prod.begin(), prod.begin() + n * dd, r.digits_.begin());
  return r;
}

Series Series::Scale(const PadicElement& c) const {
  CheckSameRing(*ctx_, *c.context());
  Series r(ctx_, order_);
  for (size_t k = 0; k < order_; ++k) ctx_->ElemMul(at(k), c.data(), r.at(k));
  return r;
}

bool Series::operator==(const Series& o) const {
  CheckSame(o);
  return order_ == o.order_ && digits_ == o.digits_;
}

Series Series::Integrate() const {
  Series r(ctx_, order_ + 1);
  std::vector<uint64_t> den(d(), 0);
  for (size_t k = 0; k < order_; ++k) {
    den[0] = (k + 1) % ctx_->pm();
    ctx_->ElemDiv(at(k), den.data(), r.at(k + 1));
  }
  return r;
}

Series Series::Derivative() const {
  if (order_ == 0) throw InvalidArgumentError("derivative of an order-0 series");
  Series r(ctx_, order_ - 1);
  const uint64_t q = ctx_->pm();
  for (size_t k = 1; k < order_; ++k) ctx_->ElemScale(at(k), k % q, r.at(k - 1));
  return r;
}

Series Series::Compose(const Series& x) const {
  CheckSame(x);
  const size_t n = x.order_;
  if (n > 0 && !ctx_->ElemIsZero(x.at(0))) {
    throw InvalidArgumentError("compose needs an inner series with x(0) = 0");
  }
  Series r(ctx_, n);
  if (n == 0) return r;
  // Horner from the top coefficient; terms of degree >= n vanish mod t^n
  // only through x, so every coefficient of f is used.
  for (size_t k = order_; k-- > 0;) {
    r = r * x;
    ctx_->ElemAdd(r.at(0), at(k), r.at(0));
  }
  return r;
}

Series Series::Inverse() const {
  if (order_ == 0) return *this;
  std::vector<uint64_t> h0(d());
  if (!ctx_->ElemInverse(at(0), h0.data())) {
    throw DivisionPrecisionError("series inverse needs a unit constant term");
  }
  Series b(ctx_, 1);
  std::copy(h0.begin(), h0.end(), b.at(0));
  size_t k = 1;
  while (k < order_) {
    k = std::min(2 * k, order_);
    // b <- b + b (1 - a b)
    Series bk = b.Resize(k);
    Series e = Resize(k) * bk;
    e = -e;
    ctx_->ElemAdd(e.at(0), PadicElement(ctx_, 1).data(), e.at(0));
    b = bk + bk * e;
  }
  return b;
}

Series Series::Sqrt(const PadicElement& y0) const {
  CheckSameRing(*ctx_, *y0.context());
  if (ctx_->p() == 2) {
    throw InvalidArgumentError("square roots are not supported for p = 2");
  }
  if (!y0.IsUnit()) throw InvalidArgumentError("sqrt needs a unit y(0)");
  if (order_ == 0) return *this;
  if (!(y0 * y0 == (*this)[0])) {
    throw InvalidArgumentError("sqrt start value does not square to a(0)");
  }
  const PadicElement half = PadicElement(ctx_, 2).Inverse();
  Series y = Constant(y0, 1);
  Series z = Constant(y0.Inverse(), 1);  // 1/y modulo t^k
  size_t k = 1;
  while (k < order_) {
    const size_t k2 = std::min(2 * k, order_);
    // y <- y - (y^2 - a) / (2 y); the error term is O(t^k) so 1/y mod t^k
    // is enough.
    Series yk = y.Resize(k2);
    Series err = yk * yk - Resize(k2);
    Series corr = err * z.Resize(k2);
    y = yk - corr.Scale(half);
    if (k2 < order_) {
      // Refresh 1/y to order k2 with one Newton step.
      Series zk = z.Resize(k2);
      Series e = y * zk;
      e = -e;
      ctx_->ElemAdd(e.at(0), PadicElement(ctx_, 1).data(), e.at(0));
      z = zk + zk * e;
    }
    k = k2;
  }
  return y;
}

Series Series::ReduceLift(int target_precision) const {
  ContextPtr t = ctx_->WithPrecision(target_precision);
  Series r(t, order_);
  for (size_t i = 0; i < digits_.size(); ++i) r.digits_[i] = digits_[i] % t->pm();
  return r;
}

Series Series::Embed(const ContextPtr& ext) const {
  if (ctx_->degree() != 1 || ext->p() != ctx_->p() ||
      ext->precision() != ctx_->precision()) {
    throw ContextMismatchError("cannot embed " + ctx_->Describe() + " into " +
                               ext->Describe());
  }
  Series r(ext, order_);
  for (size_t k = 0; k < order_; ++k) r.at(k)[0] = digits_[k];
  return r;
}

std::string Series::ToString() const {
  std::string s = "[";
  for (size_t k = 0; k < order_; ++k) {
    if (k) s += ", ";
    s += (*this)[k].ToString();
  }
  return s + "]";
}

}  // namespace padiff
