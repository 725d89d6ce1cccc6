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
#include <string>
#include <vector>

#include "padiff/padic.h"

namespace padiff {

// A power series known modulo t^order with coefficients in a PadicContext.
// Coefficient k occupies digits [k*d, (k+1)*d) of the flat digit vector.
class Series {
 public:
  Series() = default;
  // The zero series modulo t^order.
  Series(ContextPtr ctx, size_t order);
  static Series FromElements(ContextPtr ctx, const std::vector<PadicElement>& c);
  // Integer coefficients (d = 1 placement), padded or cut to `order`.
  static Series FromInts(ContextPtr ctx, const std::vector<int64_t>& c,
                         size_t order);
  static Series FromDigits(ContextPtr ctx, std::vector<uint64_t> digits);
  static Series Constant(const PadicElement& c, size_t order);
  // The series t (or 0 when order < 2).
  static Series Variable(ContextPtr ctx, size_t order);

  const ContextPtr& context() const { return ctx_; }
  size_t order() const { return order_; }
  const std::vector<uint64_t>& digits() const { return digits_; }
  std::vector<uint64_t>& mutable_digits() { return digits_; }
  const uint64_t* at(size_t k) const { return digits_.data() + k * d(); }
  uint64_t* at(size_t k) { return digits_.data() + k * d(); }

  PadicElement operator[](size_t k) const;
  void Set(size_t k, const PadicElement& c);
  bool IsZero() const;

  // Truncates or zero-extends to the new order.
  Series Resize(size_t order) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator-() const;
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }
  Series Scale(const PadicElement& c) const;
  bool operator==(const Series& o) const;

  // Product modulo t^min(order, order') with an explicit kernel.
  Series Mul(const Series& o, MulAlgorithm alg) const;

  // Antiderivative with zero constant term; order grows by one. Coefficient
  // k+1 is a_k / (k+1) under the fixed-point division rule.
  Series Integrate() const;
  Series Derivative() const;
  // f(x) for this series f read as a polynomial of degree order-1; x must
  // have zero constant term. Result has x's order.
  Series Compose(const Series& x) const;
  // Newton inverse; requires a unit constant term.
  Series Inverse() const;
  // Newton square root with y(0) = y0; requires p odd, y0 a unit and
  // y0^2 = a(0).
  Series Sqrt(const PadicElement& y0) const;

  Series ReduceLift(int target_precision) const;
  Series Embed(const ContextPtr& ext) const;
  std::string ToString() const;

 private:
  size_t d() const { return static_cast<size_t>(ctx_->degree()); }
  void CheckSame(const Series& o) const;

  ContextPtr ctx_;
  size_t order_ = 0;
  std::vector<uint64_t> digits_;
};

}  // namespace padiff
