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
#include <string>
#include <utility>
#include <vector>

#include "padiff/padic.h"
#include "padiff/series.h"

namespace padiff {

// Dense univariate polynomial over a PadicContext, low degree first, with no
// trailing zero coefficients. Over a context with M = 1 this is a polynomial
// over the residue field F_q.
class Poly {
 public:
  Poly() = default;
  explicit Poly(ContextPtr ctx);  // zero polynomial
  static Poly FromElements(ContextPtr ctx, const std::vector<PadicElement>& c);
  static Poly FromInts(ContextPtr ctx, const std::vector<int64_t>& c);
  static Poly FromDigits(ContextPtr ctx, std::vector<uint64_t> digits);
  static Poly Constant(const PadicElement& c);
  static Poly Monomial(ContextPtr ctx, size_t k);  // X^k
  // Coefficients 0..order-1 of a series.
  static Poly FromSeries(const Series& s);

  const ContextPtr& context() const { return ctx_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(size()) - 1; }
  size_t size() const { return digits_.size() / d(); }
  bool IsZero() const { return digits_.empty(); }
  const std::vector<uint64_t>& digits() const { return digits_; }
  const uint64_t* at(size_t k) const { return digits_.data() + k * d(); }
  // Coefficient of X^k (zero beyond the degree).
  PadicElement operator[](size_t k) const;
  PadicElement Leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  Poly Scale(const PadicElement& c) const;
  Poly Mul(const Poly& o, MulAlgorithm alg) const;

  // Quotient and remainder; the divisor's leading coefficient must be a
  // unit (NonUnitInversionError otherwise).
  std::pair<Poly, Poly> DivRem(const Poly& b) const;
  Poly Mod(const Poly& b) const { return DivRem(b).second; }
  // Exact division by a polynomial known to divide this one.
  Poly ExactDiv(const Poly& b) const;
  Poly Monic() const;
  PadicElement Evaluate(const PadicElement& x) const;
  Poly Derivative() const;
  // f(g) by Horner.
  Poly Compose(const Poly& g) const;
  // f(X + c).
  Poly TaylorShift(const PadicElement& c) const;
  // f(x(t)) modulo t^order(x); x may have a nonzero constant term.
  Series EvaluateSeries(const Series& x) const;
  Series ToSeries(size_t order) const;
  // Low `k` coefficients (this mod X^k) and this div X^k.
  Poly Low(size_t k) const;
  Poly ShiftDown(size_t k) const;
  Poly ShiftUp(size_t k) const;

  Poly ReduceLift(int target_precision) const;
  Poly Embed(const ContextPtr& ext) const;
  std::string ToString() const;

 private:
  size_t d() const { return static_cast<size_t>(ctx_->degree()); }
  void Trim();
  void CheckSame(const Poly& o) const;

  ContextPtr ctx_;
  std::vector<uint64_t> digits_;
};

using ResiduePoly = Poly;

// Inverse of a modulo a monic m over Z/p^M (or F_q): the inverse is found
// over the residue field and Newton-lifted. Throws NonUnitInversionError
// when a is not invertible modulo (m, p).
Poly InverseMod(const Poly& a, const Poly& m);

// Monic gcd over a field context (M = 1).
Poly GcdField(Poly a, Poly b);

// Extended Euclid over Z/p^M with unit checks at every division; returns
// (g, s, t) with s a + t b = g and g monic. Throws NonUnitInversionError on
// a non-unit leading coefficient.
struct Xgcd {
  Poly g, s, t;
};
Xgcd ExtendedGcd(const Poly& a, const Poly& b);

}  // namespace padiff
