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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "padiff/poly_mul.h"

namespace padiff {

class PadicContext;
using ContextPtr = std::shared_ptr<const PadicContext>;

// The ring O_K / p^M O_K for K unramified of degree d over Q_p, realised as
// (Z/p^M)[x]/(modulus). Elements are stored as d digits in [0, p^M), low
// degree first. Contexts are immutable and shared between elements.
class PadicContext {
 public:
  // Requires p prime, precision >= 1, degree >= 1 and p^precision < 2^62.
  // For degree > 1 the modulus (d+1 coefficients, monic) is checked for
  // irreducibility mod p; when empty a random one is drawn from `seed`.
  static ContextPtr Create(uint64_t p, int precision, int degree = 1,
                           std::vector<uint64_t> modulus = {},
                           uint64_t seed = 0);

  uint64_t p() const { return p_; }
  int precision() const { return precision_; }
  int degree() const { return degree_; }
  // p^M.
  uint64_t pm() const { return pm_; }
  // Monic modulus, d+1 coefficients; empty when d = 1.
  const std::vector<uint64_t>& modulus() const { return modulus_; }
  bool is_field() const { return precision_ == 1; }

  // Same p, d and modulus (lifted with zero digits or truncated).
  ContextPtr WithPrecision(int precision) const;
  ContextPtr Residue() const { return WithPrecision(1); }

  // Same p, M, d and modulus.
  bool SameRing(const PadicContext& other) const;
  // Same p, d and modulus modulo p^min(M, M').
  bool SameTower(const PadicContext& other) const;
  std::string Describe() const;

  // ---- digit kernels; pointers address d consecutive digits ----
  uint64_t FromInt(int64_t v) const;
  uint64_t Valuation(uint64_t digit) const;
  int ElemValuation(const uint64_t* a) const;
  bool ElemIsZero(const uint64_t* a) const;
  void ElemAdd(const uint64_t* a, const uint64_t* b, uint64_t* out) const;
  void ElemSub(const uint64_t* a, const uint64_t* b, uint64_t* out) const;
  void ElemNeg(const uint64_t* a, uint64_t* out) const;
  void ElemMul(const uint64_t* a, const uint64_t* b, uint64_t* out) const;
  void ElemScale(const uint64_t* a, uint64_t s, uint64_t* out) const;
  // Inverse of a unit; returns false when a is not a unit.
  bool ElemInverse(const uint64_t* a, uint64_t* out) const;
  // Fixed-point division; throws DivisionPrecisionError if v(b) > v(a).
  void ElemDiv(const uint64_t* a, const uint64_t* b, uint64_t* out) const;
  // Reduces 2d-1 digits modulo the extension modulus into d digits.
  void ReduceWide(uint64_t* wide, uint64_t* out) const;

  // Full product of two element sequences (na and nb elements, flat).
  std::vector<uint64_t> PolyMul(std::span<const uint64_t> a,
                                std::span<const uint64_t> b,
                                MulAlgorithm alg = MulAlgorithm::kAuto) const;

  PadicContext(uint64_t p, int precision, int degree,
               std::vector<uint64_t> modulus);

 private:
  uint64_t InverseUnitDigit(uint64_t a, uint64_t mod) const;

  uint64_t p_;
  int precision_;
  int degree_;
  uint64_t pm_;
  std::vector<uint64_t> modulus_;
};

// An element a + O(p^M) of a PadicContext.
class PadicElement {
 public:
  PadicElement() = default;
  explicit PadicElement(ContextPtr ctx);
  PadicElement(ContextPtr ctx, int64_t value);
  static PadicElement FromDigits(ContextPtr ctx, std::vector<uint64_t> coeffs);
  static PadicElement FromDigits(ContextPtr ctx, const uint64_t* coeffs);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<uint64_t>& coeffs() const { return coeffs_; }
  const uint64_t* data() const { return coeffs_.data(); }

  PadicElement operator+(const PadicElement& o) const;
  PadicElement operator-(const PadicElement& o) const;
  PadicElement operator*(const PadicElement& o) const;
  PadicElement operator-() const;
  PadicElement& operator+=(const PadicElement& o) { return *this = *this + o; }
  PadicElement& operator-=(const PadicElement& o) { return *this = *this - o; }
  PadicElement& operator*=(const PadicElement& o) { return *this = *this * o; }
  bool operator==(const PadicElement& o) const;

  PadicElement Div(const PadicElement& b) const;
  // Throws DivisionPrecisionError for non-units.
  PadicElement Inverse() const;
  int Valuation() const;
  bool IsZero() const;
  bool IsUnit() const { return Valuation() == 0; }
  // Truncation (target < M) or zero-padded lift (target > M).
  PadicElement ReduceLift(int target_precision) const;
  // Places an element of the prime ring (d = 1) into an extension with the
  // same p and precision.
  PadicElement Embed(const ContextPtr& ext) const;
  // Base-10 digits, "[c0, c1, ...]" when d > 1.
  std::string ToString() const;

 private:
  void CheckSame(const PadicElement& o) const;

  ContextPtr ctx_;
  std::vector<uint64_t> coeffs_;
};

using ResidueElement = PadicElement;

// Throws ContextMismatchError unless both contexts describe the same ring.
void CheckSameRing(const PadicContext& a, const PadicContext& b);
bool IsPrime(uint64_t n);

}  // namespace padiff
