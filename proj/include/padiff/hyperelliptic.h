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
#include <vector>

#include "padiff/padic.h"
#include "padiff/poly.h"

namespace padiff {

// y^2 = f(x) with deg f in {2g+1, 2g+2} over a PadicContext (M = 1 allowed).
class HyperellipticCurve {
 public:
  HyperellipticCurve() = default;
  // Checks p odd, the degree, a unit leading coefficient and that f is
  // squarefree modulo p.
  explicit HyperellipticCurve(Poly f);

  const Poly& f() const { return f_; }
  int genus() const { return genus_; }
  bool odd_degree() const { return f_.degree() % 2 == 1; }
  const ContextPtr& context() const { return f_.context(); }

  HyperellipticCurve ReduceLift(int target_precision) const;
  HyperellipticCurve Embed(const ContextPtr& ext) const;

 private:
  Poly f_;
  int genus_ = 0;
};

// Mumford representation (U, V): U monic, deg V < deg U, V^2 = f mod U.
struct MumfordDivisor {
  Poly u;
  Poly v;

  static MumfordDivisor Identity(const ContextPtr& ctx);
  bool IsIdentity() const { return u.degree() == 0; }
  bool operator==(const MumfordDivisor& o) const { return u == o.u && v == o.v; }
  MumfordDivisor ReduceLift(int target_precision) const;
  std::string ToString() const;
};

struct CurvePoint {
  PadicElement x;
  PadicElement y;
  bool infinity = false;
};

// True when U is monic, deg V < deg U <= g and V^2 = f mod U exactly.
bool IsValidDivisor(const HyperellipticCurve& c, const MumfordDivisor& d);

// Reduced representative of D1 + D2 (odd-degree models). Over Z/p^M with
// M > 1 every inversion must hit a unit; otherwise NonUnitInversionError.
MumfordDivisor CantorAdd(const HyperellipticCurve& c, const MumfordDivisor& d1,
                         const MumfordDivisor& d2);
MumfordDivisor Negate(const MumfordDivisor& d);
MumfordDivisor ScalarMul(const HyperellipticCurve& c, uint64_t l,
                         const MumfordDivisor& d);
// The class [Q - infinity] = (X - x_Q, y_Q).
MumfordDivisor DivisorFromPoint(const HyperellipticCurve& c, const CurvePoint& q);

// The point (x0, y) with y^2 = f(x0) at the curve's precision and
// y = y0_residue mod p. Throws WeierstrassError when y0_residue = 0.
CurvePoint HenselLiftPoint(const HyperellipticCurve& c, const PadicElement& x0,
                           const PadicElement& y0_residue);

// The g support points of a divisor with deg U = g, over the smallest
// unramified extension splitting U mod p (modulus drawn from `seed`).
// Points are sorted by the residue digits of x.
std::vector<CurvePoint> DivisorPoints(const HyperellipticCurve& c,
                                      const MumfordDivisor& d, uint64_t seed);

}  // namespace padiff
