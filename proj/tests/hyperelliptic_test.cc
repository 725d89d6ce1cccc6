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


#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "invariants.h"
#include "padiff/errors.h"
#include "padiff/finite_field.h"
#include "padiff/hyperelliptic.h"

namespace padiff {
namespace {

HyperellipticCurve GoldenDomain() {
  return HyperellipticCurve(
      Poly::FromInts(PadicContext::Create(19, 2), {17, 5, 3, 11, 16, 1}));
}

// All affine points of y^2 = f(x) over a prime field, by enumeration.
std::vector<CurvePoint> AllPoints(const HyperellipticCurve& c) {
  const ContextPtr& ctx = c.context();
  std::vector<CurvePoint> pts;
  for (int64_t x = 0; x < static_cast<int64_t>(ctx->p()); ++x) {
    for (int64_t y = 0; y < static_cast<int64_t>(ctx->p()); ++y) {
      PadicElement xe(ctx, x), ye(ctx, y);
      if (ye * ye == c.f().Evaluate(xe)) pts.push_back({xe, ye, false});
    }
  }
  return pts;
}

MumfordDivisor RandomFieldDivisor(const HyperellipticCurve& c,
                                  const std::vector<CurvePoint>& pts,
                                  std::mt19937_64& rng) {
  MumfordDivisor d = MumfordDivisor::Identity(c.context());
  const int k = static_cast<int>(rng() % (c.genus() + 1));
  for (int i = 0; i < k; ++i) d = CantorAdd(c, d, DivisorFromPoint(c, pts[rng() % pts.size()]));
  return d;
}

TEST(HyperellipticCurveTest, RejectsBadModels) {
  ContextPtr c7 = PadicContext::Create(7, 1);
  // (x - 1)^2 (x^3 + 1) is not squarefree.
  Poly f = Poly::FromInts(c7, {1, -2, 1}) * Poly::FromInts(c7, {1, 0, 0, 1});
  EXPECT_THROW(HyperellipticCurve{f}, InvalidArgumentError);
  EXPECT_THROW(HyperellipticCurve(Poly::FromInts(c7, {1, 1})), InvalidArgumentError);
  ContextPtr c2 = PadicContext::Create(2, 3);
  EXPECT_THROW(HyperellipticCurve(Poly::FromInts(c2, {1, 1, 0, 0, 0, 1})),
               InvalidArgumentError);
  EXPECT_EQ(GoldenDomain().genus(), 2);
}

TEST(DivisorTest, FromPoint) {
  HyperellipticCurve c = GoldenDomain();
  const ContextPtr& ctx = c.context();
  MumfordDivisor d = DivisorFromPoint(c, {PadicElement(ctx, 0), PadicElement(ctx, 146), false});
  EXPECT_EQ(d.u, Poly::FromInts(ctx, {0, 1}));
  EXPECT_EQ(d.v, Poly::FromInts(ctx, {146}));
  EXPECT_TRUE(IsValidDivisor(c, d));
  EXPECT_TRUE(CantorAdd(c, d, Negate(d)).IsIdentity());
  EXPECT_EQ(CantorAdd(c, d, MumfordDivisor::Identity(ctx)), d);
  EXPECT_THROW(DivisorFromPoint(c, {PadicElement(ctx, 0), PadicElement(ctx, 0), true}),
               InvalidArgumentError);
}

TEST(DivisorTest, WeierstrassPointIsTwoTorsion) {
  ContextPtr ctx = PadicContext::Create(7, 1);
  // x (x^4 + 3) with x^4 + 3 squarefree mod 7.
  HyperellipticCurve c(Poly::FromInts(ctx, {0, 3, 0, 0, 0, 1}));
  MumfordDivisor w = DivisorFromPoint(c, {PadicElement(ctx, 0), PadicElement(ctx, 0), false});
  EXPECT_TRUE(w.v.IsZero());
  EXPECT_TRUE(ScalarMul(c, 2, w).IsIdentity());
  EXPECT_EQ(ScalarMul(c, 3, w), w);
}

TEST(HenselLiftPointTest, GoldenBasePoint) {
  HyperellipticCurve c = GoldenDomain();
  const ContextPtr& ctx = c.context();
  ContextPtr res = ctx->Residue();
  CurvePoint q = HenselLiftPoint(c, PadicElement(ctx, 0), PadicElement(res, 13));
  EXPECT_EQ(q.y.ToString(), "146");
  CurvePoint conj = HenselLiftPoint(c, PadicElement(ctx, 0), PadicElement(res, 6));
  EXPECT_EQ(conj.y.ToString(), "215");
  EXPECT_EQ(conj.y * conj.y, c.f().Evaluate(conj.x));
  EXPECT_THROW(HenselLiftPoint(c, PadicElement(ctx, 0), PadicElement(res, 0)),
               WeierstrassError);
  EXPECT_THROW(HenselLiftPoint(c, PadicElement(ctx, 0), PadicElement(res, 1)),
               InvalidArgumentError);
}

TEST(CantorTest, AssociativeOverF7) {
  ContextPtr ctx = PadicContext::Create(7, 1);
  HyperellipticCurve c(Poly::FromInts(ctx, {2, 3, 0, 0, 0, 1}));
  const std::vector<CurvePoint> pts = AllPoints(c);
  ASSERT_FALSE(pts.empty());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    MumfordDivisor a = DivisorFromPoint(c, pts[rng() % pts.size()]);
    MumfordDivisor b = DivisorFromPoint(c, pts[rng() % pts.size()]);
    MumfordDivisor d = DivisorFromPoint(c, pts[rng() % pts.size()]);
    MumfordDivisor lhs = CantorAdd(c, CantorAdd(c, a, b), d);
    EXPECT_EQ(lhs, CantorAdd(c, a, CantorAdd(c, b, d)));
    EXPECT_TRUE(IsValidDivisor(c, lhs));
  }
}

TEST(CantorTest, ScalarMulMatchesRepeatedAddition) {
  ContextPtr ctx = PadicContext::Create(7, 1);
  HyperellipticCurve c(Poly::FromInts(ctx, {2, 3, 0, 0, 0, 1}));
  const std::vector<CurvePoint> pts = AllPoints(c);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    MumfordDivisor d = RandomFieldDivisor(c, pts, rng);
    MumfordDivisor sum = MumfordDivisor::Identity(ctx);
    for (int k = 0; k < 4; ++k) sum = CantorAdd(c, sum, d);
    EXPECT_EQ(ScalarMul(c, 4, d), sum);
    EXPECT_EQ(ScalarMul(c, 1, d), d);
    EXPECT_TRUE(ScalarMul(c, 0, d).IsIdentity());
  }
}

TEST(CantorTest, PadicSumReducesToFieldSum) {
  std::mt19937_64 rng(3);
  int done = 0;
  for (int i = 0; i < 100; ++i) {
    HyperellipticCurve c = testing::RandomCurve(11, 3, 2, rng);
    MumfordDivisor a = DivisorFromPoint(c, testing::RandomPoint(c, rng));
    MumfordDivisor b = DivisorFromPoint(c, testing::RandomPoint(c, rng));
    if (a.u.ReduceLift(1) == b.u.ReduceLift(1)) continue;
    MumfordDivisor s = CantorAdd(c, a, b);
    EXPECT_TRUE(IsValidDivisor(c, s));
    EXPECT_EQ(s.ReduceLift(1),
              CantorAdd(c.ReduceLift(1), a.ReduceLift(1), b.ReduceLift(1)));
    ++done;
  }
  EXPECT_GT(done, 50);
}

// Over Z/13^2 the 13th multiple of this point passes through a remainder
// whose leading coefficient is 13^2 times a unit. It vanishes modulo 13^2, so
// a plain computation would quietly return a wrong divisor.
TEST(CantorTest, HiddenNonUnitIsReported) {
  ContextPtr ctx = PadicContext::Create(13, 2);
  HyperellipticCurve c(Poly::FromInts(ctx, {37, 86, 126, 46, 102, 1}));
  CurvePoint q = HenselLiftPoint(c, PadicElement(ctx, -125), PadicElement(ctx->Residue(), 7));
  MumfordDivisor d = DivisorFromPoint(c, q);
  EXPECT_THROW(ScalarMul(c, 13, d), NonUnitInversionError);
  MumfordDivisor d7 = ScalarMul(c, 7, d);
  EXPECT_EQ(ScalarMul(c, 14, d), CantorAdd(c, d7, d7));
  EXPECT_TRUE(IsValidDivisor(c, ScalarMul(c, 14, d)));
}

TEST(DivisorPointsTest, GoldenInitialDivisor) {
  ContextPtr ctx = PadicContext::Create(19, 2);
  HyperellipticCurve c2(Poly::FromInts(ctx, {0, -68, 2546, -100, -176, 2}));
  Poly u = Poly::FromInts(ctx, {36, 1}) * Poly::FromInts(ctx, {129, 1});
  // V through (-36, -13) and (-129, -47).
  PadicElement slope = PadicElement(ctx, -34).Div(PadicElement(ctx, -93));
  Poly v = Poly::FromInts(ctx, {-13}) + Poly::FromInts(ctx, {36, 1}).Scale(slope);
  MumfordDivisor d{u, v};
  ASSERT_TRUE(IsValidDivisor(c2, d));
  std::vector<CurvePoint> pts = DivisorPoints(c2, d, 0);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].x, PadicElement(ctx, -36));
  EXPECT_EQ(pts[0].y, PadicElement(ctx, -13));
  EXPECT_EQ(pts[1].x, PadicElement(ctx, -129));
  EXPECT_EQ(pts[1].y, PadicElement(ctx, -47));
}

TEST(DivisorPointsTest, RejectsDegenerateDivisors) {
  HyperellipticCurve c = GoldenDomain();
  const ContextPtr& ctx = c.context();
  // 20 = 1 mod 19: a double root of U mod p.
  MumfordDivisor rep{Poly::FromInts(ctx, {1, 1}) * Poly::FromInts(ctx, {20, 1}), Poly(ctx)};
  EXPECT_THROW(DivisorPoints(c, rep, 0), RepeatedRootError);
  MumfordDivisor one = DivisorFromPoint(c, {PadicElement(ctx, 0), PadicElement(ctx, 146), false});
  EXPECT_THROW(DivisorPoints(c, one, 0), DegreeError);
}

TEST(DivisorPointsTest, ProductOfLinearFactorsIsU) {
  std::mt19937_64 rng(5);
  int done = 0;
  for (int i = 0; i < 60; ++i) {
    HyperellipticCurve c = testing::RandomCurve(7, 3, 2, rng);
    const ContextPtr& ctx = c.context();
    CurvePoint a = testing::RandomPoint(c, rng), b = testing::RandomPoint(c, rng);
    if (a.x.ReduceLift(1) == b.x.ReduceLift(1)) continue;
    MumfordDivisor d = CantorAdd(c, DivisorFromPoint(c, a), DivisorFromPoint(c, b));
    std::vector<CurvePoint> pts = DivisorPoints(c, d, rng());
    Poly prod = Poly::FromInts(ctx, {1});
    for (const auto& pt : pts) {
      prod = prod * Poly::FromElements(ctx, {-pt.x, PadicElement(ctx, 1)});
      EXPECT_EQ(pt.y * pt.y, c.f().Evaluate(pt.x));
    }
    EXPECT_EQ(prod, d.u);
    ++done;
  }
  EXPECT_GT(done, 30);
}

TEST(DivisorPointsTest, IrreducibleUUsesExtension) {
  ContextPtr ctx = PadicContext::Create(7, 2);
  HyperellipticCurve c(Poly::FromInts(ctx, {2, 3, 0, 0, 0, 1}));
  std::mt19937_64 rng(6);
  // Some sum of two points has U irreducible mod 7 when the support sits in
  // F_49; search small multiples of a point.
  CurvePoint q = testing::RandomPoint(c, rng);
  MumfordDivisor d = DivisorFromPoint(c, q);
  bool found = false;
  for (uint64_t k = 2; k < 60 && !found; ++k) {
    MumfordDivisor m;
    try {
      m = ScalarMul(c, k, d);
    } catch (const NonUnitInversionError&) {
      continue;
    }
    if (m.u.degree() != 2 || !IsIrreducible(m.u.ReduceLift(1))) continue;
    std::vector<CurvePoint> pts = DivisorPoints(c, m, 9);
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_EQ(pts[0].x.context()->degree(), 2);
    const HyperellipticCurve ce = c.Embed(pts[0].x.context());
    for (const auto& pt : pts) EXPECT_EQ(pt.y * pt.y, ce.f().Evaluate(pt.x));
    found = true;
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace padiff
