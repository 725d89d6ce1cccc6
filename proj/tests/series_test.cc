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


#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "invariants.h"
#include "padiff/errors.h"
#include "padiff/pade.h"
#include "padiff/poly.h"
#include "padiff/poly_mul.h"
#include "padiff/series.h"

namespace padiff {
namespace {

std::vector<uint64_t> NaiveProduct(const std::vector<uint64_t>& a,
                                   const std::vector<uint64_t>& b, uint64_t q) {
  std::vector<uint64_t> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = AddMod(out[i + j], MulMod(a[i], b[j], q), q);
    }
  }
  return out;
}

TEST(PolyMulTest, KernelsMatchNaiveProduct) {
  std::mt19937_64 rng(3);
  for (uint64_t q : {7ull, 361ull, 1ull << 40, (1ull << 61) - 1}) {
    for (size_t na : {1u, 5u, 31u, 33u, 200u, 517u}) {
      for (size_t nb : {1u, 40u, 300u}) {
        std::vector<uint64_t> a(na), b(nb);
        for (auto& x : a) x = rng() % q;
        for (auto& x : b) x = rng() % q;
        const std::vector<uint64_t> want = NaiveProduct(a, b, q);
        for (MulAlgorithm alg : {MulAlgorithm::kSchoolbook, MulAlgorithm::kKaratsuba,
                                 MulAlgorithm::kNtt, MulAlgorithm::kAuto}) {
          EXPECT_EQ(MulZq(a, b, q, alg), want) << "q=" << q << " na=" << na << " nb=" << nb;
        }
      }
    }
  }
}

// v(t)^2 = f1(t) mod t^3: 2 * 146 * (-21) = 5 and 21^2 + 2 * 146 * 179 = 3
// modulo 361.
TEST(SeriesTest, SquareModT3) {
  ContextPtr ctx = PadicContext::Create(19, 2);
  Series a = Series::FromInts(ctx, {146, -21, 179}, 3);
  EXPECT_EQ(a * a, Series::FromInts(ctx, {17, 5, 3}, 3));
  EXPECT_EQ(a.Mul(a, MulAlgorithm::kSchoolbook), a.Mul(a, MulAlgorithm::kNtt));
}

TEST(SeriesTest, MulKernelsAgreeInExtension) {
  std::mt19937_64 rng(5);
  ContextPtr ctx = PadicContext::Create(3, 5, 4);
  for (size_t order : {3u, 64u, 400u}) {
    Series a = testing::RandomSeries(ctx, order, rng), b = testing::RandomSeries(ctx, order, rng);
    Series s = a.Mul(b, MulAlgorithm::kSchoolbook);
    EXPECT_EQ(a.Mul(b, MulAlgorithm::kKaratsuba), s);
    EXPECT_EQ(a.Mul(b, MulAlgorithm::kNtt), s);
  }
}

TEST(SeriesTest, Integrate) {
  ContextPtr ctx = PadicContext::Create(7, 3);
  Series s = Series::FromInts(ctx, {1, 1, 1}, 3).Integrate();
  EXPECT_EQ(s.order(), 4u);
  EXPECT_EQ(s, Series::FromInts(ctx, {0, 1, 172, 229}, 4));
  EXPECT_THROW(Series::FromInts(ctx, {0, 0, 0, 0, 0, 0, 1}, 7).Integrate(),
               DivisionPrecisionError);
  // 7 t^6 integrates to t^7.
  EXPECT_EQ(Series::FromInts(ctx, {0, 0, 0, 0, 0, 0, 7}, 7).Integrate()[7].ToString(), "1");
}

TEST(SeriesTest, Compose) {
  ContextPtr ctx = PadicContext::Create(7, 1);
  Series f = Series::FromInts(ctx, {0, 3, 1}, 4);
  Series x = Series::FromInts(ctx, {0, 1, 1}, 4);
  EXPECT_EQ(f.Compose(x), Series::FromInts(ctx, {0, 3, 4, 2}, 4));
  EXPECT_THROW(f.Compose(Series::FromInts(ctx, {1, 1}, 4)), InvalidArgumentError);
}

TEST(SeriesTest, Inverse) {
  ContextPtr ctx = PadicContext::Create(5, 3);
  Series inv = Series::FromInts(ctx, {1, -1}, 8).Inverse();
  EXPECT_EQ(inv, Series::FromInts(ctx, {1, 1, 1, 1, 1, 1, 1, 1}, 8));
  EXPECT_THROW(Series::FromInts(ctx, {5, 1}, 8).Inverse(), DivisionPrecisionError);
}

TEST(SeriesTest, SquareRoots) {
  ContextPtr c19 = PadicContext::Create(19, 2);
  Series f1 = Series::FromInts(c19, {17, 5, 3}, 3);
  EXPECT_EQ(f1.Sqrt(PadicElement(c19, 146)), Series::FromInts(c19, {146, 340, 179}, 3));
  ContextPtr c7 = PadicContext::Create(7, 3);
  EXPECT_EQ(Series::FromInts(c7, {1, 2}, 3).Sqrt(PadicElement(c7, 1)),
            Series::FromInts(c7, {1, 1, 171}, 3));
  EXPECT_THROW(f1.Sqrt(PadicElement(c19, 3)), InvalidArgumentError);
}

TEST(SeriesTest, SqrtSquaresBackAtLength) {
  std::mt19937_64 rng(9);
  ContextPtr ctx = PadicContext::Create(11, 4, 2);
  Series y = testing::RandomSeries(ctx, 300, rng);
  y.Set(0, testing::RandomUnit(ctx, rng));
  Series sq = y * y;
  EXPECT_EQ(sq.Sqrt(y[0]), y);
}

TEST(SeriesTest, DerivativeOfIntegral) {
  std::mt19937_64 rng(13);
  ContextPtr ctx = PadicContext::Create(101, 2);
  Series s = testing::RandomSeries(ctx, 90, rng);
  EXPECT_EQ(s.Integrate().Derivative(), s);
}

TEST(PolyTest, DivRemAndMonic) {
  ContextPtr ctx = PadicContext::Create(5, 2);
  Poly a = Poly::FromInts(ctx, {1, 2, 3, 4, 1});
  Poly b = Poly::FromInts(ctx, {3, 0, 2});
  auto [q, r] = a.DivRem(b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_THROW(a.DivRem(Poly::FromInts(ctx, {1, 5})), NonUnitInversionError);
  EXPECT_THROW(Poly::FromInts(ctx, {1, 10}).Monic(), NonUnitInversionError);
  EXPECT_EQ(b.Monic().Leading(), PadicElement(ctx, 1));
}

TEST(PolyTest, InverseModLifts) {
  std::mt19937_64 rng(17);
  ContextPtr ctx = PadicContext::Create(7, 4);
  for (int i = 0; i < 50; ++i) {
    Poly m = testing::RandomPoly(ctx, 4, rng) + Poly::Monomial(ctx, 5);
    Poly a = testing::RandomPoly(ctx, 4, rng);
    Poly inv;
    try {
      inv = InverseMod(a, m);
    } catch (const NonUnitInversionError&) {
      continue;
    }
    EXPECT_EQ((a * inv).Mod(m), Poly::FromInts(ctx, {1}));
  }
}

TEST(PolyTest, ExtendedGcdIdentity) {
  ContextPtr ctx = PadicContext::Create(13, 3);
  Poly a = Poly::FromInts(ctx, {-2, 0, 1}) * Poly::FromInts(ctx, {5, 1});
  Poly b = Poly::FromInts(ctx, {5, 1}) * Poly::FromInts(ctx, {1, 1, 1});
  Xgcd x = ExtendedGcd(a, b);
  EXPECT_EQ(x.g, Poly::FromInts(ctx, {5, 1}));
  EXPECT_EQ(x.s * a + x.t * b, x.g);
}

TEST(PadeTest, GeometricSeries) {
  ContextPtr ctx = PadicContext::Create(7, 1);
  Series s = Series::FromInts(ctx, std::vector<int64_t>(10, 1), 10);
  for (bool fast : {true, false}) {
    PadeResult r = PadeReconstruct(s, 0, 1, fast);
    EXPECT_EQ(r.numerator, Poly::FromInts(ctx, {1}));
    EXPECT_EQ(r.denominator, Poly::FromInts(ctx, {1, -1}));
  }
}

TEST(PadeTest, RecoversRandomFraction) {
  std::mt19937_64 rng(21);
  ContextPtr ctx = PadicContext::Create(10007, 1);
  for (int i = 0; i < 20; ++i) {
    const int dn = 1 + static_cast<int>(rng() % 60), dd = 1 + static_cast<int>(rng() % 60);
    Poly num = testing::RandomPoly(ctx, dn, rng), den = testing::RandomPoly(ctx, dd, rng);
    den = den.Scale(den[0].Inverse());
    if (GcdField(num, den).degree() > 0) continue;
    const size_t order = static_cast<size_t>(dn + dd + 1);
    Series s = num.ToSeries(order) * den.ToSeries(order).Inverse();
    PadeResult fast = PadeReconstruct(s, dn, dd, true);
    PadeResult slow = PadeReconstruct(s, dn, dd, false);
    EXPECT_EQ(fast.numerator, num);
    EXPECT_EQ(fast.denominator, den);
    EXPECT_EQ(slow.numerator, num);
    EXPECT_EQ(slow.denominator, den);
  }
}

TEST(PadeTest, NoFractionWithinBounds) {
  ContextPtr ctx = PadicContext::Create(7, 1);
  // Six generic terms do not come from a fraction of type (1, 1).
  Series s = Series::FromInts(ctx, {1, 2, 0, 0, 1, 4}, 6);
  EXPECT_THROW(PadeReconstruct(s, 1, 1, true), ReconstructionError);
  EXPECT_THROW(PadeReconstruct(s, 1, 1, false), ReconstructionError);
}

}  // namespace
}  // namespace padiff
