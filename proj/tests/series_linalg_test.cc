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

#include "gtest/gtest.h"
#include "invariants.h"
#include "padiff/errors.h"
#include "padiff/series_linalg.h"

namespace padiff {
namespace {

SeriesMatrix RandomMatrix(const ContextPtr& ctx, size_t g, size_t order,
                          std::mt19937_64& rng) {
  SeriesMatrix a(ctx, g, order);
  for (size_t i = 0; i < g; ++i) {
    for (size_t j = 0; j < g; ++j) a(i, j) = testing::RandomSeries(ctx, order, rng);
  }
  return a;
}

TEST(GaussJordanTest, NonUnitColumnIsRejected) {
  ContextPtr ctx = PadicContext::Create(5, 3);
  SeriesMatrix a = SeriesMatrix::FromConstants(
      {{PadicElement(ctx, 5), PadicElement(ctx, 0)},
       {PadicElement(ctx, 0), PadicElement(ctx, 1)}},
      1);
  EXPECT_THROW(GaussJordanInverse(a), NotInvertibleError);
}

TEST(GaussJordanTest, SkipsNonUnitPivots) {
  ContextPtr ctx = PadicContext::Create(5, 3);
  // The first column starts with a non-unit; the unit below it is used.
  SeriesMatrix a = SeriesMatrix::FromConstants(
      {{PadicElement(ctx, 5), PadicElement(ctx, 1)},
       {PadicElement(ctx, 2), PadicElement(ctx, 3)}},
      1);
  GaussJordanStats stats;
  SeriesMatrix inv = GaussJordanInverse(a, &stats);
  EXPECT_EQ(stats.pivots, 2);
  EXPECT_EQ(stats.non_unit_pivots, 0);
  EXPECT_EQ(inv * a, SeriesMatrix::Identity(ctx, 2, 1));
}

TEST(GaussJordanTest, RandomInversesInExtension) {
  std::mt19937_64 rng(4);
  ContextPtr ctx = PadicContext::Create(3, 6, 2);
  int done = 0;
  for (int i = 0; i < 100; ++i) {
    SeriesMatrix a = RandomMatrix(ctx, 1 + rng() % 4, 1, rng);
    try {
      SeriesMatrix inv = GaussJordanInverse(a);
      EXPECT_EQ(inv * a, SeriesMatrix::Identity(ctx, a.dim(), 1));
      EXPECT_EQ(a * inv, SeriesMatrix::Identity(ctx, a.dim(), 1));
      ++done;
    } catch (const NotInvertibleError&) {
    }
  }
  EXPECT_GT(done, 40);
}

TEST(NewtonInverseTest, FirstOrderStep) {
  ContextPtr ctx = PadicContext::Create(7, 2);
  SeriesMatrix b(ctx, 2, 2);
  b(0, 0) = Series::FromInts(ctx, {1, 3}, 2);
  b(0, 1) = Series::FromInts(ctx, {0, 5}, 2);
  b(1, 0) = Series::FromInts(ctx, {0, 2}, 2);
  b(1, 1) = Series::FromInts(ctx, {1, 6}, 2);
  // b = I + tB, so the inverse modulo t^2 is I - tB.
  SeriesMatrix h = InverseNewtonStep(SeriesMatrix::Identity(ctx, 2, 1), b, 1);
  SeriesMatrix want(ctx, 2, 2);
  want(0, 0) = Series::FromInts(ctx, {1, -3}, 2);
  want(0, 1) = Series::FromInts(ctx, {0, -5}, 2);
  want(1, 0) = Series::FromInts(ctx, {0, -2}, 2);
  want(1, 1) = Series::FromInts(ctx, {1, -6}, 2);
  EXPECT_EQ(h, want);
}

TEST(NewtonInverseTest, DoublingReachesFullOrder) {
  std::mt19937_64 rng(6);
  ContextPtr ctx = PadicContext::Create(11, 3);
  const size_t order = 200;
  SeriesMatrix a = RandomMatrix(ctx, 3, order, rng);
  SeriesMatrix h;
  for (;;) {
    try {
      h = GaussJordanInverse(a);
      break;
    } catch (const NotInvertibleError&) {
      a = RandomMatrix(ctx, 3, order, rng);
    }
  }
  size_t m = 0;
  while (m + 1 < order) {
    const size_t next = std::min(2 * m + 1, order - 1);
    h = InverseNewtonStep(h, a, next);
    m = next;
    EXPECT_EQ(h.order(), m + 1);
    EXPECT_EQ(h * a.Resize(m + 1), SeriesMatrix::Identity(ctx, 3, m + 1));
  }
}

}  // namespace
}  // namespace padiff
