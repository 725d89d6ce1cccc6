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
#include <memory>
#include <random>

#include "gtest/gtest.h"
#include "padiff/errors.h"
#include "padiff/ode_solver.h"
#include "padiff/poly_mul.h"

namespace padiff {
namespace {

TEST(RequiredPrecisionTest, Examples) {
  EXPECT_EQ(RequiredPrecision(19, 1, 110), 2);
  EXPECT_EQ(RequiredPrecision(5, 3, 1), 3);
  EXPECT_EQ(RequiredPrecision(2, 1, 10), 6);
  EXPECT_EQ(RequiredPrecision(3, 1, 9), 4);
  EXPECT_EQ(RequiredPrecision(7, 2, 48), 3);
  EXPECT_EQ(RequiredPrecision(7, 2, 49), 4);
}

// (1 + x) x' = 1 with x(0) = 0 has x = sqrt(1 + 2t) - 1, whose coefficients
// are (-1)^(k+1) 2 C_(k-1) / 2^k with C the Catalan numbers.
TEST(DiffSolveTest, ClosedFormGenusOne) {
  const uint64_t p = 5;
  const int n_digits = 3;
  const size_t n = 20;
  const int m = RequiredPrecision(p, n_digits, n);
  ContextPtr ctx = PadicContext::Create(p, m);
  OdeProblem prob;
  prob.H = std::make_shared<GenericSeriesH>(
      std::vector<std::vector<Poly>>{{Poly::FromInts(ctx, {1, 1})}});
  prob.G = SeriesVector(std::vector<Series>{Series::FromInts(ctx, {1}, n)});
  prob.n = n;
  prob.N = n_digits;
  SeriesVector x = DiffSolve(prob).X.ReduceLift(n_digits);

  const uint64_t q = 125;
  const uint64_t half = 63;  // 2 * 63 = 1 mod 125
  uint64_t catalan = 1;      // C_0
  for (size_t k = 1; k <= n; ++k) {
    uint64_t want = MulMod(2 * (catalan % q), PowMod(half, k, q), q);
    if (k % 2 == 0) want = (q - want) % q;
    EXPECT_EQ(x[0][k].coeffs()[0], want) << "k=" << k;
    catalan = catalan * 2 * (2 * k - 1) / (k + 1);  // C_k from C_(k-1)
  }
  EXPECT_TRUE(x[0][0].IsZero());
}

TEST(DiffSolveTest, MatchesNaiveOnPlantedProblems) {
  std::mt19937_64 rng(42);
  for (uint64_t p : {2u, 3u, 7u}) {
    for (size_t g : {1u, 2u, 3u}) {
      const size_t n = 60;
      const int m = RequiredPrecision(p, 2, n);
      ContextPtr ctx = PadicContext::Create(p, m);
      PlantedProblem pp = RandomPlantedProblem(ctx, g, n, 3, rng);
      pp.problem.N = 2;
      SeriesVector diff = DiffSolve(pp.problem).X;
      SeriesVector naive = NaiveSolve(pp.problem);
      EXPECT_EQ(diff.ReduceLift(2), naive.ReduceLift(2)) << "p=" << p << " g=" << g;
      EXPECT_EQ(diff.ReduceLift(2), pp.solution.ReduceLift(2)) << "p=" << p << " g=" << g;
    }
  }
}

TEST(DiffSolveTest, ResidualVanishes) {
  std::mt19937_64 rng(43);
  ContextPtr ctx = PadicContext::Create(11, 3);
  PlantedProblem pp = RandomPlantedProblem(ctx, 2, 100, 4, rng);
  pp.problem.N = 3;
  DiffSolveResult r = DiffSolve(pp.problem);
  EXPECT_EQ(r.X.order(), 101u);
  SeriesVector lhs = pp.problem.H->Evaluate(r.X.Resize(100)) * r.X.Derivative();
  EXPECT_EQ(lhs, pp.problem.G.Resize(100));
  // The returned inverse matches H(X) to half the order.
  const size_t half = r.Hinv.order();
  EXPECT_EQ(half, 51u);
  EXPECT_EQ(r.Hinv * pp.problem.H->Evaluate(r.X.Resize(half)),
            SeriesMatrix::Identity(ctx, 2, half));
}

TEST(DiffSolveTest, SingularHeadIsRejected) {
  ContextPtr ctx = PadicContext::Create(5, 2);
  OdeProblem prob;
  prob.H = std::make_shared<GenericSeriesH>(
      std::vector<std::vector<Poly>>{{Poly::FromInts(ctx, {5, 1})}});
  prob.G = SeriesVector(std::vector<Series>{Series::FromInts(ctx, {1}, 4)});
  prob.n = 4;
  EXPECT_THROW(DiffSolve(prob), NotInvertibleError);
  EXPECT_THROW(NaiveSolve(prob), NotInvertibleError);
}

TEST(DiffSolveTest, ShortRightHandSideIsRejected) {
  ContextPtr ctx = PadicContext::Create(5, 2);
  OdeProblem prob;
  prob.H = std::make_shared<GenericSeriesH>(
      std::vector<std::vector<Poly>>{{Poly::FromInts(ctx, {1})}});
  prob.G = SeriesVector(std::vector<Series>{Series::FromInts(ctx, {1}, 3)});
  prob.n = 10;
  EXPECT_THROW(DiffSolve(prob), InvalidArgumentError);
}

TEST(DiffSolveTest, ExtraPrecisionDoesNotChangeDigits) {
  std::mt19937_64 rng(44);
  const size_t n = 150;
  const int base = RequiredPrecision(3, 2, n);
  ContextPtr high = PadicContext::Create(3, base + 4);
  PlantedProblem pp = RandomPlantedProblem(high, 2, n, 3, rng);
  pp.problem.N = 2;
  OdeProblem low = ReduceGenericProblem(pp.problem, base);
  EXPECT_EQ(DiffSolve(low).X.ReduceLift(2), DiffSolve(pp.problem).X.ReduceLift(2));
}

}  // namespace
}  // namespace padiff
