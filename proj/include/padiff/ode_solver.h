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
#include <random>
#include <vector>

#include "padiff/poly.h"
#include "padiff/series_linalg.h"

namespace padiff {

// Coefficient-at-a-time evaluation of H(X): Next() receives coefficient k
// of X (g elements, flat digits) and returns coefficient k of H(X) as g*g
// elements in row-major order. Coefficients must arrive in order from k = 0.
class HStream {
 public:
  virtual ~HStream() = default;
  virtual std::vector<uint64_t> Next(const std::vector<uint64_t>& xk) = 0;
};

// Provider of the matrix H(X) of the system H(X) X' = G.
class HEvaluator {
 public:
  virtual ~HEvaluator() = default;
  virtual size_t dim() const = 0;
  virtual const ContextPtr& context() const = 0;
  // H(X) modulo t^order(X); X has zero constant term.
  virtual SeriesMatrix Evaluate(const SeriesVector& x) const = 0;
  virtual std::unique_ptr<HStream> Stream() const = 0;
  // H(0), the constant matrix at the origin.
  SeriesMatrix Head() const;
};

// Entry (i, j) is f_ij(x_j(t)). Column j depends on x_j alone, which is what
// makes H(X) X' + dH(X)(h) X' the derivative of H(X) h in the Newton step.
class GenericSeriesH : public HEvaluator {
 public:
  explicit GenericSeriesH(std::vector<std::vector<Poly>> f);

  size_t dim() const override { return f_.size(); }
  const ContextPtr& context() const override { return ctx_; }
  SeriesMatrix Evaluate(const SeriesVector& x) const override;
  std::unique_ptr<HStream> Stream() const override;
  const std::vector<std::vector<Poly>>& polys() const { return f_; }

 private:
  ContextPtr ctx_;
  std::vector<std::vector<Poly>> f_;
};

// Entry (i, j) is (x_j(0) + x_j(t))^i / y_j(t) with i counted from zero and
// y_j = sqrt(f(x_j(0) + x_j(t))), y_j(0) given.
class HyperellipticH : public HEvaluator {
 public:
  HyperellipticH(Poly f, std::vector<PadicElement> x0,
                 std::vector<PadicElement> y0);

  size_t dim() const override { return x0_.size(); }
  const ContextPtr& context() const override { return ctx_; }
  SeriesMatrix Evaluate(const SeriesVector& x) const override;
  std::unique_ptr<HStream> Stream() const override;
  // y_j(t) for the shifted solution x.
  std::vector<Series> YSeries(const SeriesVector& x) const;

  const Poly& f() const { return f_; }
  const std::vector<PadicElement>& x0() const { return x0_; }
  const std::vector<PadicElement>& y0() const { return y0_; }

 private:
  ContextPtr ctx_;
  Poly f_;
  std::vector<PadicElement> x0_, y0_;
};

struct OdeProblem {
  SeriesVector G;  // order >= n
  std::shared_ptr<const HEvaluator> H;
  size_t n = 0;    // target t-order: X is returned modulo t^(n+1)
  int N = 1;       // target p-adic precision
};

// Working precision guaranteeing N correct digits after DiffSolve to order n.
int RequiredPrecision(uint64_t p, int N, size_t n);

struct DiffSolveResult {
  SeriesVector X;      // modulo t^(n+1), X(0) = 0
  SeriesMatrix Hinv;   // H(X)^-1 modulo t^(ceil((n+1)/2))
};

// Newton doubling solver; runs at the precision of G's context.
DiffSolveResult DiffSolve(const OdeProblem& prob);

// Term-by-term oracle: S_k = H_0^-1 (G_k - sum_{j>=1} H_j S_{k-j}),
// X_{k+1} = S_k / (k+1), with H's coefficients taken from its stream.
SeriesVector NaiveSolve(const OdeProblem& prob);

// A GenericSeriesH problem with a known solution: random f_ij of degree
// <= `degree` with H(0) invertible mod p, random X* with X*(0) = 0 modulo
// t^(n+1), and G = H(X*) X*'. Everything lives in `ctx`.
struct PlantedProblem {
  OdeProblem problem;
  SeriesVector solution;
};

PlantedProblem RandomPlantedProblem(const ContextPtr& ctx, size_t g, size_t n,
                                    int degree, std::mt19937_64& rng);

// The same problem with every coefficient reduced to `precision` digits.
OdeProblem ReduceGenericProblem(const OdeProblem& prob, int precision);

}  // namespace padiff
