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
#include <optional>
#include <string>
#include <vector>

#include "padiff/hyperelliptic.h"
#include "padiff/ode_solver.h"
#include "padiff/poly.h"
#include "padiff/series.h"

namespace padiff {

enum class IsogenyMode { kMultiplicationByL, kSupplied };

struct DegreeBounds {
  int l_eff = 0;
  int sigma = 0;         // numerator and denominator bound for each sigma_i
  std::vector<int> rho;  // bound for rho_i / v, i = 1..g
  size_t order = 0;      // default series order n = 2 * max bound + 2
  int MaxBound() const;
};

DegreeBounds ComputeDegreeBounds(IsogenyMode mode, int g, int l, int deg_f2);

// Integer-level description of an isogeny job.
struct IsogenyConfig {
  uint64_t p = 0;
  int N = 1;
  IsogenyMode mode = IsogenyMode::kMultiplicationByL;
  int l = 2;
  std::vector<int64_t> f1;                      // little-endian
  std::vector<int64_t> f2;                      // empty in multiplication mode
  std::vector<std::vector<int64_t>> norm_matrix;  // supplied mode
  std::optional<std::pair<int64_t, int64_t>> base_point;
  // Supplied mode: image of [Q - infinity] as its support points.
  std::vector<std::pair<int64_t, int64_t>> initial_points;
  std::optional<size_t> order;  // overrides the default n
  std::optional<int> precision;  // overrides required_precision
  bool fast_gcd = true;
  uint64_t seed = 0;
  int max_attempts = 10;
};

// Resolved problem at the working precision M.
struct IsogenyProblem {
  IsogenyMode mode = IsogenyMode::kMultiplicationByL;
  int l = 1;
  int N = 1;
  HyperellipticCurve c1, c2;
  std::vector<std::vector<PadicElement>> norm_matrix;
  CurvePoint q;
  std::vector<CurvePoint> support;  // x_i(0), y_i(0), possibly in an extension
  size_t n = 0;
  DegreeBounds bounds;
  bool bounds_capped = false;
  uint64_t seed = 0;

  int precision() const { return c1.context()->precision(); }
  uint64_t p() const { return c1.context()->p(); }
  int genus() const { return c1.genus(); }
  const ContextPtr& work_context() const { return support[0].x.context(); }
};

// Builds the problem for one choice of base point. `attempt` perturbs the
// random choices; genericity failures propagate as typed errors.
IsogenyProblem PrepareProblem(const IsogenyConfig& cfg, int attempt);

struct IsogenySystem {
  Series u, v;  // u(t) = u_Q + t and v(t), base context, order n + 1
  SeriesVector G;
  std::shared_ptr<const HyperellipticH> H;
};

IsogenySystem BuildSystem(const IsogenyProblem& prob);

struct IsogenySeries {
  std::vector<Series> x, y;  // x_i(t), y_i(t) modulo t^(n+1)
  Series v;                  // v(t) in the working context
};

IsogenySeries SolveIsogeny(const IsogenyProblem& prob);

// A fraction in u over F_p; den is monic.
struct RationalFunction {
  Poly num, den;
  PadicElement Evaluate(const PadicElement& u) const;
};

struct ComponentResult {
  std::string name;                     // "sigma_1", "rho_2/v", ...
  Series series;                        // reduced mod p, in t = u - u_Q
  std::optional<RationalFunction> value;
  std::string error;                    // set when reconstruction failed
};

struct RationalRepresentation {
  std::vector<ComponentResult> sigma;   // sigma_1..sigma_g
  std::vector<ComponentResult> rho;     // rho_1/v..rho_g/v
  bool complete() const;
};

// Symmetric-function and Lagrange-interpolation series reduced modulo p and
// projected to F_p (indices follow sigma_1..sigma_g, rho_1/v..rho_g/v).
std::vector<Series> RepresentationSeries(const IsogenySeries& s,
                                         const IsogenyProblem& prob);

RationalRepresentation ReconstructRepresentation(const IsogenySeries& s,
                                                 const IsogenyProblem& prob,
                                                 bool fast_gcd = true);

struct IsogenyResult {
  IsogenyProblem problem;
  IsogenySeries series;
  RationalRepresentation rep;
  int attempts = 0;
  double solve_seconds = 0, reconstruct_seconds = 0;
};

// Full pipeline with base-point re-randomisation on genericity failures.
IsogenyResult RunIsogeny(const IsogenyConfig& cfg);

struct VerifyReport {
  int trials = 0;
  int passed = 0;
  int failed = 0;
  int extension_degree = 1;
  std::string first_counterexample;
};

// Coefficients of a random monic squarefree f of degree 2g+1 over F_p,
// drawn deterministically from `seed`.
std::vector<int64_t> RandomCurveCoefficients(uint64_t p, int g, uint64_t seed);

// Samples affine points on `curve` (over F_p) in an extension F_{p^k} with
// p^k >= 1000 and compares [l](Q' - infinity) against the representation.
VerifyReport VerifyRepresentation(const RationalRepresentation& rep,
                                  const HyperellipticCurve& curve, uint64_t l,
                                  int trials, uint64_t seed);

}  // namespace padiff
