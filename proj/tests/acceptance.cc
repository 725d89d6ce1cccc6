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


// Acceptance report: one PASS/FAIL line per criterion, followed by indented
// diagnostics. Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "invariants.h"
#include "padiff/errors.h"
#include "padiff/isogeny.h"
#include "padiff/ode_solver.h"
#include "padiff/pade.h"

namespace padiff {
namespace {

// ---- pinned tolerances ----
constexpr double kGoldenSeconds = 5.0;
constexpr int kGoldenTerms = 21;
constexpr int kOracleTrials = 50;
constexpr double kOracleSeconds = 120.0;
constexpr int kProblemsPerPrime = 100;
constexpr size_t kMaxOrder = 200;
constexpr int kExtraDigits = 4;
constexpr double kMaxDoublingRatio = 2.8;
constexpr int kTimingRepeats = 5;
constexpr size_t kPadeSize = 4096;
constexpr int kMinInvariantCases = 1000;
constexpr double kInvariantSeconds = 300.0;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> notes;
};

// Printed golden data over Z/19^2 and F_19.
const std::vector<int64_t> kX1 = {-36,  -8,   -58,  -90, -90, -145, -124,
                                  -107, -13,  -114, 154, 129, 88,   103,
                                  -22,  -147, -178, 168, 144, -166, -77};
const std::vector<int64_t> kX2 = {-129, 102, 100, 94,   45,   91, 29,
                                  137,  -132, -52, 51,  150,  80, 90,
                                  -124, -163, 90,  102, 55,   44, 23};
// N and D of -sigma_1, little-endian.
const std::vector<int64_t> kN = {1, 0,  18, 17, 9,  10, 5, 10, 5,  6, 13,
                                 16, 18, 2, 18, 2, 16, 4, 12, 8, 1};
const std::vector<int64_t> kD = {16, 9, 16, 11, 18, 5,  6,  4,  3, 5, 2,
                                 16, 13, 5, 8, 18, 13, 0, 14, 18, 11, 12};

IsogenyConfig GoldenConfig() {
  IsogenyConfig cfg;
  cfg.p = 19;
  cfg.N = 1;
  cfg.mode = IsogenyMode::kSupplied;
  cfg.l = 11;
  cfg.f1 = {17, 5, 3, 11, 16, 1};
  cfg.f2 = {0, -68, 2546, -100, -176, 2};
  cfg.norm_matrix = {{95, 233}, {155, 228}};
  cfg.base_point = std::make_pair(int64_t{0}, int64_t{146});
  cfg.initial_points = {{-36, -13}, {-129, -47}};
  cfg.order = 110;
  cfg.precision = 2;
  return cfg;
}

Outcome GoldenSeries() {
  Outcome o;
  const auto t0 = Clock::now();
  IsogenyProblem prob = PrepareProblem(GoldenConfig(), 0);
  IsogenySeries s = SolveIsogeny(prob);
  const double secs = Seconds(t0);
  const ContextPtr& ctx = prob.c1.context();
  int matched = 0;
  for (int j = 0; j < 2; ++j) {
    const std::vector<int64_t>& want = j == 0 ? kX1 : kX2;
    for (int k = 0; k < kGoldenTerms; ++k) {
      const PadicElement got = s.x[j][k];
      const PadicElement exp(ctx, want[k]);
      if (got == exp) {
        ++matched;
      } else {
        std::ostringstream os;
        os << "x" << j + 1 << " t^" << k << ": got " << got.ToString() << ", printed "
           << exp.ToString() << (got.ReduceLift(1) == exp.ReduceLift(1) ? " (equal mod 19)" : "");
        o.notes.push_back(os.str());
      }
    }
  }
  o.pass = matched == 2 * kGoldenTerms && secs < kGoldenSeconds;
  std::ostringstream os;
  os << matched << "/" << 2 * kGoldenTerms << " coefficients exact mod 361, M="
     << prob.precision() << " n=" << prob.n << ", " << secs << " s (limit " << kGoldenSeconds
     << " s)";
  o.summary = os.str();
  return o;
}

Outcome GoldenReconstruction() {
  Outcome o;
  IsogenyResult res = RunIsogeny(GoldenConfig());
  const ComponentResult& s1 = res.rep.sigma[0];
  if (!s1.value) {
    o.summary = "sigma_1 not reconstructed: " + s1.error;
    return o;
  }
  const ContextPtr& f19 = s1.value->num.context();
  const Poly n_printed = Poly::FromInts(f19, kN), d_printed = Poly::FromInts(f19, kD);
  const Poly num = -s1.value->num, den = s1.value->den;
  o.pass = num * d_printed == n_printed * den;
  std::ostringstream os;
  os << "-sigma_1 = N/D with deg " << num.degree() << "/" << den.degree()
     << " (printed " << n_printed.degree() << "/" << d_printed.degree() << "), "
     << (o.pass ? "cross-multiplication holds" : "cross-multiplication fails");
  o.summary = os.str();
  if (!o.pass && den.degree() == d_printed.degree()) {
    // Express the mismatch coefficient-wise after scaling to the printed D.
    const PadicElement c = d_printed.Leading().Div(den.Leading());
    const Poly ds = den.Scale(c), ns = num.Scale(c);
    o.notes.push_back(std::string("D ") + (ds == d_printed ? "equals" : "differs from") +
                      " the printed D after scaling by " + c.ToString());
    for (int k = 0; k <= std::max(ns.degree(), n_printed.degree()); ++k) {
      if (!(ns[k] == n_printed[k])) {
        o.notes.push_back("N x^" + std::to_string(k) + ": got " + ns[k].ToString() +
                          ", printed " + n_printed[k].ToString());
      }
    }
  }
  return o;
}

Outcome MultiplicationOracle() {
  struct Case {
    int g;
    uint64_t p;
    int l;
  };
  const std::vector<Case> cases = {{2, 7, 2}, {2, 7, 3}, {3, 11, 2}};
  Outcome o;
  o.pass = true;
  const auto t0 = Clock::now();
  int good = 0;
  for (const Case& c : cases) {
    const std::string tag = "(g,p,l)=(" + std::to_string(c.g) + "," + std::to_string(c.p) +
                            "," + std::to_string(c.l) + ")";
    IsogenyConfig cfg;
    cfg.p = c.p;
    cfg.l = c.l;
    cfg.seed = 1;
    cfg.f1 = RandomCurveCoefficients(c.p, c.g, cfg.seed);
    try {
      IsogenyResult res = RunIsogeny(cfg);
      if (!res.rep.complete()) throw ReconstructionError("incomplete representation");
      VerifyReport v = VerifyRepresentation(res.rep, res.problem.c1.ReduceLift(1),
                                            static_cast<uint64_t>(c.l), kOracleTrials, 1);
      const bool ok = v.passed == kOracleTrials && v.failed == 0;
      o.notes.push_back(tag + ": " + std::to_string(v.passed) + "/" +
                        std::to_string(v.trials) + " points verified" +
                        (ok ? "" : ", first counterexample " + v.first_counterexample));
      if (ok) {
        ++good;
      } else {
        o.pass = false;
      }
    } catch (const Error& e) {
      o.pass = false;
      o.notes.push_back(tag + ": " + e.name() + ": " + e.what());
    }
  }
  const double secs = Seconds(t0);
  o.pass = o.pass && secs < kOracleSeconds;
  o.summary = std::to_string(good) + "/" + std::to_string(cases.size()) +
              " cases verified on " + std::to_string(kOracleTrials) + " points, " +
              std::to_string(secs) + " s (limit " + std::to_string(kOracleSeconds) + " s)";
  return o;
}

// Shared suite for criteria 4 and 5.
struct SuiteStats {
  int problems = 0;
  int stable = 0;   // M and M+4 agree mod p^N
  int naive = 0;    // DiffSolve == NaiveSolve mod p^N
  int planted = 0;  // DiffSolve == planted solution mod p^N
  std::vector<std::string> notes;
};

SuiteStats RunPrecisionSuite() {
  SuiteStats st;
  std::mt19937_64 rng(2026);
  for (uint64_t p : {2u, 3u, 5u, 7u}) {
    for (int i = 0; i < kProblemsPerPrime; ++i) {
      const size_t g = 1 + i % 3;
      const size_t n = 1 + rng() % kMaxOrder;
      const int digits = 1 + i % 3;
      const int m = RequiredPrecision(p, digits, n);
      ContextPtr high = PadicContext::Create(p, m + kExtraDigits);
      PlantedProblem pp = RandomPlantedProblem(high, g, n, 3, rng);
      pp.problem.N = digits;
      OdeProblem low = ReduceGenericProblem(pp.problem, m);
      ++st.problems;
      const std::string tag = "p=" + std::to_string(p) + " g=" + std::to_string(g) +
                              " n=" + std::to_string(n) + " N=" + std::to_string(digits);
      try {
        const SeriesVector x_low = DiffSolve(low).X.ReduceLift(digits);
        const SeriesVector x_high = DiffSolve(pp.problem).X.ReduceLift(digits);
        const SeriesVector x_naive = NaiveSolve(low).ReduceLift(digits);
        if (x_low == x_high) {
          ++st.stable;
        } else if (st.notes.size() < 5) {
          st.notes.push_back(tag + ": M and M+4 disagree");
        }
        if (x_low == x_naive) {
          ++st.naive;
        } else if (st.notes.size() < 5) {
          st.notes.push_back(tag + ": DiffSolve and NaiveSolve disagree");
        }
        if (x_low == pp.solution.ReduceLift(digits)) ++st.planted;
      } catch (const Error& e) {
        if (st.notes.size() < 5) st.notes.push_back(tag + ": " + e.name() + ": " + e.what());
      }
    }
  }
  return st;
}

Outcome PrecisionProperty(const SuiteStats& st) {
  Outcome o;
  o.pass = st.stable == st.problems && st.problems == 4 * kProblemsPerPrime;
  o.summary = std::to_string(st.stable) + "/" + std::to_string(st.problems) +
              " problems agree at M and M+" + std::to_string(kExtraDigits) +
              " modulo p^N (p in {2,3,5,7}, g <= 3, n <= " + std::to_string(kMaxOrder) + ")";
  o.notes = st.notes;
  return o;
}

Outcome OracleEquivalence(const SuiteStats& st) {
  Outcome o;
  o.pass = st.naive == st.problems && st.problems == 4 * kProblemsPerPrime;
  o.summary = std::to_string(st.naive) + "/" + std::to_string(st.problems) +
              " problems match the term-by-term solver; " + std::to_string(st.planted) +
              " also match the planted solution";
  return o;
}

double TimeDiffSolve(size_t n, std::mt19937_64& rng) {
  const int m = RequiredPrecision(7, 1, n);
  ContextPtr ctx = PadicContext::Create(7, m);
  PlantedProblem pp = RandomPlantedProblem(ctx, 2, n, 3, rng);
  std::vector<double> t;
  for (int r = 0; r < kTimingRepeats; ++r) {
    const auto t0 = Clock::now();
    DiffSolve(pp.problem);
    t.push_back(Seconds(t0));
  }
  return Median(t);
}

Outcome PerformanceTrend() {
  Outcome o;
  std::mt19937_64 rng(6);
  TimeDiffSolve(256, rng);  // warm-up
  const double t1 = TimeDiffSolve(1024, rng);
  const double t2 = TimeDiffSolve(2048, rng);
  const double ratio = t2 / t1;

  // Pade reconstruction of a random degree (n/2, n/2) fraction over F_7.
  ContextPtr f7 = PadicContext::Create(7, 1);
  const int half = static_cast<int>(kPadeSize / 2) - 1;
  Poly num = testing::RandomPoly(f7, half, rng), den = testing::RandomPoly(f7, half, rng);
  den = den.Scale(den[0].Inverse());
  const Series s = num.ToSeries(kPadeSize) * den.ToSeries(kPadeSize).Inverse();
  std::vector<double> fast, slow;
  for (int r = 0; r < 3; ++r) {
    auto t0 = Clock::now();
    PadeResult a = PadeReconstruct(s, half, half, true);
    fast.push_back(Seconds(t0));
    t0 = Clock::now();
    PadeResult b = PadeReconstruct(s, half, half, false);
    slow.push_back(Seconds(t0));
    if (!(a.numerator == b.numerator) || !(a.denominator == b.denominator)) {
      o.notes.push_back("half-gcd and Euclid disagree");
    }
  }
  const double tf = Median(fast), ts = Median(slow);
  o.pass = ratio <= kMaxDoublingRatio && tf < ts && o.notes.empty();
  std::ostringstream os;
  os << "DiffSolve g=2 p=7: n=1024 " << t1 << " s, n=2048 " << t2 << " s, ratio " << ratio
     << " (limit " << kMaxDoublingRatio << "); Pade n=" << kPadeSize << ": half-gcd " << tf
     << " s vs Euclid " << ts << " s";
  o.summary = os.str();
  return o;
}

Outcome InvariantSuites() {
  Outcome o;
  const auto t0 = Clock::now();
  int cases = 0, failed_suites = 0;
  for (const testing::Invariant& inv : testing::AllInvariants()) {
    testing::InvariantResult r;
    try {
      r = inv.run(1);
    } catch (const std::exception& e) {
      r.Fail(std::string("threw: ") + e.what());
    }
    cases += r.cases;
    if (!r.ok()) {
      ++failed_suites;
      o.notes.push_back(std::string(inv.module) + "." + inv.name + ": " +
                        std::to_string(r.failures) + "/" + std::to_string(r.cases) +
                        " failed; first: " + r.detail);
    }
  }
  const double secs = Seconds(t0);
  o.pass = failed_suites == 0 && cases >= kMinInvariantCases && secs < kInvariantSeconds;
  o.summary = std::to_string(testing::AllInvariants().size() - failed_suites) + "/" +
              std::to_string(testing::AllInvariants().size()) + " invariants green, " +
              std::to_string(cases) + " cases (min " + std::to_string(kMinInvariantCases) +
              "), " + std::to_string(secs) + " s (limit " + std::to_string(kInvariantSeconds) +
              " s)";
  return o;
}

Outcome Guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    Outcome o;
    o.summary = std::string("threw: ") + e.what();
    return o;
  }
}

}  // namespace
}  // namespace padiff

int main() {
  using padiff::Outcome;
  std::cout << std::unitbuf;
  int failures = 0;
  auto report = [&](int id, const char* title, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << title
              << "): " << o.summary << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    if (!o.pass) ++failures;
  };
  report(1, "golden series", padiff::Guarded(padiff::GoldenSeries));
  report(2, "golden reconstruction", padiff::Guarded(padiff::GoldenReconstruction));
  report(3, "multiplication oracle", padiff::Guarded(padiff::MultiplicationOracle));
  padiff::SuiteStats st;
  try {
    st = padiff::RunPrecisionSuite();
  } catch (const std::exception& e) {
    st.notes.push_back(std::string("suite threw: ") + e.what());
  }
  report(4, "precision property", padiff::PrecisionProperty(st));
  report(5, "oracle equivalence", padiff::OracleEquivalence(st));
  report(6, "performance trend", padiff::Guarded(padiff::PerformanceTrend));
  report(7, "invariant suites", padiff::Guarded(padiff::InvariantSuites));
  std::cout << (7 - failures) << "/7 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
