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

#include "padiff/isogeny.h"

#include <algorithm>
#include <chrono>
#include <random>
#include <utility>

#include "padiff/errors.h"
#include "padiff/finite_field.h"
#include "padiff/pade.h"

namespace padiff {
namespace {

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::mt19937_64 AttemptRng(uint64_t seed, int attempt) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(attempt), 0x51ed2701u};
  return std::mt19937_64(seq);
}

CurvePoint RandomBasePoint(const HyperellipticCurve& c, std::mt19937_64& rng) {
  const ContextPtr& ctx = c.context();
  const ContextPtr res = ctx->Residue();
  const Poly fr = c.f().ReduceLift(1);
  std::uniform_int_distribution<uint64_t> dist(0, ctx->p() - 1);
  for (int tries = 0; tries < 10000; ++tries) {
    PadicElement u(res, static_cast<int64_t>(dist(rng)));
    PadicElement fu = fr.Evaluate(u);
    if (fu.IsZero()) continue;
    std::optional<PadicElement> v = SqrtFq(fu, rng);
    if (!v) continue;
    PadicElement vr = (rng() & 1) ? *v : -*v;
    PadicElement ul = PadicElement::FromDigits(ctx, u.coeffs());
    return HenselLiftPoint(c, ul, vr);
  }
  throw InvalidArgumentError("no affine non-Weierstrass point found on the curve");
}

// Projects a residue series over F_{p^L} to F_p, checking Galois invariance.
Series ProjectToPrimeField(const Series& s, const ContextPtr& base_residue) {
  const ContextPtr& ctx = s.context();
  const size_t d = ctx->degree();
  Series r(base_residue, s.order());
  for (size_t k = 0; k < s.order(); ++k) {
    for (size_t i = 1; i < d; ++i) {
      if (s.at(k)[i] != 0) {
        throw InternalError("symmetric function is not defined over F_p");
      }
    }
    r.at(k)[0] = s.at(k)[0];
  }
  return r;
}

// Coefficients (low degree first) of prod_j (X - x_j) over series.
std::vector<Series> ProductOfLinear(const std::vector<Series>& xs, const ContextPtr& ctx,
                                    size_t order) {
  std::vector<Series> c{Series::Constant(PadicElement(ctx, 1), order)};
  for (const auto& x : xs) {
    std::vector<Series> nc(c.size() + 1, Series(ctx, order));
    for (size_t k = 0; k < c.size(); ++k) {
      nc[k + 1] += c[k];
      nc[k] -= x * c[k];
    }
    c = std::move(nc);
  }
  return c;
}

}  // namespace

int DegreeBounds::MaxBound() const {
  int m = sigma;
  for (int r : rho) m = std::max(m, r);
  return m;
}

DegreeBounds ComputeDegreeBounds(IsogenyMode mode, int g, int l, int deg_f2) {
  if (l < 1 || g < 1) throw InvalidArgumentError("degree bounds need l, g >= 1");
  DegreeBounds b;
  b.l_eff = mode == IsogenyMode::kMultiplicationByL ? l * l : l;
  b.sigma = g * b.l_eff;
  const bool odd = deg_f2 % 2 == 1;
  for (int i = 1; i <= g; ++i) {
    b.rho.push_back((odd ? 2 * i + 1 : 2 * i + 2) * g * b.l_eff + 3);
  }
  b.order = 2 * static_cast<size_t>(b.MaxBound()) + 2;
  return b;
}

IsogenyProblem PrepareProblem(const IsogenyConfig& cfg, int attempt) {
  if (cfg.f1.size() < 4) throw InvalidArgumentError("f1 must have degree >= 3");
  const int deg_f1 = static_cast<int>(cfg.f1.size()) - 1;
  const int g = (deg_f1 - 1) / 2;
  const bool mult = cfg.mode == IsogenyMode::kMultiplicationByL;
  const int deg_f2 = mult ? deg_f1 : static_cast<int>(cfg.f2.size()) - 1;

  IsogenyProblem prob;
  prob.mode = cfg.mode;
  prob.l = cfg.l;
  prob.N = cfg.N;
  prob.seed = cfg.seed;
  prob.bounds = ComputeDegreeBounds(cfg.mode, g, cfg.l, deg_f2);
  prob.n = cfg.order.value_or(prob.bounds.order);
  if (prob.n < 1) throw InvalidArgumentError("series order must be positive");
  // Pade on n+1 coefficients supports bounds up to n/2.
  const int cap = static_cast<int>(prob.n / 2);
  if (prob.bounds.sigma > cap) {
    prob.bounds.sigma = cap;
    prob.bounds_capped = true;
  }
  for (int& r : prob.bounds.rho) {
    if (r > cap) {
      r = cap;
      prob.bounds_capped = true;
    }
  }
  const int M = cfg.precision.value_or(RequiredPrecision(cfg.p, cfg.N, prob.n));
  ContextPtr ctx = PadicContext::Create(cfg.p, M);

  prob.c1 = HyperellipticCurve(Poly::FromInts(ctx, cfg.f1));
  if (prob.c1.genus() != g) throw InternalError("genus mismatch");
  if (mult) {
    prob.c2 = prob.c1;
  } else {
    prob.c2 = HyperellipticCurve(Poly::FromInts(ctx, cfg.f2));
    if (prob.c2.genus() != g) {
      throw InvalidArgumentError("domain and codomain curves differ in genus");
    }
  }

  prob.norm_matrix.assign(g, std::vector<PadicElement>());
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      int64_t m;
      if (mult) {
        m = i == j ? cfg.l : 0;
      } else {
        if (cfg.norm_matrix.size() != static_cast<size_t>(g) ||
            cfg.norm_matrix[i].size() != static_cast<size_t>(g)) {
          throw InvalidArgumentError("normalization matrix must be g x g");
        }
        m = cfg.norm_matrix[i][j];
      }
      prob.norm_matrix[i].push_back(PadicElement(ctx, m));
    }
  }
  GaussJordanInverse(SeriesMatrix::FromConstants(prob.norm_matrix, 1));

  std::mt19937_64 rng = AttemptRng(cfg.seed, attempt);
  if (cfg.base_point) {
    PadicElement u(ctx, cfg.base_point->first);
    PadicElement v(ctx->Residue(), cfg.base_point->second);
    prob.q = HenselLiftPoint(prob.c1, u, v);
  } else {
    prob.q = RandomBasePoint(prob.c1, rng);
  }

  if (mult) {
    MumfordDivisor d = ScalarMul(prob.c1, cfg.l, DivisorFromPoint(prob.c1, prob.q));
    prob.support = DivisorPoints(prob.c1, d, rng());
  } else {
    if (cfg.initial_points.size() != static_cast<size_t>(g)) {
      throw InvalidArgumentError("supplied mode needs g initial points");
    }
    for (const auto& [x, y] : cfg.initial_points) {
      prob.support.push_back(HenselLiftPoint(prob.c2, PadicElement(ctx, x),
                                             PadicElement(ctx->Residue(), y)));
    }
  }
  for (size_t i = 0; i < prob.support.size(); ++i) {
    for (size_t j = i + 1; j < prob.support.size(); ++j) {
      if ((prob.support[i].x - prob.support[j].x).ReduceLift(1).IsZero()) {
        throw RepeatedRootError("support points coincide modulo p");
      }
    }
  }
  return prob;
}

IsogenySystem BuildSystem(const IsogenyProblem& prob) {
  const ContextPtr& base = prob.c1.context();
  const ContextPtr& work = prob.work_context();
  const bool ext = work->degree() != base->degree();
  const size_t order = prob.n + 1;
  const int g = prob.genus();

  IsogenySystem sys;
  sys.u = Series::Variable(base, order);
  sys.u.Set(0, prob.q.x);
  sys.v = prob.c1.f().EvaluateSeries(sys.u).Sqrt(prob.q.y);
  const Series vinv = sys.v.Inverse();

  std::vector<Series> upow{Series::Constant(PadicElement(base, 1), order)};
  for (int k = 1; k < g; ++k) upow.push_back(upow.back() * sys.u);
  std::vector<Series> gs;
  for (int i = 0; i < g; ++i) {
    // Row i of the normalization matrix pairs with u^0, ..., u^(g-1).
    Series s(base, order);
    for (int k = 0; k < g; ++k) s += upow[k].Scale(prob.norm_matrix[i][k]);
    s = s * vinv;
    gs.push_back(ext ? s.Embed(work) : s);
  }
  sys.G = SeriesVector(std::move(gs));

  std::vector<PadicElement> x0, y0;
  for (const auto& pt : prob.support) {
    x0.push_back(pt.x);
    y0.push_back(pt.y);
  }
  Poly f2 = ext ? prob.c2.f().Embed(work) : prob.c2.f();
  sys.H = std::make_shared<HyperellipticH>(f2, x0, y0);
  return sys;
}

IsogenySeries SolveIsogeny(const IsogenyProblem& prob) {
  IsogenySystem sys = BuildSystem(prob);
  OdeProblem ode{sys.G, sys.H, prob.n, prob.N};
  DiffSolveResult r = DiffSolve(ode);
  IsogenySeries out;
  const ContextPtr& work = prob.work_context();
  for (size_t j = 0; j < r.X.dim(); ++j) {
    Series x = r.X[j];
    work->ElemAdd(x.at(0), prob.support[j].x.data(), x.at(0));
    out.x.push_back(std::move(x));
  }
  out.y = sys.H->YSeries(r.X);
  out.v = work->degree() != sys.v.context()->degree() ? sys.v.Embed(work) : sys.v;
  return out;
}

PadicElement RationalFunction::Evaluate(const PadicElement& u) const {
  PadicElement d = den.Evaluate(u);
  if (d.IsZero()) throw DivisionPrecisionError("denominator vanishes");
  return num.Evaluate(u) * d.Inverse();
}

bool RationalRepresentation::complete() const {
  for (const auto& c : sigma)
    if (!c.value) return false;
  for (const auto& c : rho)
    if (!c.value) return false;
  return true;
}

std::vector<Series> RepresentationSeries(const IsogenySeries& s,
                                         const IsogenyProblem& prob) {
  const ContextPtr& work = prob.work_context();
  const ContextPtr base_res = prob.c1.context()->Residue();
  const size_t g = s.x.size();
  const size_t order = s.x[0].order();

  std::vector<Series> prod = ProductOfLinear(s.x, work, order);
  std::vector<Series> out;
  for (size_t i = 1; i <= g; ++i) out.push_back(prod[g - i]);

  // Lagrange form V(X) = sum_j y_j prod_{k != j} (X - x_k) / (x_j - x_k).
  std::vector<Series> vcoef(g, Series(work, order));
  for (size_t j = 0; j < g; ++j) {
    std::vector<Series> others;
    Series den = Series::Constant(PadicElement(work, 1), order);
    for (size_t k = 0; k < g; ++k) {
      if (k == j) continue;
      others.push_back(s.x[k]);
      den *= s.x[j] - s.x[k];
    }
    Series scale = s.y[j] * den.Inverse();
    std::vector<Series> l = ProductOfLinear(others, work, order);
    for (size_t k = 0; k < g; ++k) vcoef[k] += l[k] * scale;
  }
  const Series vinv = s.v.Resize(order).Inverse();
  for (size_t i = 1; i <= g; ++i) out.push_back(vcoef[g - i] * vinv);

  for (auto& c : out) c = ProjectToPrimeField(c.ReduceLift(1), base_res);
  return out;
}

RationalRepresentation ReconstructRepresentation(const IsogenySeries& s,
                                                 const IsogenyProblem& prob,
                                                 bool fast_gcd) {
  std::vector<Series> comps = RepresentationSeries(s, prob);
  const size_t g = s.x.size();
  const PadicElement uq = prob.q.x.ReduceLift(1);
  RationalRepresentation rep;
  for (size_t idx = 0; idx < comps.size(); ++idx) {
    const bool is_sigma = idx < g;
    const size_t i = is_sigma ? idx : idx - g;
    ComponentResult cr;
    cr.name = (is_sigma ? "sigma_" : "rho_") + std::to_string(i + 1) +
              (is_sigma ? "" : "/v");
    cr.series = comps[idx];
    const int bound = is_sigma ? prob.bounds.sigma : prob.bounds.rho[i];
    try {
      PadeResult pr = PadeReconstruct(comps[idx], bound, bound, fast_gcd);
      // Back from t = u - u_Q to u.
      Poly num = pr.numerator.TaylorShift(-uq);
      Poly den = pr.denominator.TaylorShift(-uq);
      PadicElement lc = den.Leading().Inverse();
      cr.value = RationalFunction{num.Scale(lc), den.Scale(lc)};
    } catch (const ReconstructionError& e) {
      cr.error = e.what();
    }
    (is_sigma ? rep.sigma : rep.rho).push_back(std::move(cr));
  }
  return rep;
}

IsogenyResult RunIsogeny(const IsogenyConfig& cfg) {
  const bool randomized = !cfg.base_point.has_value();
  const int attempts = randomized ? std::max(1, cfg.max_attempts) : 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    try {
      IsogenyResult res;
      res.problem = PrepareProblem(cfg, attempt);
      auto t0 = std::chrono::steady_clock::now();
      res.series = SolveIsogeny(res.problem);
      res.solve_seconds = Seconds(t0);
      t0 = std::chrono::steady_clock::now();
      res.rep = ReconstructRepresentation(res.series, res.problem, cfg.fast_gcd);
      res.reconstruct_seconds = Seconds(t0);
      res.attempts = attempt + 1;
      return res;
    } catch (const RepeatedRootError&) {
      if (attempt + 1 == attempts) throw;
    } catch (const WeierstrassError&) {
      if (attempt + 1 == attempts) throw;
    } catch (const NonUnitInversionError&) {
      if (attempt + 1 == attempts) throw;
    } catch (const DegreeError&) {
      if (attempt + 1 == attempts) throw;
    }
  }
  throw InternalError("unreachable");
}

std::vector<int64_t> RandomCurveCoefficients(uint64_t p, int g, uint64_t seed) {
  ContextPtr ctx = PadicContext::Create(p, 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint64_t> dist(0, p - 1);
  while (true) {
    std::vector<int64_t> c(2 * g + 2);
    for (int i = 0; i <= 2 * g; ++i) c[i] = static_cast<int64_t>(dist(rng));
    c[2 * g + 1] = 1;
    if (IsSquarefree(Poly::FromInts(ctx, c))) return c;
  }
}

VerifyReport VerifyRepresentation(const RationalRepresentation& rep,
                                  const HyperellipticCurve& curve, uint64_t l,
                                  int trials, uint64_t seed) {
  VerifyReport report;
  const ContextPtr& base = curve.context();
  if (!base->is_field() || base->degree() != 1) {
    throw InvalidArgumentError("verification curve must live over F_p");
  }
  if (!rep.complete()) throw InvalidArgumentError("representation is incomplete");
  const int g = curve.genus();
  int k = 1;
  uint64_t q = base->p();
  while (q < 1000) {
    q *= base->p();
    ++k;
  }
  report.extension_degree = k;
  ContextPtr field = k == 1 ? base : PadicContext::Create(base->p(), 1, k, {}, seed);
  auto lift = [&](const Poly& f) { return k == 1 ? f : f.Embed(field); };
  HyperellipticCurve c = k == 1 ? curve : curve.Embed(field);
  std::vector<RationalFunction> sig, rho;
  for (const auto& s : rep.sigma) sig.push_back({lift(s.value->num), lift(s.value->den)});
  for (const auto& r : rep.rho) rho.push_back({lift(r.value->num), lift(r.value->den)});

  std::mt19937_64 rng(seed);
  const long max_samples = 200L * std::max(trials, 1);
  for (long sample = 0; sample < max_samples && report.trials < trials; ++sample) {
    PadicElement u = RandomElement(field, rng);
    PadicElement fu = c.f().Evaluate(u);
    if (fu.IsZero()) continue;
    std::optional<PadicElement> v = SqrtFq(fu, rng);
    if (!v) continue;
    if (rng() & 1) v = -*v;
    bool poles = false;
    for (const auto& r : sig) poles |= r.den.Evaluate(u).IsZero();
    for (const auto& r : rho) poles |= r.den.Evaluate(u).IsZero();
    if (poles) continue;
    MumfordDivisor d = ScalarMul(c, l, DivisorFromPoint(c, {u, *v, false}));
    if (d.u.degree() != g) continue;
    ++report.trials;
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= g; ++i) {
      PadicElement s = sig[i - 1].Evaluate(u);
      PadicElement r = rho[i - 1].Evaluate(u) * *v;
      if (!(d.u[g - i] == s) || !(d.v[g - i] == r)) {
        ok = false;
        detail = "u = " + u.ToString() + ", v = " + v->ToString() + ": [" +
                 std::to_string(l) + "](Q - inf) = " + d.ToString() +
                 ", component " + std::to_string(i) + " predicts U coefficient " +
                 s.ToString() + " and V coefficient " + r.ToString();
        break;
      }
    }
    if (ok) {
      ++report.passed;
    } else {
      ++report.failed;
      if (report.first_counterexample.empty()) report.first_counterexample = detail;
    }
  }
  return report;
}

}  // namespace padiff
