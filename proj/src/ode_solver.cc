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

#include "padiff/ode_solver.h"

#include <algorithm>
#include <string>
#include <utility>

#include "padiff/errors.h"
#include "padiff/finite_field.h"

namespace padiff {
namespace {

// Growing list of coefficients, each d digits, addressed by index.
class CoeffList {
 public:
  explicit CoeffList(size_t d) : d_(d) {}
  uint64_t* Push() {
    v_.resize(v_.size() + d_, 0);
    return v_.data() + v_.size() - d_;
  }
  const uint64_t* operator[](size_t k) const { return v_.data() + k * d_; }
  uint64_t* operator[](size_t k) { return v_.data() + k * d_; }
  size_t size() const { return v_.size() / d_; }

 private:
  size_t d_;
  std::vector<uint64_t> v_;
};

// out += sum_{i=lo..hi} a[i] * b[k-i]
void AccumulateConvolution(const PadicContext& ctx, const CoeffList& a,
                           const CoeffList& b, size_t lo, size_t hi, size_t k,
                           uint64_t* out, uint64_t* tmp) {
  for (size_t i = lo; i <= hi; ++i) {
    ctx.ElemMul(a[i], b[k - i], tmp);
    ctx.ElemAdd(out, tmp, out);
  }
}

class GenericStream : public HStream {
 public:
  explicit GenericStream(const GenericSeriesH& h)
      : h_(h), ctx_(*h.context()), d_(ctx_.degree()) {
    const size_t g = h.dim();
    // Column j only involves powers of x_j.
    for (size_t j = 0; j < g; ++j) {
      int maxdeg = 0;
      for (size_t i = 0; i < g; ++i) maxdeg = std::max(maxdeg, h.polys()[i][j].degree());
      x_.emplace_back(d_);
      powers_.emplace_back(std::max(maxdeg, 1), CoeffList(d_));
    }
  }

  std::vector<uint64_t> Next(const std::vector<uint64_t>& xk) override {
    const size_t g = h_.dim();
    const size_t k = x_[0].size();
    std::vector<uint64_t> tmp(d_), acc(d_);
    for (size_t i = 0; i < g; ++i) {
      std::copy(xk.begin() + i * d_, xk.begin() + (i + 1) * d_, x_[i].Push());
      auto& pw = powers_[i];
      std::copy(xk.begin() + i * d_, xk.begin() + (i + 1) * d_, pw[0].Push());
      for (size_t e = 1; e < pw.size(); ++e) {
        uint64_t* dst = pw[e].Push();
        AccumulateConvolution(ctx_, x_[i], pw[e - 1], 0, k, k, dst, tmp.data());
      }
    }
    std::vector<uint64_t> out(g * g * d_, 0);
    for (size_t i = 0; i < g; ++i) {
      for (size_t j = 0; j < g; ++j) {
        const Poly& f = h_.polys()[i][j];
        uint64_t* dst = out.data() + (i * g + j) * d_;
        if (k == 0 && f.size() > 0) std::copy(f.at(0), f.at(0) + d_, dst);
        for (size_t e = 1; e < f.size(); ++e) {
          ctx_.ElemMul(f.at(e), powers_[j][e - 1][k], tmp.data());
          ctx_.ElemAdd(dst, tmp.data(), dst);
        }
      }
    }
    return out;
  }

 private:
  const GenericSeriesH& h_;
  const PadicContext& ctx_;
  size_t d_;
  std::vector<CoeffList> x_;
  std::vector<std::vector<CoeffList>> powers_;  // powers_[j][e-1] = x_j^e
};

class HyperellipticStream : public HStream {
 public:
  explicit HyperellipticStream(const HyperellipticH& h)
      : h_(h), ctx_(*h.context()), d_(ctx_.degree()) {
    const size_t g = h.dim();
    const size_t npow = std::max<size_t>(h.f().size(), g);
    for (size_t j = 0; j < g; ++j) {
      pw_.emplace_back(npow, CoeffList(d_));
      y_.emplace_back(d_);
      z_.emplace_back(d_);
      std::vector<uint64_t> inv(d_);
      ctx_.ElemAdd(h.y0()[j].data(), h.y0()[j].data(), inv.data());
      if (!ctx_.ElemInverse(inv.data(), inv.data())) {
        throw InvalidArgumentError("y(0) must be a unit and p odd");
      }
      inv2y0_.push_back(inv);
    }
  }

  std::vector<uint64_t> Next(const std::vector<uint64_t>& xk) override {
    const size_t g = h_.dim();
    const size_t k = y_[0].size();
    std::vector<uint64_t> tmp(d_), acc(d_);
    std::vector<uint64_t> out(g * g * d_, 0);
    for (size_t j = 0; j < g; ++j) {
      auto& pw = pw_[j];  // pw[e-1] = w^e, w = x0_j + x_j
      uint64_t* w = pw[0].Push();
      std::copy(xk.begin() + j * d_, xk.begin() + (j + 1) * d_, w);
      if (k == 0) ctx_.ElemAdd(w, h_.x0()[j].data(), w);
      for (size_t e = 1; e < pw.size(); ++e) {
        uint64_t* dst = pw[e].Push();
        AccumulateConvolution(ctx_, pw[0], pw[e - 1], 0, k, k, dst, tmp.data());
      }
      // F_k, coefficient k of f(w).
      std::fill(acc.begin(), acc.end(), 0);
      const Poly& f = h_.f();
      if (k == 0 && f.size() > 0) std::copy(f.at(0), f.at(0) + d_, acc.begin());
      for (size_t e = 1; e < f.size(); ++e) {
        ctx_.ElemMul(f.at(e), pw[e - 1][k], tmp.data());
        ctx_.ElemAdd(acc.data(), tmp.data(), acc.data());
      }
      uint64_t* yk = y_[j].Push();
      uint64_t* zk = z_[j].Push();
      if (k == 0) {
        std::copy(h_.y0()[j].data(), h_.y0()[j].data() + d_, yk);
        ctx_.ElemInverse(yk, zk);
      } else {
        // y_k = (F_k - sum_{i=1}^{k-1} y_i y_{k-i}) / (2 y_0)
        std::vector<uint64_t> s(d_, 0);
        if (k >= 2) AccumulateConvolution(ctx_, y_[j], y_[j], 1, k - 1, k, s.data(), tmp.data());
        ctx_.ElemSub(acc.data(), s.data(), acc.data());
        ctx_.ElemMul(acc.data(), inv2y0_[j].data(), yk);
        // z_k = -z_0 sum_{i=1}^{k} y_i z_{k-i}
        std::fill(s.begin(), s.end(), 0);
        AccumulateConvolution(ctx_, y_[j], z_[j], 1, k, k, s.data(), tmp.data());
        ctx_.ElemMul(s.data(), z_[j][0], tmp.data());
        ctx_.ElemNeg(tmp.data(), zk);
      }
      // Entry (i, j) = w^i z, coefficient k.
      for (size_t i = 0; i < g; ++i) {
        uint64_t* dst = out.data() + (i * g + j) * d_;
        if (i == 0) {
          std::copy(zk, zk + d_, dst);
        } else {
          AccumulateConvolution(ctx_, pw[i - 1], z_[j], 0, k, k, dst, tmp.data());
        }
      }
    }
    return out;
  }

 private:
  const HyperellipticH& h_;
  const PadicContext& ctx_;
  size_t d_;
  std::vector<std::vector<CoeffList>> pw_;
  std::vector<CoeffList> y_, z_;
  std::vector<std::vector<uint64_t>> inv2y0_;
};

}  // namespace

SeriesMatrix HEvaluator::Head() const {
  return Evaluate(SeriesVector(context(), dim(), 1));
}

GenericSeriesH::GenericSeriesH(std::vector<std::vector<Poly>> f) : f_(std::move(f)) {
  if (f_.empty()) throw InvalidArgumentError("empty H matrix");
  ctx_ = f_[0][0].context();
  for (const auto& row : f_) {
    if (row.size() != f_.size()) throw InvalidArgumentError("H matrix is not square");
    for (const auto& p : row) CheckSameRing(*ctx_, *p.context());
  }
}

SeriesMatrix GenericSeriesH::Evaluate(const SeriesVector& x) const {
  const size_t g = dim();
  if (x.dim() != g) throw InvalidArgumentError("X has the wrong dimension");
  SeriesMatrix h(ctx_, g, x.order());
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < g; ++j) h(i, j) = f_[i][j].EvaluateSeries(x[j]);
  return h;
}

std::unique_ptr<HStream> GenericSeriesH::Stream() const {
  return std::make_unique<GenericStream>(*this);
}

HyperellipticH::HyperellipticH(Poly f, std::vector<PadicElement> x0,
                               std::vector<PadicElement> y0)
    : f_(std::move(f)), x0_(std::move(x0)), y0_(std::move(y0)) {
  ctx_ = f_.context();
  if (x0_.empty() || x0_.size() != y0_.size()) {
    throw InvalidArgumentError("need g initial abscissae and ordinates");
  }
  for (size_t j = 0; j < x0_.size(); ++j) {
    CheckSameRing(*ctx_, *x0_[j].context());
    CheckSameRing(*ctx_, *y0_[j].context());
    if (!(y0_[j] * y0_[j] == f_.Evaluate(x0_[j]))) {
      throw InvalidArgumentError("initial point " + std::to_string(j) +
                                 " is not on the curve");
    }
  }
}

std::vector<Series> HyperellipticH::YSeries(const SeriesVector& x) const {
  std::vector<Series> ys;
  for (size_t j = 0; j < dim(); ++j) {
    Series w = x[j];
    if (w.order() > 0) ctx_->ElemAdd(w.at(0), x0_[j].data(), w.at(0));
    ys.push_back(f_.EvaluateSeries(w).Sqrt(y0_[j]));
  }
  return ys;
}

SeriesMatrix HyperellipticH::Evaluate(const SeriesVector& x) const {
  const size_t g = dim();
  if (x.dim() != g) throw InvalidArgumentError("X has the wrong dimension");
  SeriesMatrix h(ctx_, g, x.order());
  if (x.order() == 0) return h;
  std::vector<Series> ys = YSeries(x);
  for (size_t j = 0; j < g; ++j) {
    Series w = x[j];
    ctx_->ElemAdd(w.at(0), x0_[j].data(), w.at(0));
    Series col = ys[j].Inverse();
    for (size_t i = 0; i < g; ++i) {
      h(i, j) = col;
      if (i + 1 < g) col = col * w;
    }
  }
  return h;
}

std::unique_ptr<HStream> HyperellipticH::Stream() const {
  return std::make_unique<HyperellipticStream>(*this);
}

int RequiredPrecision(uint64_t p, int N, size_t n) {
  int lg = 0;
  unsigned __int128 pw = p;
  while (pw <= n) {
    ++lg;
    pw *= p;
  }
  if (p == 2) return std::max(N, 3) + lg;
  if (p == 3) return std::max(N, 2) + lg;
  return N + lg;
}

namespace {

void CheckProblem(const OdeProblem& prob) {
  if (!prob.H) throw InvalidArgumentError("problem has no H evaluator");
  if (prob.G.dim() != prob.H->dim()) throw InvalidArgumentError("G and H differ in dimension");
  if (prob.G.order() < prob.n) {
    throw InvalidArgumentError("G is known only modulo t^" +
                               std::to_string(prob.G.order()) + ", need t^" +
                               std::to_string(prob.n));
  }
  CheckSameRing(*prob.G.context(), *prob.H->context());
}

DiffSolveResult SolveRec(const OdeProblem& prob, size_t n) {
  const HEvaluator& h = *prob.H;
  const ContextPtr& ctx = h.context();
  const size_t g = h.dim();
  if (n == 0) {
    return {SeriesVector(ctx, g, 1), GaussJordanInverse(h.Head())};
  }
  const size_t m = n / 2;  // ceil((n-1)/2)
  DiffSolveResult half = SolveRec(prob, m);
  SeriesMatrix hx = h.Evaluate(half.X.Resize(n));
  SeriesMatrix hn = InverseNewtonStep(half.Hinv, hx, m);
  SeriesVector e = prob.G.Resize(n) - hx * half.X.Derivative().Resize(n);
  SeriesVector corr = hn.Resize(n + 1) * e.Integrate();
  return {half.X.Resize(n + 1) + corr, std::move(hn)};
}

}  // namespace

DiffSolveResult DiffSolve(const OdeProblem& prob) {
  CheckProblem(prob);
  return SolveRec(prob, prob.n);
}

SeriesVector NaiveSolve(const OdeProblem& prob) {
  CheckProblem(prob);
  const HEvaluator& h = *prob.H;
  const ContextPtr& ctx = h.context();
  const PadicContext& c = *ctx;
  const size_t g = h.dim(), d = c.degree(), n = prob.n;
  std::unique_ptr<HStream> stream = h.Stream();

  std::vector<std::vector<uint64_t>> hc;  // hc[k]: coefficient k of H(X)
  std::vector<uint64_t> xk(g * d, 0);
  hc.push_back(stream->Next(xk));
  std::vector<std::vector<PadicElement>> h0(g);
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < g; ++j)
      h0[i].push_back(PadicElement::FromDigits(ctx, hc[0].data() + (i * g + j) * d));
  SeriesMatrix h0inv = GaussJordanInverse(SeriesMatrix::FromConstants(h0, 1));

  SeriesVector x(ctx, g, n + 1);
  std::vector<std::vector<uint64_t>> s;  // s[k]: coefficient k of X'
  std::vector<uint64_t> tmp(d), den(d, 0);
  for (size_t k = 0; k < n; ++k) {
    std::vector<uint64_t> rhs(g * d);
    for (size_t i = 0; i < g; ++i)
      std::copy(prob.G[i].at(k), prob.G[i].at(k) + d, rhs.begin() + i * d);
    for (size_t j = 1; j <= k; ++j) {
      const auto& hj = hc[j];
      const auto& sk = s[k - j];
      for (size_t i = 0; i < g; ++i) {
        for (size_t l = 0; l < g; ++l) {
          c.ElemMul(hj.data() + (i * g + l) * d, sk.data() + l * d, tmp.data());
          c.ElemSub(rhs.data() + i * d, tmp.data(), rhs.data() + i * d);
        }
      }
    }
    std::vector<uint64_t> sk(g * d, 0);
    for (size_t i = 0; i < g; ++i) {
      for (size_t l = 0; l < g; ++l) {
        c.ElemMul(h0inv(i, l).at(0), rhs.data() + l * d, tmp.data());
        c.ElemAdd(sk.data() + i * d, tmp.data(), sk.data() + i * d);
      }
    }
    den[0] = (k + 1) % c.pm();
    for (size_t i = 0; i < g; ++i) {
      c.ElemDiv(sk.data() + i * d, den.data(), x[i].at(k + 1));
      std::copy(x[i].at(k + 1), x[i].at(k + 1) + d, xk.begin() + i * d);
    }
    s.push_back(std::move(sk));
    if (k + 1 < n) hc.push_back(stream->Next(xk));
  }
  return x;
}

PlantedProblem RandomPlantedProblem(const ContextPtr& ctx, size_t g, size_t n,
                                    int degree, std::mt19937_64& rng) {
  if (g == 0 || n == 0) throw InvalidArgumentError("need g >= 1 and n >= 1");
  auto random_poly = [&] {
    std::vector<PadicElement> c;
    for (int k = 0; k <= degree; ++k) c.push_back(RandomElement(ctx, rng));
    return Poly::FromElements(ctx, c);
  };
  std::vector<std::vector<Poly>> f(g, std::vector<Poly>(g));
  while (true) {
    for (auto& row : f)
      for (auto& e : row) e = random_poly();
    try {
      GaussJordanInverse(GenericSeriesH(f).Head());
      break;
    } catch (const NotInvertibleError&) {
    }
  }
  PlantedProblem out;
  auto h = std::make_shared<GenericSeriesH>(std::move(f));
  out.solution = SeriesVector(ctx, g, n + 1);
  for (size_t i = 0; i < g; ++i) {
    std::vector<PadicElement> c{PadicElement(ctx)};
    for (size_t k = 1; k <= n; ++k) c.push_back(RandomElement(ctx, rng));
    out.solution[i] = Series::FromElements(ctx, c);
  }
  SeriesVector dx = out.solution.Derivative();
  out.problem.G = h->Evaluate(out.solution.Resize(n)) * dx;
  out.problem.H = std::move(h);
  out.problem.n = n;
  out.problem.N = ctx->precision();
  return out;
}

OdeProblem ReduceGenericProblem(const OdeProblem& prob, int precision) {
  auto generic = std::dynamic_pointer_cast<const GenericSeriesH>(prob.H);
  if (!generic) throw InvalidArgumentError("not a GenericSeriesH problem");
  std::vector<std::vector<Poly>> f = generic->polys();
  for (auto& row : f)
    for (auto& e : row) e = e.ReduceLift(precision);
  OdeProblem out;
  out.G = prob.G.ReduceLift(precision);
  out.H = std::make_shared<GenericSeriesH>(std::move(f));
  out.n = prob.n;
  out.N = std::min(prob.N, precision);
  return out;
}

}  // namespace padiff
