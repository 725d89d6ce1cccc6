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

#include "padiff/series_linalg.h"

#include <algorithm>
#include <string>
#include <utility>

#include "padiff/errors.h"

namespace padiff {

SeriesVector::SeriesVector(ContextPtr ctx, size_t g, size_t order)
    : ctx_(ctx), order_(order), v_(g, Series(ctx, order)) {}

SeriesVector::SeriesVector(std::vector<Series> entries) : v_(std::move(entries)) {
  if (v_.empty()) return;
  ctx_ = v_[0].context();
  order_ = v_[0].order();
  for (const auto& s : v_) {
    CheckSameRing(*ctx_, *s.context());
    if (s.order() != order_) throw InvalidArgumentError("vector entries differ in order");
  }
}

void SeriesVector::CheckShape(const SeriesVector& o) const {
  if (dim() != o.dim()) throw InvalidArgumentError("vector dimension mismatch");
}

SeriesVector SeriesVector::Resize(size_t order) const {
  std::vector<Series> out;
  for (const auto& s : v_) out.push_back(s.Resize(order));
  SeriesVector r(std::move(out));
  r.ctx_ = ctx_;
  r.order_ = order;
  return r;
}

SeriesVector SeriesVector::operator+(const SeriesVector& o) const {
  CheckShape(o);
  std::vector<Series> out;
  for (size_t i = 0; i < dim(); ++i) out.push_back(v_[i] + o.v_[i]);
  return SeriesVector(std::move(out));
}

SeriesVector SeriesVector::operator-(const SeriesVector& o) const {
  CheckShape(o);
  std::vector<Series> out;
  for (size_t i = 0; i < dim(); ++i) out.push_back(v_[i] - o.v_[i]);
  return SeriesVector(std::move(out));
}

bool SeriesVector::operator==(const SeriesVector& o) const {
  if (dim() != o.dim()) return false;
  for (size_t i = 0; i < dim(); ++i)
    if (!(v_[i] == o.v_[i])) return false;
  return true;
}

SeriesVector SeriesVector::Derivative() const {
  std::vector<Series> out;
  for (const auto& s : v_) out.push_back(s.Derivative());
  return SeriesVector(std::move(out));
}

SeriesVector SeriesVector::Integrate() const {
  std::vector<Series> out;
  for (const auto& s : v_) out.push_back(s.Integrate());
  return SeriesVector(std::move(out));
}

SeriesVector SeriesVector::ReduceLift(int target_precision) const {
  std::vector<Series> out;
  for (const auto& s : v_) out.push_back(s.ReduceLift(target_precision));
  return SeriesVector(std::move(out));
}

// ---------------------------------------------------------------------------

SeriesMatrix::SeriesMatrix(ContextPtr ctx, size_t g, size_t order)
    : ctx_(ctx), g_(g), order_(order), e_(g * g, Series(ctx, order)) {}

SeriesMatrix SeriesMatrix::Identity(ContextPtr ctx, size_t g, size_t order) {
  SeriesMatrix m(ctx, g, order);
  if (order == 0) return m;
  for (size_t i = 0; i < g; ++i) m(i, i).Set(0, PadicElement(ctx, 1));
  return m;
}

SeriesMatrix SeriesMatrix::FromConstants(
    const std::vector<std::vector<PadicElement>>& rows, size_t order) {
  const size_t g = rows.size();
  if (g == 0) throw InvalidArgumentError("empty matrix");
  SeriesMatrix m(rows[0][0].context(), g, order);
  for (size_t i = 0; i < g; ++i) {
    if (rows[i].size() != g) throw InvalidArgumentError("matrix is not square");
    for (size_t j = 0; j < g; ++j) m(i, j) = Series::Constant(rows[i][j], order);
  }
  return m;
}

void SeriesMatrix::CheckShape(size_t g, const ContextPtr& ctx) const {
  if (g != g_) throw InvalidArgumentError("matrix dimension mismatch");
  CheckSameRing(*ctx_, *ctx);
}

SeriesMatrix SeriesMatrix::Resize(size_t order) const {
  SeriesMatrix r(ctx_, g_, order);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].Resize(order);
  return r;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
  CheckShape(o.g_, o.ctx_);
  SeriesMatrix r(ctx_, g_, std::min(order_, o.order_));
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
  CheckShape(o.g_, o.ctx_);
  SeriesMatrix r(ctx_, g_, std::min(order_, o.order_));
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
  CheckShape(o.g_, o.ctx_);
  const size_t n = std::min(order_, o.order_);
  SeriesMatrix r(ctx_, g_, n);
  for (size_t i = 0; i < g_; ++i) {
    for (size_t j = 0; j < g_; ++j) {
      Series acc(ctx_, n);
      for (size_t k = 0; k < g_; ++k) acc += (*this)(i, k) * o(k, j);
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

SeriesVector SeriesMatrix::operator*(const SeriesVector& v) const {
  CheckShape(v.dim(), v.context());
  const size_t n = std::min(order_, v.order());
  std::vector<Series> out;
  for (size_t i = 0; i < g_; ++i) {
    Series acc(ctx_, n);
    for (size_t k = 0; k < g_; ++k) acc += (*this)(i, k) * v[k];
    out.push_back(std::move(acc));
  }
  return SeriesVector(std::move(out));
}

SeriesMatrix SeriesMatrix::Scale(const PadicElement& c) const {
  SeriesMatrix r(ctx_, g_, order_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].Scale(c);
  return r;
}

bool SeriesMatrix::operator==(const SeriesMatrix& o) const {
  if (g_ != o.g_ || order_ != o.order_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

SeriesMatrix GaussJordanInverse(const SeriesMatrix& a, GaussJordanStats* stats) {
  const size_t g = a.dim();
  const ContextPtr& ctx = a.context();
  if (a.order() == 0) throw InvalidArgumentError("matrix has no constant term");
  std::vector<std::vector<PadicElement>> m(g), inv(g);
  for (size_t i = 0; i < g; ++i) {
    for (size_t j = 0; j < g; ++j) {
      m[i].push_back(a.Head(i, j));
      inv[i].push_back(PadicElement(ctx, i == j ? 1 : 0));
    }
  }
  for (size_t c = 0; c < g; ++c) {
    size_t piv = g;
    for (size_t r = c; r < g; ++r) {
      if (m[r][c].IsUnit()) {
        piv = r;
        break;
      }
    }
    if (piv == g) {
      throw NotInvertibleError("no unit pivot in column " + std::to_string(c));
    }
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    if (stats) {
      ++stats->pivots;
      if (!m[c][c].IsUnit()) ++stats->non_unit_pivots;
    }
    PadicElement s = m[c][c].Inverse();
    for (size_t j = 0; j < g; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (size_t r = 0; r < g; ++r) {
      if (r == c || m[r][c].IsZero()) continue;
      PadicElement f = m[r][c];
      for (size_t j = 0; j < g; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return SeriesMatrix::FromConstants(inv, 1);
}

SeriesMatrix InverseNewtonStep(const SeriesMatrix& hm, const SeriesMatrix& a,
                               size_t m) {
  const size_t n = m + 1;
  SeriesMatrix h = hm.Resize(n);
  SeriesMatrix t = h * a.Resize(n) * h;
  return h.Scale(PadicElement(h.context(), 2)) - t;
}

}  // namespace padiff
