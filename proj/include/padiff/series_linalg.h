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

#include <cstddef>
#include <vector>

#include "padiff/padic.h"
#include "padiff/series.h"

namespace padiff {

// g series sharing one context and order.
class SeriesVector {
 public:
  SeriesVector() = default;
  SeriesVector(ContextPtr ctx, size_t g, size_t order);
  explicit SeriesVector(std::vector<Series> entries);

  size_t dim() const { return v_.size(); }
  size_t order() const { return order_; }
  const ContextPtr& context() const { return ctx_; }
  Series& operator[](size_t i) { return v_[i]; }
  const Series& operator[](size_t i) const { return v_[i]; }

  SeriesVector Resize(size_t order) const;
  SeriesVector operator+(const SeriesVector& o) const;
  SeriesVector operator-(const SeriesVector& o) const;
  bool operator==(const SeriesVector& o) const;
  SeriesVector Derivative() const;
  SeriesVector Integrate() const;
  SeriesVector ReduceLift(int target_precision) const;

 private:
  void CheckShape(const SeriesVector& o) const;

  ContextPtr ctx_;
  size_t order_ = 0;
  std::vector<Series> v_;
};

// g x g matrix of series sharing one context and order.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(ContextPtr ctx, size_t g, size_t order);
  static SeriesMatrix Identity(ContextPtr ctx, size_t g, size_t order);
  static SeriesMatrix FromConstants(
      const std::vector<std::vector<PadicElement>>& rows, size_t order);

  size_t dim() const { return g_; }
  size_t order() const { return order_; }
  const ContextPtr& context() const { return ctx_; }
  Series& operator()(size_t i, size_t j) { return e_[i * g_ + j]; }
  const Series& operator()(size_t i, size_t j) const { return e_[i * g_ + j]; }
  PadicElement Head(size_t i, size_t j) const { return (*this)(i, j)[0]; }

  SeriesMatrix Resize(size_t order) const;
  SeriesMatrix operator+(const SeriesMatrix& o) const;
  SeriesMatrix operator-(const SeriesMatrix& o) const;
  SeriesMatrix operator*(const SeriesMatrix& o) const;
  SeriesVector operator*(const SeriesVector& v) const;
  SeriesMatrix Scale(const PadicElement& c) const;
  bool operator==(const SeriesMatrix& o) const;

 private:
  void CheckShape(size_t g, const ContextPtr& ctx) const;

  ContextPtr ctx_;
  size_t g_ = 0;
  size_t order_ = 0;
  std::vector<Series> e_;
};

struct GaussJordanStats {
  int pivots = 0;
  int non_unit_pivots = 0;
};

// Inverse of the constant term of `a` over O_K / p^M, returned at order 1.
// Pivots are the first unit entry in each column; throws NotInvertibleError
// when a column has none.
SeriesMatrix GaussJordanInverse(const SeriesMatrix& a,
                                GaussJordanStats* stats = nullptr);

// One doubling step H = 2 Hm - Hm A Hm mod t^(m+1), given Hm A = I modulo
// t^ceil((m+1)/2).
SeriesMatrix InverseNewtonStep(const SeriesMatrix& hm, const SeriesMatrix& a,
                               size_t m);

}  // namespace padiff
