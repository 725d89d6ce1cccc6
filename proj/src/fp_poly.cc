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

#include "fp_poly.h"

#include <utility>

#include "padiff/poly_mul.h"

namespace padiff::fp {

void Trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec Mul(const Vec& a, const Vec& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec out = MulZq(a, b, p);
  Trim(out);
  return out;
}

Vec Rem(Vec a, const Vec& b, uint64_t p) {
  Trim(a);
  const size_t db = b.size() - 1;
  const uint64_t inv = padiff::PowMod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    uint64_t c = padiff::MulMod(a.back(), inv, p);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i <= db; ++i)
      a[shift + i] = SubMod(a[shift + i], padiff::MulMod(c, b[i], p), p);
    Trim(a);
  }
  return a;
}

Vec MulMod(const Vec& a, const Vec& b, const Vec& m, uint64_t p) {
  return Rem(Mul(a, b, p), m, p);
}

Vec PowMod(Vec base, uint64_t e, const Vec& m, uint64_t p) {
  Vec r = Rem(Vec{1}, m, p);
  base = Rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = MulMod(r, base, m, p);
    e >>= 1;
    if (e) base = MulMod(base, base, m, p);
  }
  return r;
}

Vec Gcd(Vec a, Vec b, uint64_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Vec r = Rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    uint64_t inv = padiff::PowMod(a.back(), p - 2, p);
    for (auto& c : a) c = padiff::MulMod(c, inv, p);
  }
  return a;
}

Vec InverseMod(const Vec& a, const Vec& m, uint64_t p) {
  // Extended Euclid tracking only the cofactor of a.
  Vec r0 = m, r1 = Rem(a, m, p);
  Vec s0, s1{1};
  Trim(r0);
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    Vec r = r0, q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    uint64_t inv = padiff::PowMod(r1.back(), p - 2, p);
    while (r.size() >= r1.size()) {
      uint64_t c = padiff::MulMod(r.back(), inv, p);
      size_t shift = r.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        r[shift + i] = SubMod(r[shift + i], padiff::MulMod(c, r1[i], p), p);
      Trim(r);
    }
    Vec qs = Mul(q, s1, p);
    Vec s2(std::max(s0.size(), qs.size()), 0);
    for (size_t i = 0; i < s2.size(); ++i) {
      uint64_t x = i < s0.size() ? s0[i] : 0;
      uint64_t y = i < qs.size() ? qs[i] : 0;
      s2[i] = SubMod(x, y, p);
    }
    Trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return {};
  uint64_t inv = padiff::PowMod(r0[0], p - 2, p);
  for (auto& c : s0) c = padiff::MulMod(c, inv, p);
  return Rem(s0, m, p);
}

bool IsIrreducible(const Vec& f, uint64_t p) {
  const uint64_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  auto frob_power = [&](uint64_t k) {
    Vec x{0, 1};
    for (uint64_t i = 0; i < k; ++i) x = PowMod(x, p, f, p);
    return x;
  };
  auto minus_x = [&](Vec v) {
    if (v.size() < 2) v.resize(2, 0);
    v[1] = SubMod(v[1], 1, p);
    Trim(v);
    return v;
  };
  if (!minus_x(frob_power(d)).empty()) return false;
  uint64_t rem = d;
  for (uint64_t r = 2; r <= rem; ++r) {
    if (rem % r) continue;
    while (rem % r == 0) rem /= r;
    Vec g = Gcd(f, minus_x(frob_power(d / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace padiff::fp
