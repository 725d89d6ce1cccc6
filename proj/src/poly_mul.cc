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

#include "padiff/poly_mul.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "padiff/errors.h"

namespace padiff {

uint64_t PowMod(uint64_t a, uint64_t e, uint64_t q) {
  uint64_t r = 1 % q;
  a %= q;
  while (e > 0) {
    if (e & 1) r = MulMod(r, a, q);
    a = MulMod(a, a, q);
    e >>= 1;
  }
  return r;
}

namespace {

using u128 = unsigned __int128;

// Number of products of two residues below q that fit in a u128 sum.
uint64_t AccumulationBatch(uint64_t q) {
  u128 sq = static_cast<u128>(q - 1) * (q - 1);
  if (sq == 0) return UINT64_MAX;
  u128 lim = ~static_cast<u128>(0) / sq;
  return lim > UINT64_MAX ? UINT64_MAX : static_cast<uint64_t>(lim);
}

void Schoolbook(const uint64_t* a, size_t na, const uint64_t* b, size_t nb,
                uint64_t q, uint64_t* out) {
  const uint64_t batch = AccumulationBatch(q);
  const size_t nout = na + nb - 1;
  for (size_t k = 0; k < nout; ++k) {
    size_t lo = k >= nb ? k - nb + 1 : 0;
    size_t hi = std::min(k, na - 1);
    u128 acc = 0;
    uint64_t cnt = 0;
    for (size_t i = lo; i <= hi; ++i) {
      acc += static_cast<u128>(a[i]) * b[k - i];
      if (++cnt == batch) {
        acc %= q;
        cnt = 1;
      }
    }
    out[k] = static_cast<uint64_t>(acc % q);
  }
}

// out must hold 2n-1 entries; scratch is reused across recursion levels.
void KaratsubaEqual(const uint64_t* a, const uint64_t* b, size_t n, uint64_t q,
                    uint64_t* out) {
  if (n < kKaratsubaThreshold) {
    Schoolbook(a, n, b, n, q, out);
    return;
  }
  size_t h = n / 2;
  size_t hh = n - h;  // size of high halves, hh >= h
  std::vector<uint64_t> sa(hh), sb(hh), z0(2 * h - 1), z2(2 * hh - 1),
      z1(2 * hh - 1);
  for (size_t i = 0; i < hh; ++i) {
    sa[i] = i < h ? AddMod(a[i], a[h + i], q) : a[h + i];
    sb[i] = i < h ? AddMod(b[i], b[h + i], q) : b[h + i];
  }
  KaratsubaEqual(a, b, h, q, z0.data());
  KaratsubaEqual(a + h, b + h, hh, q, z2.data());
  KaratsubaEqual(sa.data(), sb.data(), hh, q, z1.data());
  for (size_t i = 0; i < z0.size(); ++i) z1[i] = SubMod(z1[i], z0[i], q);
  for (size_t i = 0; i < z2.size(); ++i) z1[i] = SubMod(z1[i], z2[i], q);
  std::fill(out, out + 2 * n - 1, 0);
  for (size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = z2[i];
  for (size_t i = 0; i < z1.size(); ++i)
    out[h + i] = AddMod(out[h + i], z1[i], q);
}

// Unbalanced operands are cut into chunks of the shorter length.
void Karatsuba(const uint64_t* a, size_t na, const uint64_t* b, size_t nb,
               uint64_t q, uint64_t* out) {
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  std::fill(out, out + na + nb - 1, 0);
  std::vector<uint64_t> chunk(nb), prod(2 * nb - 1);
  for (size_t off = 0; off < na; off += nb) {
    size_t len = std::min(nb, na - off);
    std::fill(chunk.begin(), chunk.end(), 0);
    std::copy(a + off, a + off + len, chunk.begin());
    KaratsubaEqual(chunk.data(), b, nb, q, prod.data());
    size_t used = len + nb - 1;
    for (size_t i = 0; i < used; ++i)
      out[off + i] = AddMod(out[off + i], prod[i], q);
  }
}

template <uint32_t P, uint32_t G>
struct NttPrime {
  static constexpr uint32_t kP = P;

  static uint32_t Pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    a %= P;
    while (e) {
      if (e & 1) r = r * a % P;
      a = a * a % P;
      e >>= 1;
    }
    return static_cast<uint32_t>(r);
  }

  static void Transform(std::vector<uint32_t>& v, bool inverse) {
    const size_t n = v.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
      size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(v[i], v[j]);
    }
    std::vector<uint32_t> w(n / 2 + 1);
    for (size_t len = 2; len <= n; len <<= 1) {
      uint64_t root = Pow(G, (P - 1) / len);
      if (inverse) root = Pow(root, P - 2);
      const size_t half = len / 2;
      w[0] = 1;
      for (size_t k = 1; k < half; ++k) w[k] = w[k - 1] * root % P;
      for (size_t i = 0; i < n; i += len) {
        for (size_t k = 0; k < half; ++k) {
          uint32_t x = v[i + k];
          uint32_t y = static_cast<uint32_t>(uint64_t{v[i + k + half]} * w[k] % P);
          uint32_t s = x + y;
          v[i + k] = s >= P ? s - P : s;
          v[i + k + half] = x >= y ? x - y : x + P - y;
        }
      }
    }
    if (inverse) {
      uint64_t ninv = Pow(n, P - 2);
      for (auto& x : v) x = static_cast<uint32_t>(x * ninv % P);
    }
  }

  static std::vector<uint32_t> Multiply(std::span<const uint64_t> a,
                                        std::span<const uint64_t> b) {
    size_t need = a.size() + b.size() - 1, n = 1;
    while (n < need) n <<= 1;
    std::vector<uint32_t> fa(n, 0), fb(n, 0);
    for (size_t i = 0; i < a.size(); ++i) fa[i] = static_cast<uint32_t>(a[i] % P);
    for (size_t i = 0; i < b.size(); ++i) fb[i] = static_cast<uint32_t>(b[i] % P);
    Transform(fa, false);
    Transform(fb, false);
    for (size_t i = 0; i < n; ++i)
      fa[i] = static_cast<uint32_t>(uint64_t{fa[i]} * fb[i] % P);
    Transform(fa, true);
    fa.resize(need);
    return fa;
  }
};

using P0 = NttPrime<998244353, 3>;
using P1 = NttPrime<167772161, 3>;
using P2 = NttPrime<469762049, 3>;
using P3 = NttPrime<754974721, 11>;
using P4 = NttPrime<1004535809, 3>;
constexpr std::array<uint64_t, 5> kPrimes = {P0::kP, P1::kP, P2::kP, P3::kP,
                                             P4::kP};
// Shortest supported transform length is limited by 1004535809 = 479*2^21+1.
constexpr size_t kMaxNttLength = size_t{1} << 21;

// Smallest prime count whose product exceeds the largest possible exact
// coefficient, or 0 if five primes are not enough.
int PrimesNeeded(uint64_t q, size_t shorter, size_t terms) {
  long double bound = std::log2(static_cast<long double>(shorter)) +
                      std::log2(static_cast<long double>(terms)) +
                      2 * std::log2(static_cast<long double>(q)) + 1.0L;
  long double have = 0;
  for (int k = 0; k < 5; ++k) {
    have += std::log2(static_cast<long double>(kPrimes[k]));
    if (have > bound) return k + 1;
  }
  return 0;
}

std::vector<uint64_t> NttMultiply(std::span<const uint64_t> a,
                                  std::span<const uint64_t> b, uint64_t q,
                                  int primes) {
  const size_t need = a.size() + b.size() - 1;
  std::array<std::vector<uint32_t>, 5> res;
  res[0] = P0::Multiply(a, b);
  if (primes > 1) res[1] = P1::Multiply(a, b);
  if (primes > 2) res[2] = P2::Multiply(a, b);
  if (primes > 3) res[3] = P3::Multiply(a, b);
  if (primes > 4) res[4] = P4::Multiply(a, b);

  // Garner: x = c0 + c1*P0 + c2*P0*P1 + ..., then reduce the mixed-radix
  // form modulo q.
  std::array<std::array<uint64_t, 5>, 5> prefix_mod{};  // prod_{j<i} Pj mod Pk
  std::array<uint64_t, 5> prefix_inv{}, prefix_q{};
  for (int i = 0; i < primes; ++i) {
    for (int k = 0; k < primes; ++k) {
      uint64_t v = 1;
      for (int j = 0; j < i; ++j) v = v * (kPrimes[j] % kPrimes[k]) % kPrimes[k];
      prefix_mod[i][k] = v;
    }
    prefix_inv[i] = PowMod(prefix_mod[i][i], kPrimes[i] - 2, kPrimes[i]);
    uint64_t vq = 1 % q;
    for (int j = 0; j < i; ++j) vq = MulMod(vq, kPrimes[j] % q, q);
    prefix_q[i] = vq;
  }
  std::vector<uint64_t> out(need);
  std::array<uint64_t, 5> c{};
  for (size_t t = 0; t < need; ++t) {
    uint64_t acc_q = 0;
    for (int i = 0; i < primes; ++i) {
      const uint64_t pi = kPrimes[i];
      uint64_t cur = 0;  // value of c0 + c1*P0 + ... mod pi
      for (int j = 0; j < i; ++j) cur = (cur + c[j] * prefix_mod[j][i]) % pi;
      uint64_t r = res[i][t];
      c[i] = (r + pi - cur) % pi * prefix_inv[i] % pi;
      acc_q = AddMod(acc_q, MulMod(c[i] % q, prefix_q[i], q), q);
    }
    out[t] = acc_q;
  }
  return out;
}

}  // namespace

std::vector<uint64_t> MulZq(std::span<const uint64_t> a,
                            std::span<const uint64_t> b, uint64_t q,
                            MulAlgorithm alg, size_t terms_per_coeff) {
  if (a.empty() || b.empty()) return {};
  const size_t shorter = std::min(a.size(), b.size());
  const size_t need = a.size() + b.size() - 1;
  int primes = PrimesNeeded(q, shorter, terms_per_coeff);
  bool ntt_ok = primes > 0 && need <= kMaxNttLength;
  if (alg == MulAlgorithm::kAuto) {
    if (shorter < kKaratsubaThreshold) {
      alg = MulAlgorithm::kSchoolbook;
    } else if (shorter >= kNttThreshold && ntt_ok) {
      alg = MulAlgorithm::kNtt;
    } else {
      alg = MulAlgorithm::kKaratsuba;
    }
  }
  if (alg == MulAlgorithm::kNtt && !ntt_ok) alg = MulAlgorithm::kKaratsuba;
  std::vector<uint64_t> out(need);
  switch (alg) {
    case MulAlgorithm::kSchoolbook:
      Schoolbook(a.data(), a.size(), b.data(), b.size(), q, out.data());
      break;
    case MulAlgorithm::kKaratsuba:
      Karatsuba(a.data(), a.size(), b.data(), b.size(), q, out.data());
      break;
    case MulAlgorithm::kNtt:
      out = NttMultiply(a, b, q, primes);
      break;
    case MulAlgorithm::kAuto:
      throw InternalError("unresolved multiplication algorithm");
  }
  return out;
}

}  // namespace padiff
