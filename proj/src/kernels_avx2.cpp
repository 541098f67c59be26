// Copyright 2026 The avqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2/FMA kernels. This file is the only one compiled with -mavx2; callers
// reach it through the dispatch table, never directly, so the binary still
// runs on plain x86-64.

#include "avqc/kernels.hpp"

#ifdef AVQC_HAVE_AVX2

#include <immintrin.h>

namespace avqc::kern::avx2 {

namespace {

// Complex multiply-accumulate on two packed complex doubles:
// acc += (ar + i*ai) * b, with b = [br0, bi0, br1, bi1].
inline __m256d cmadd(__m256d ar, __m256d ai, __m256d b, __m256d acc) {
  __m256d bswap = _mm256_permute_pd(b, 0b0101);  // [bi0, br0, bi1, br1]
  __m256d t = _mm256_mul_pd(ai, bswap);          // [ai*bi, ai*br, ...]
  // even lanes: ar*br - ai*bi, odd lanes: ar*bi + ai*br
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, b, t));
}

}  // namespace

void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(yp + 2 * i, cmadd(ar, ai, xv, yv));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

cplx cdotc(std::size_t n, const cplx* x, const cplx* y) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d re = _mm256_setzero_pd();  // lanes sum to Re
  __m256d im = _mm256_setzero_pd();  // even-odd lane difference gives Im
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    __m256d yswap = _mm256_permute_pd(yv, 0b0101);
    re = _mm256_fmadd_pd(xv, yv, re);     // xr*yr, xi*yi
    im = _mm256_fmadd_pd(xv, yswap, im);  // xr*yi, xi*yr
  }
  alignas(32) double rbuf[4], ibuf[4];
  _mm256_store_pd(rbuf, re);
  _mm256_store_pd(ibuf, im);
  double racc = rbuf[0] + rbuf[1] + rbuf[2] + rbuf[3];
  double iacc = ibuf[0] - ibuf[1] + ibuf[2] - ibuf[3];
  for (; i < n; ++i) {
    racc += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    iacc += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {racc, iacc};
}

double csumsq(std::size_t n, const cplx* x) {
  const double* xp = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double buf[4];
  _mm256_store_pd(buf, acc);
  double s = buf[0] + buf[1] + buf[2] + buf[3];
  for (; i < n; ++i)
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

void cgemm_acc(std::size_t m, std::size_t k, std::size_t n, const cplx* A,
               const cplx* B, cplx* C) {
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = A + i * k;
    double* crow = reinterpret_cast<double*>(C + i * n);
    for (std::size_t p = 0; p < k; ++p) {
      const cplx a = arow[p];
      if (a.real() == 0.0 && a.imag() == 0.0) continue;
      const double* brow = reinterpret_cast<const double*>(B + p * n);
      const __m256d ar = _mm256_set1_pd(a.real());
      const __m256d ai = _mm256_set1_pd(a.imag());
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, cmadd(ar, ai, bv, cv));
      }
      for (; j < n; ++j) {
        cplx* cj = C + i * n + j;
        *cj += a * (B + p * n)[j];
      }
    }
  }
}

void daxpy(std::size_t n, double a, const double* x, double* y) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, xv, yv));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

}  // namespace avqc::kern::avx2

#endif  // AVQC_HAVE_AVX2
