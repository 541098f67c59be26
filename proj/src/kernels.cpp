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

#include "avqc/kernels.hpp"

#include <cstdlib>

namespace avqc::kern {

namespace scalar {

void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

cplx cdotc(std::size_t n, const cplx* x, const cplx* y) {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double csumsq(std::size_t n, const cplx* x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return acc;
}

void cgemm_acc(std::size_t m, std::size_t k, std::size_t n, const cplx* A,
               const cplx* B, cplx* C) {
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = A + i * k;
    cplx* crow = C + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx a = arow[p];
      if (a == cplx(0.0, 0.0)) continue;
      const cplx* brow = B + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += a * brow[j];
    }
  }
}

void daxpy(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

}  // namespace scalar

namespace {

struct Dispatch {
  decltype(&scalar::caxpy) caxpy = &scalar::caxpy;
  decltype(&scalar::cdotc) cdotc = &scalar::cdotc;
  decltype(&scalar::csumsq) csumsq = &scalar::csumsq;
  decltype(&scalar::cgemm_acc) cgemm_acc = &scalar::cgemm_acc;
  decltype(&scalar::daxpy) daxpy = &scalar::daxpy;
  std::string name = "scalar";
};

Dispatch pick_kernels() {
  Dispatch d;
#ifdef AVQC_HAVE_AVX2
  const char* off = std::getenv("AVQC_NO_SIMD");
  const bool forced_off = off != nullptr && off[0] != '\0' && off[0] != '0';
  if (!forced_off && __builtin_cpu_supports("avx2") &&
      __builtin_cpu_supports("fma")) {
    d.caxpy = &avx2::caxpy;
    d.cdotc = &avx2::cdotc;
    d.csumsq = &avx2::csumsq;
    d.cgemm_acc = &avx2::cgemm_acc;
    d.daxpy = &avx2::daxpy;
    d.name = "avx2";
  }
#endif
  return d;
}

const Dispatch g_dispatch = pick_kernels();

}  // namespace

void (*caxpy)(std::size_t, cplx, const cplx*, cplx*) = g_dispatch.caxpy;
cplx (*cdotc)(std::size_t, const cplx*, const cplx*) = g_dispatch.cdotc;
double (*csumsq)(std::size_t, const cplx*) = g_dispatch.csumsq;
void (*cgemm_acc)(std::size_t, std::size_t, std::size_t, const cplx*,
                  const cplx*, cplx*) = g_dispatch.cgemm_acc;
void (*daxpy)(std::size_t, double, const double*, double*) = g_dispatch.daxpy;

const std::string& active_kernels() { return g_dispatch.name; }

}  // namespace avqc::kern
