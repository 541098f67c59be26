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

#ifndef AVQC_KERNELS_HPP
#define AVQC_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <string>

namespace avqc::kern {

using cplx = std::complex<double>;

// Hot inner loops of the dense complex linear algebra layer. Every entry
// point below is a function pointer bound at startup to either the scalar
// reference kernel or the AVX2 variant, depending on what the CPU supports
// (and on the AVQC_NO_SIMD environment variable, which forces scalar mode).
//
// All matrices are row-major and unaliased.

// y[i] += a * x[i]
extern void (*caxpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
// sum_i conj(x[i]) * y[i]
extern cplx (*cdotc)(std::size_t n, const cplx* x, const cplx* y);
// sum_i |x[i]|^2
extern double (*csumsq)(std::size_t n, const cplx* x);
// C (m x n) += A (m x k) * B (k x n)
extern void (*cgemm_acc)(std::size_t m, std::size_t k, std::size_t n,
                         const cplx* A, const cplx* B, cplx* C);
// y[i] += a * x[i] for doubles (simplex pivot rows)
extern void (*daxpy)(std::size_t n, double a, const double* x, double* y);

// Name of the active kernel set: "scalar" or "avx2".
const std::string& active_kernels();

namespace scalar {
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y);
cplx cdotc(std::size_t n, const cplx* x, const cplx* y);
double csumsq(std::size_t n, const cplx* x);
void cgemm_acc(std::size_t m, std::size_t k, std::size_t n, const cplx* A,
               const cplx* B, cplx* C);
void daxpy(std::size_t n, double a, const double* x, double* y);
}  // namespace scalar

#ifdef AVQC_HAVE_AVX2
namespace avx2 {
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y);
cplx cdotc(std::size_t n, const cplx* x, const cplx* y);
double csumsq(std::size_t n, const cplx* x);
void cgemm_acc(std::size_t m, std::size_t k, std::size_t n, const cplx* A,
               const cplx* B, cplx* C);
void daxpy(std::size_t n, double a, const double* x, double* y);
}  // namespace avx2
#endif

}  // namespace avqc::kern

#endif  // AVQC_KERNELS_HPP
