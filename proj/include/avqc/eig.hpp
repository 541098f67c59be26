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

#ifndef AVQC_EIG_HPP
#define AVQC_EIG_HPP

#include <vector>

#include "avqc/matrix.hpp"

namespace avqc {

struct EigResult {
  std::vector<double> values;  // descending
  CMat vectors;                // unitary, columns matched to values
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.
/// Throws on non-square input or when ||M - M†||_F exceeds herm_tol
/// relative to the scale of M. The strictly Hermitian part is diagonalized.
EigResult hermitian_eig(const CMat& m, double herm_tol = 1e-9);

/// Nearest PSD matrix in Frobenius norm: negative eigenvalues clipped.
CMat psd_project(const CMat& h);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMat& h);

/// Cholesky factorization M = L L† for Hermitian positive definite M.
/// Returns false (leaving l unspecified) if a pivot drops below eps.
bool cholesky(const CMat& m, CMat& l, double eps = 0.0);

/// log det M from a Cholesky factor.
double cholesky_logdet(const CMat& l);

/// Solve L L† X = B in place given the Cholesky factor L.
CMat cholesky_solve(const CMat& l, const CMat& b);

}  // namespace avqc

#endif  // AVQC_EIG_HPP
