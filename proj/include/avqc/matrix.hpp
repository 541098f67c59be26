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

#ifndef AVQC_MATRIX_HPP
#define AVQC_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace avqc {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Small dimensions (<= a few hundred);
/// everything is kept simple and value-semantic.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

  static CMat identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return a_.size(); }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s);

  CMat dagger() const;
  CMat transpose() const;
  CMat conjugate() const;

  cplx trace() const;
  double frobenius() const;
  double max_abs() const;

  bool operator==(const CMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(const CMat& a, const CMat& b);  // matrix product
CMat operator*(cplx s, CMat a);

/// Kronecker product, (A⊗B)((i,k),(j,l)) = A(i,j)·B(k,l).
CMat tensor(const CMat& a, const CMat& b);

/// Partial trace of M acting on A⊗B (dimA·dimB square). keep_first selects
/// whether the A factor (true) or the B factor (false) survives.
CMat partial_trace(const CMat& m, std::size_t dim_a, std::size_t dim_b,
                   bool keep_first);

/// Trace over one tensor factor of an l-fold product space of local dim d;
/// `keep` lists the factor indices that survive, in increasing order.
CMat partial_trace_multi(const CMat& m, std::size_t d, std::size_t l,
                         const std::vector<std::size_t>& keep);

/// Hilbert-Schmidt inner product <A,B> = tr(A† B).
cplx hs_inner(const CMat& a, const CMat& b);

double hermiticity_defect(const CMat& m);  // ||M - M†||_F
CMat hermitian_part(const CMat& m);        // (M + M†)/2

/// HS-orthonormal real basis of the Hermitian d x d matrices:
/// E_ii, (E_ij+E_ji)/√2, i(E_ij-E_ji)/√2. The identity direction is the
/// normalized sum of the first d elements. d² matrices in total.
std::vector<CMat> hermitian_basis(std::size_t d);

/// Unnormalized maximally entangled vector sum_i e_i ⊗ e_i as a d²x1 column.
CMat omega_vector(std::size_t d);

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace avqc

#endif  // AVQC_MATRIX_HPP
