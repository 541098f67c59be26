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

#include "avqc/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "avqc/kernels.hpp"

namespace avqc {

CMat& CMat::operator+=(const CMat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +=");
  kern::caxpy(a_.size(), 1.0, o.a_.data(), a_.data());
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -=");
  kern::caxpy(a_.size(), -1.0, o.a_.data(), a_.data());
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

CMat CMat::dagger() const {
  CMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

CMat CMat::transpose() const {
  CMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CMat CMat::conjugate() const {
  CMat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
  return r;
}

cplx CMat::trace() const {
  require(square(), "trace of non-square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::frobenius() const { return std::sqrt(kern::csumsq(a_.size(), a_.data())); }

double CMat::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }

CMat operator*(const CMat& a, const CMat& b) {
  require(a.cols() == b.rows(), "matrix shape mismatch in product");
  CMat c(a.rows(), b.cols());
  kern::cgemm_acc(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
  return c;
}

CMat operator*(cplx s, CMat a) { return a *= s; }

CMat tensor(const CMat& a, const CMat& b) {
  CMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

CMat partial_trace(const CMat& m, std::size_t dim_a, std::size_t dim_b,
                   bool keep_first) {
  require(m.square() && m.rows() == dim_a * dim_b,
          "partial_trace: dimension does not factor as dimA*dimB");
  if (keep_first) {
    CMat r(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_a; ++j) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < dim_b; ++k)
          s += m(i * dim_b + k, j * dim_b + k);
        r(i, j) = s;
      }
    return r;
  }
  CMat r(dim_b, dim_b);
  for (std::size_t k = 0; k < dim_b; ++k)
    for (std::size_t l = 0; l < dim_b; ++l) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < dim_a; ++i)
        s += m(i * dim_b + k, i * dim_b + l);
      r(k, l) = s;
    }
  return r;
}

CMat partial_trace_multi(const CMat& m, std::size_t d, std::size_t l,
                         const std::vector<std::size_t>& keep) {
  std::size_t full = 1;
  for (std::size_t i = 0; i < l; ++i) full *= d;
  require(m.square() && m.rows() == full, "partial_trace_multi: bad dims");
  std::vector<bool> keep_mask(l, false);
  for (auto k : keep) {
    require(k < l, "partial_trace_multi: factor index out of range");
    keep_mask[k] = true;
  }
  std::size_t dk = 1;
  for (auto b : keep_mask)
    if (b) dk *= d;
  std::size_t dt = full / dk;

  // Row index i of m decomposes into l digits base d; kept digits form the
  // row index of the result, traced digits must match between row and column.
  auto split = [&](std::size_t idx, std::size_t& kept, std::size_t& traced) {
    kept = 0;
    traced = 0;
    for (std::size_t f = 0; f < l; ++f) {
      std::size_t digit = idx;
      for (std::size_t g = f + 1; g < l; ++g) digit /= d;
      digit %= d;
      if (keep_mask[f])
        kept = kept * d + digit;
      else
        traced = traced * d + digit;
    }
  };

  std::vector<std::size_t> kept_of(full), traced_of(full);
  for (std::size_t i = 0; i < full; ++i) split(i, kept_of[i], traced_of[i]);

  CMat r(dk, dk);
  for (std::size_t i = 0; i < full; ++i)
    for (std::size_t j = 0; j < full; ++j)
      if (traced_of[i] == traced_of[j]) r(kept_of[i], kept_of[j]) += m(i, j);
  (void)dt;
  return r;
}

cplx hs_inner(const CMat& a, const CMat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "hs_inner: shape mismatch");
  return kern::cdotc(a.size(), a.data(), b.data());
}

double hermiticity_defect(const CMat& m) {
  if (!m.square()) return 1.0 / 0.0;
  return (m - m.dagger()).frobenius();
}

CMat hermitian_part(const CMat& m) {
  CMat h = m + m.dagger();
  h *= 0.5;
  return h;
}

std::vector<CMat> hermitian_basis(std::size_t d) {
  std::vector<CMat> basis;
  basis.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    CMat e(d, d);
    e(i, i) = 1.0;
    basis.push_back(e);
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      CMat x(d, d), y(d, d);
      x(i, j) = inv_sqrt2;
      x(j, i) = inv_sqrt2;
      y(i, j) = cplx(0.0, inv_sqrt2);
      y(j, i) = cplx(0.0, -inv_sqrt2);
      basis.push_back(x);
      basis.push_back(y);
    }
  return basis;
}

CMat omega_vector(std::size_t d) {
  CMat v(d * d, 1);
  for (std::size_t i = 0; i < d; ++i) v(i * d + i, 0) = 1.0;
  return v;
}

}  // namespace avqc
