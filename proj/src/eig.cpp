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

#include "avqc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace avqc {

namespace {

double offdiag_sq(const CMat& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
  return 2.0 * s;
}

}  // namespace

EigResult hermitian_eig(const CMat& m, double herm_tol) {
  require(m.square(), "hermitian_eig: non-square input");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.frobenius());
  require(hermiticity_defect(m) <= herm_tol * scale,
          "hermitian_eig: input is not Hermitian within tolerance");

  CMat a = hermitian_part(m);
  CMat v = CMat::identity(n);

  // Stop near the double-precision rounding floor for this size.
  const double floor_off = std::max(1e-13, 4e-16 * static_cast<double>(n + 1)) * scale;
  const double stop = floor_off * floor_off;
  const int max_sweeps = 40;
  for (int sweep = 0; sweep < max_sweeps && offdiag_sq(a) > stop; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx g = a(p, q);
        const double ag = std::abs(g);
        if (ag <= 1e-300) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const cplx phase = g / ag;
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double tau = (alpha - beta) / (2.0 * ag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx spq = s * phase;         // U(p,q) = -s*phase
        const cplx sqp = s * std::conj(phase);  // U(q,p) = s*conj(phase)

        // A <- U† A U, columns then rows.
        for (std::size_t r = 0; r < n; ++r) {
          const cplx arp = a(r, p), arq = a(r, q);
          a(r, p) = arp * c + arq * sqp;
          a(r, q) = arq * c - arp * spq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const cplx apr = a(p, r), aqr = a(q, r);
          a(p, r) = apr * c + aqr * spq;
          a(q, r) = aqr * c - apr * sqp;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t r = 0; r < n; ++r) {
          const cplx vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp * c + vrq * sqp;
          v(r, q) = vrq * c - vrp * spq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigResult res;
  res.values.resize(n);
  res.vectors = CMat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    res.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) res.vectors(r, k) = v(r, order[k]);
  }
  return res;
}

CMat psd_project(const CMat& h) {
  EigResult e = hermitian_eig(h);
  const std::size_t n = h.rows();
  CMat r(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = e.values[k];
    if (lam <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r(i, j) += lam * e.vectors(i, k) * std::conj(e.vectors(j, k));
  }
  return r;
}

double min_eigenvalue(const CMat& h) {
  EigResult e = hermitian_eig(h);
  return e.values.back();
}

bool cholesky(const CMat& m, CMat& l, double eps) {
  const std::size_t n = m.rows();
  l = CMat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx diag = m(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * std::conj(l(j, k));
    const double dj = diag.real();
    if (!(dj > eps)) return false;
    const double ljj = std::sqrt(dj);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return true;
}

double cholesky_logdet(const CMat& l) {
  double s = 0.0;
  for (std::size_t i = 0; i < l.rows(); ++i) s += std::log(l(i, i).real());
  return 2.0 * s;
}

CMat cholesky_solve(const CMat& l, const CMat& b) {
  const std::size_t n = l.rows();
  CMat x = b;
  // forward: L y = b
  for (std::size_t c = 0; c < x.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = x(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x(k, c);
      x(i, c) = s / l(i, i).real();
    }
    // backward: L† x = y
    for (std::size_t ii = n; ii-- > 0;) {
      cplx s = x(ii, c);
      for (std::size_t k = ii + 1; k < n; ++k)
        s -= std::conj(l(k, ii)) * x(k, c);
      x(ii, c) = s / l(ii, ii).real();
    }
  }
  return x;
}

}  // namespace avqc
