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

#include "avqc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "avqc/kernels.hpp"

namespace avqc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Feasible:
      return "feasible";
    case Verdict::Infeasible:
      return "infeasible";
    default:
      return "undecided";
  }
}

namespace {

// Assembled standard-form system A x = b with b >= 0 (rows sign-flipped as
// needed; flips remembered so the Farkas vector can be mapped back).
struct Standard {
  std::size_t n = 0, m = 0;
  std::vector<double> a;  // m x n row-major
  std::vector<double> b;
  std::vector<double> flip;  // +1 / -1 per row
};

Standard assemble(const LpProblem& p) {
  Standard s;
  s.n = p.nvars;
  s.m = p.rows.size() + p.simplex_blocks.size();
  s.a.assign(s.m * s.n, 0.0);
  s.b.assign(s.m, 0.0);
  s.flip.assign(s.m, 1.0);
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    if (p.rows[r].size() != s.n)
      throw std::invalid_argument("lp_feasibility: row length mismatch");
    std::copy(p.rows[r].begin(), p.rows[r].end(), s.a.begin() + r * s.n);
    s.b[r] = p.rhs[r];
  }
  std::size_t r = p.rows.size();
  for (auto [start, len] : p.simplex_blocks) {
    if (start + len > s.n)
      throw std::invalid_argument("lp_feasibility: simplex block out of range");
    for (std::size_t j = 0; j < len; ++j) s.a[r * s.n + start + j] = 1.0;
    s.b[r] = 1.0;
    ++r;
  }
  for (std::size_t i = 0; i < s.m; ++i) {
    if (s.b[i] < 0.0) {
      s.flip[i] = -1.0;
      s.b[i] = -s.b[i];
      for (std::size_t j = 0; j < s.n; ++j) s.a[i * s.n + j] *= -1.0;
    }
  }
  return s;
}

}  // namespace

LpFeasibility lp_feasibility(const LpProblem& p, double tol) {
  LpFeasibility out;
  Standard sys = assemble(p);
  const std::size_t n = sys.n, m = sys.m;

  // Phase-1 tableau: columns = structural vars, artificials, rhs. Objective
  // row holds reduced costs of min(sum of artificials).
  const std::size_t width = n + m + 1;
  std::vector<double> t((m + 1) * width, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return t[i * width + j];
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = sys.a[i * n + j];
    at(i, n + i) = 1.0;
    at(i, n + m) = sys.b[i];
  }
  // objective row: z_j - c_j for the phase-1 costs (artificials cost 1)
  for (std::size_t j = 0; j < n + m + 1; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += at(i, j);
    at(m, j) = s;
  }
  for (std::size_t j = n; j < n + m; ++j) at(m, j) -= 1.0;

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  const double piv_eps = 1e-11;
  const std::size_t max_iters = 50000 + 200 * (n + m);
  bool optimal = false;
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    // Bland: entering = lowest-index column with positive reduced cost.
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (at(m, j) > piv_eps) {
        enter = j;
        break;
      }
    }
    if (enter == width) {
      optimal = true;
      break;
    }
    // ratio test, ties by lowest basis index
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double aij = at(i, enter);
      if (aij > piv_eps) {
        const double ratio = at(i, n + m) / aij;
        if (ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 &&
             (leave == m || basis[i] < basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave == m)
      throw std::runtime_error("lp_feasibility: phase-1 unbounded (ill-posed)");
    // pivot
    const double piv = at(leave, enter);
    for (std::size_t j = 0; j < width; ++j) at(leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = at(i, enter);
      if (f == 0.0) continue;
      kern::daxpy(width, -f, &t[leave * width], &t[i * width]);
      at(i, enter) = 0.0;
    }
    basis[leave] = enter;
  }

  if (!optimal)
    throw std::runtime_error("lp_feasibility: iteration budget exhausted");

  const double phase1 = at(m, n + m);  // value of sum of artificials (== z row rhs)
  if (phase1 > tol) {
    // Farkas vector from the optimal dual: y_i = (z-row at artificial col i)
    // ... shifted by cost 1, then mapped through the row sign flips.
    out.verdict = Verdict::Infeasible;
    out.farkas.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      out.farkas[i] = (at(m, n + i) + 1.0) * sys.flip[i];
    out.residual = phase1;
    out.detail = "phase-1 optimum " + std::to_string(phase1);
    return out;
  }

  out.verdict = Verdict::Feasible;
  out.witness.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) out.witness[basis[i]] = at(i, n + m);
  for (auto& x : out.witness)
    if (x < 0.0 && x > -1e-12) x = 0.0;
  out.residual = lp_residual(p, out.witness);
  return out;
}

double lp_residual(const LpProblem& p, const std::vector<double>& x) {
  double r = 0.0;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    double s = -p.rhs[i];
    for (std::size_t j = 0; j < p.nvars; ++j) s += p.rows[i][j] * x[j];
    r = std::max(r, std::abs(s));
  }
  for (auto [start, len] : p.simplex_blocks) {
    double s = -1.0;
    for (std::size_t j = 0; j < len; ++j) s += x[start + j];
    r = std::max(r, std::abs(s));
  }
  for (double v : x) r = std::max(r, -v);
  return r;
}

double lp_certificate_margin(const LpProblem& p, const std::vector<double>& y) {
  const std::size_t me = p.rows.size();
  double ytb = 0.0;
  for (std::size_t i = 0; i < me; ++i) ytb += y[i] * p.rhs[i];
  for (std::size_t k = 0; k < p.simplex_blocks.size(); ++k) ytb += y[me + k];
  double max_col = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < p.nvars; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < me; ++i) s += y[i] * p.rows[i][j];
    for (std::size_t k = 0; k < p.simplex_blocks.size(); ++k) {
      auto [start, len] = p.simplex_blocks[k];
      if (j >= start && j < start + len) s += y[me + k];
    }
    max_col = std::max(max_col, s);
  }
  return std::min(ytb, -max_col);
}

}  // namespace avqc
