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

#ifndef AVQC_LP_HPP
#define AVQC_LP_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace avqc {

enum class Verdict { Feasible, Infeasible, Undecided };

std::string to_string(Verdict v);

/// Feasibility problem: find x >= 0 with A x = b, where designated blocks of
/// consecutive variables each sum to one (probability simplices). The simplex
/// rows are appended internally.
struct LpProblem {
  std::size_t nvars = 0;
  std::vector<std::vector<double>> rows;  // equality lhs, dense, length nvars
  std::vector<double> rhs;
  std::vector<std::pair<std::size_t, std::size_t>> simplex_blocks;  // (start, len)
};

struct LpFeasibility {
  Verdict verdict = Verdict::Undecided;
  std::vector<double> witness;  // x, when Feasible
  std::vector<double> farkas;   // y over all rows (equalities then simplex rows)
  double residual = 0.0;        // max |Ax-b| of witness / Farkas margin
  std::string detail;
};

/// Two-phase dense simplex (phase 1 only), Bland's rule; deterministic
/// lowest-index tie-breaking. Infeasible outcomes carry a Farkas vector y
/// with yᵀA <= 0 componentwise and yᵀb > 0 which callers can re-verify by
/// direct sign evaluation.
LpFeasibility lp_feasibility(const LpProblem& p, double tol = 1e-9);

/// Independent witness re-verification: max equality residual and most
/// negative variable.
double lp_residual(const LpProblem& p, const std::vector<double>& x);

/// Independent certificate check: returns the margin
/// min(yᵀb, -max_j (yᵀA)_j); positive means the certificate is valid.
double lp_certificate_margin(const LpProblem& p, const std::vector<double>& y);

}  // namespace avqc

#endif  // AVQC_LP_HPP
