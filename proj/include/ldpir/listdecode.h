// Copyright 2026 The ldpir Authors.
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

#pragma once

// Decoding core for order-1 multiplicity codes: interpolate a bivariate
// Q(x, y) = sum_s Q_s(x) y^s of bounded (1, wt)-weighted degree that vanishes
// to order two along every received sample, then extract every polynomial
// root y = g(x) with deg g <= wt.

#include <span>
#include <vector>

#include "ldpir/linalg.h"
#include "ldpir/poly.h"

namespace ldpir {

struct WeightedBivariate {
  int wt = 1;   // weight of y
  int D = 0;    // weighted-degree cap
  int rho = 0;  // floor(D / wt), the y-degree bound
  std::vector<Polynomial> q;  // q[s] is the coefficient of y^s

  const FieldModulus& modulus() const { return q.front().modulus(); }
  bool is_zero() const;
  // max_s deg(q_s) + s * wt, or Polynomial::kZeroDegree.
  int weighted_degree() const;
  FieldElement eval(const FieldElement& x, const FieldElement& y) const;
  // Q(x, g(x)) as a univariate polynomial.
  Polynomial substitute(const Polynomial& g) const;
};

struct Monomial {
  int x_exp;
  int y_exp;
};

// 2k x num system: row 2j is Q(lambda_j, alpha_j) = 0, row 2j+1 is the
// derivative companion Q_ext(lambda_j, alpha_j, beta_j) = 0. Columns run over
// y-degree s, then x-degree a <= D - s*wt.
struct ConstraintSystem {
  Matrix matrix;
  std::vector<Monomial> monomials;
};

// sum_{s=0}^{floor(D/wt)} (D - s*wt + 1).
int qbase_monomial_count(int D, int wt);

ConstraintSystem build_constraint_system(std::span<const HermiteSample> samples, int wt, int D);

// Throws InfeasibleParameters when the monomial count does not exceed 2k,
// DuplicatePoint on repeated points.
WeightedBivariate interpolate_qbase(std::span<const HermiteSample> samples, int wt, int D);

// sum_{s>=1} s Q_s(x) y^{s-1} z + sum_s Q_s'(x) y^s.
FieldElement qext_eval(const WeightedBivariate& q, const FieldElement& x, const FieldElement& y,
                       const FieldElement& z);

// Every g with deg g <= wt and Q(x, g(x)) = 0 identically, sorted and
// deduplicated. Roth-Ruckenstein recursion; `seed` drives root splitting
// in large fields.
std::vector<Polynomial> rr_roots(const WeightedBivariate& q, int wt, u64 seed = 0);

}  // namespace ldpir
