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

#include "ldpir/listdecode.h"

#include <algorithm>
#include <string>

namespace ldpir {

bool WeightedBivariate::is_zero() const {
  return std::all_of(q.begin(), q.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int WeightedBivariate::weighted_degree() const {
  int best = Polynomial::kZeroDegree;
  for (size_t s = 0; s < q.size(); ++s) {
    if (!q[s].is_zero()) best = std::max(best, q[s].degree() + static_cast<int>(s) * wt);
  }
  return best;
}

FieldElement WeightedBivariate::eval(const FieldElement& x, const FieldElement& y) const {
  FieldElement acc = modulus().zero();
  for (size_t s = q.size(); s-- > 0;) acc = acc * y + q[s].eval(x);
  return acc;
}

Polynomial WeightedBivariate::substitute(const Polynomial& g) const {
  Polynomial acc(modulus());
  for (size_t s = q.size(); s-- > 0;) acc = acc * g + q[s];
  return acc;
}

int qbase_monomial_count(int D, int wt) {
  if (D < 0 || wt < 1) return 0;
  int num = 0;
  for (int s = 0; s * wt <= D; ++s) num += D - s * wt + 1;
  return num;
}

ConstraintSystem build_constraint_system(std::span<const HermiteSample> samples, int wt, int D) {
  if (samples.empty()) throw ShapeError("no samples");
  if (wt < 1 || D < 0) throw InfeasibleParameters("need wt >= 1 and D >= 0");
  const FieldModulus mod = samples.front().lambda.modulus();
  std::vector<Monomial> monomials;
  for (int s = 0; s * wt <= D; ++s) {
    for (int a = 0; a <= D - s * wt; ++a) monomials.push_back({a, s});
  }
  Matrix m(mod, 2 * samples.size(), monomials.size());

  const int max_exp = D + 1;
  std::vector<u64> xp(max_exp + 1), yp(max_exp + 1);
  for (size_t j = 0; j < samples.size(); ++j) {
    const u64 x = samples[j].lambda.value();
    const u64 y = samples[j].alpha.value();
    const u64 z = samples[j].beta.value();
    xp[0] = yp[0] = 1;
    for (int e = 1; e <= max_exp; ++e) {
      xp[e] = mod.mul(xp[e - 1], x);
      yp[e] = mod.mul(yp[e - 1], y);
    }
    for (size_t c = 0; c < monomials.size(); ++c) {
      const int a = monomials[c].x_exp;
      const int s = monomials[c].y_exp;
      m.at(2 * j, c) = mod.mul(xp[a], yp[s]);
      // d/dx of x^a y^s along a curve with y' = z.
      u64 ext = 0;
      if (s >= 1) {
        ext = mod.mul(mod.mul(mod.reduce(static_cast<u64>(s)), xp[a]), mod.mul(yp[s - 1], z));
      }
      if (a >= 1) {
        ext = mod.add(ext, mod.mul(mod.reduce(static_cast<u64>(a)), mod.mul(xp[a - 1], yp[s])));
      }
      m.at(2 * j + 1, c) = ext;
    }
  }
  return {std::move(m), std::move(monomials)};
}

WeightedBivariate interpolate_qbase(std::span<const HermiteSample> samples, int wt, int D) {
  const int num = qbase_monomial_count(D, wt);
  const int constraints = 2 * static_cast<int>(samples.size());
  if (num <= constraints) {
    throw InfeasibleParameters("monomial count " + std::to_string(num) +
                               " does not exceed constraint count " + std::to_string(constraints));
  }
  for (size_t a = 0; a < samples.size(); ++a) {
    for (size_t b = a + 1; b < samples.size(); ++b) {
      if (samples[a].lambda == samples[b].lambda) throw DuplicatePoint("repeated evaluation point");
    }
  }
  ConstraintSystem sys = build_constraint_system(samples, wt, D);
  const FieldModulus mod = sys.matrix.modulus();
  auto kernel = canonical_kernel_vector(std::move(sys.matrix));
  if (!kernel) throw NoSolution("constraint system has a trivial kernel");

  WeightedBivariate out;
  out.wt = wt;
  out.D = D;
  out.rho = D / wt;
  std::vector<std::vector<FieldElement>> coeffs(out.rho + 1);
  for (int s = 0; s <= out.rho; ++s) coeffs[s].assign(D - s * wt + 1, mod.zero());
  for (size_t c = 0; c < sys.monomials.size(); ++c) {
    coeffs[sys.monomials[c].y_exp][sys.monomials[c].x_exp] =
        FieldElement::from_canonical(mod, (*kernel)[c]);
  }
  for (auto& cs : coeffs) out.q.emplace_back(mod, std::move(cs));
  return out;
}

FieldElement qext_eval(const WeightedBivariate& q, const FieldElement& x, const FieldElement& y,
                       const FieldElement& z) {
  const FieldModulus& mod = q.modulus();
  FieldElement acc = mod.zero();
  FieldElement ypow = mod.one();    // y^s
  FieldElement yprev = mod.zero();  // y^{s-1}
  for (size_t s = 0; s < q.q.size(); ++s) {
    if (s >= 1) acc += mod(s) * q.q[s].eval(x) * yprev * z;
    acc += q.q[s].derivative().eval(x) * ypow;
    yprev = ypow;
    ypow *= y;
  }
  return acc;
}

namespace {

using Bivariate = std::vector<Polynomial>;  // index = y-degree

// Divide out the largest power of x common to every coefficient.
void strip_x_power(Bivariate& q) {
  int e = -1;
  for (const auto& c : q) {
    if (c.is_zero()) continue;
    int v = 0;
    while (c.coeffs()[v].is_zero()) ++v;
    e = (e < 0) ? v : std::min(e, v);
  }
  if (e <= 0) return;
  for (auto& c : q) {
    if (c.is_zero()) continue;
    std::vector<FieldElement> shifted(c.coeffs().begin() + e, c.coeffs().end());
    c = Polynomial(c.modulus(), std::move(shifted));
  }
}

// Q(x, x*y + gamma).
Bivariate shift_substitute(const Bivariate& q, const FieldElement& gamma) {
  const FieldModulus& mod = gamma.modulus();
  const Polynomial x = Polynomial::monomial(mod, 1);
  Bivariate acc{Polynomial(mod)};
  for (size_t s = q.size(); s-- > 0;) {
    // acc = acc * (x*y + gamma) + q[s]
    Bivariate next(acc.size() + 1, Polynomial(mod));
    for (size_t r = 0; r < acc.size(); ++r) {
      next[r] = next[r] + acc[r] * gamma;
      next[r + 1] = next[r + 1] + acc[r] * x;
    }
    next[0] = next[0] + q[s];
    acc = std::move(next);
  }
  while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
  return acc;
}

struct RootSearch {
  const WeightedBivariate& original;
  int wt;
  u64 seed;
  std::vector<Polynomial> found;

  void recurse(Bivariate q, int depth, std::vector<FieldElement>& prefix) {
    strip_x_power(q);
    const FieldModulus mod = q.front().modulus();
    std::vector<FieldElement> at_zero;
    at_zero.reserve(q.size());
    for (const auto& c : q) at_zero.push_back(c.coeff(0));
    const Polynomial head(mod, std::move(at_zero));
    if (head.degree() < 1) return;
    for (const FieldElement& gamma : poly_roots(head, seed + found.size() + depth)) {
      prefix.push_back(gamma);
      if (depth == wt) {
        Polynomial g(mod, prefix);
        if (original.substitute(g).is_zero()) found.push_back(std::move(g));
      } else {
        recurse(shift_substitute(q, gamma), depth + 1, prefix);
      }
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<Polynomial> rr_roots(const WeightedBivariate& q, int wt, u64 seed) {
  if (q.q.empty() || q.is_zero()) throw ZeroPolynomial("rr_roots on the zero bivariate");
  RootSearch search{q, wt, seed, {}};
  std::vector<FieldElement> prefix;
  search.recurse(q.q, 0, prefix);
  std::sort(search.found.begin(), search.found.end());
  search.found.erase(std::unique(search.found.begin(), search.found.end()), search.found.end());
  return search.found;
}

}  // namespace ldpir
