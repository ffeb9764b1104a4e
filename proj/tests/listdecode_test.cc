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


#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ldpir/linalg.h"
#include "ldpir/listdecode.h"

namespace ldpir {
namespace {

using Rows = std::vector<std::vector<u64>>;

// Test-only rank by plain Gaussian elimination with u128 arithmetic.
size_t reference_rank(Rows a, u64 p) {
  size_t rank = 0;
  const size_t cols = a.empty() ? 0 : a[0].size();
  auto inv = [p](u64 x) {
    u64 r = 1, e = p - 2;
    u128 b = x;
    while (e) {
      if (e & 1) r = static_cast<u64>(r * b % p);
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (size_t c = 0; c < cols && rank < a.size(); ++c) {
    size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const u64 iv = inv(a[rank][c]);
    for (size_t r = rank + 1; r < a.size(); ++r) {
      const u64 f = static_cast<u64>(static_cast<u128>(a[r][c]) * iv % p);
      for (size_t k = c; k < cols; ++k) {
        a[r][k] = static_cast<u64>((a[r][k] + static_cast<u128>(p - f) * a[rank][k]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

Matrix to_matrix(const Rows& rows, const FieldModulus& mod) {
  Matrix m(mod, rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[0].size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

TEST(LinalgTest, RankAndKernelAgreeWithReference) {
  std::mt19937_64 gen(11);
  for (u64 p : {5ULL, 131ULL}) {
    const FieldModulus mod(p);
    for (int trial = 0; trial < 500; ++trial) {
      const size_t rows = 1 + gen() % 7, cols = 1 + gen() % 8;
      Rows a(rows, std::vector<u64>(cols));
      for (auto& row : a) {
        for (auto& e : row) e = (gen() % 3 == 0) ? 0 : gen() % p;
      }
      if (rows > 1 && gen() % 3 == 0) a[rows - 1] = a[0];  // force dependence
      const size_t rank = reference_rank(a, p);
      Matrix m = to_matrix(a, mod);
      EXPECT_EQ(row_reduce(m).size(), rank);
      const auto kernel = canonical_kernel_vector(to_matrix(a, mod));
      ASSERT_EQ(kernel.has_value(), rank < cols);
      if (!kernel) continue;
      bool nonzero = false;
      for (u64 e : *kernel) nonzero |= e != 0;
      EXPECT_TRUE(nonzero);
      for (const auto& row : a) {
        u128 acc = 0;
        for (size_t c = 0; c < cols; ++c) acc = (acc + static_cast<u128>(row[c]) * (*kernel)[c]) % p;
        EXPECT_EQ(acc, 0u);
      }
    }
  }
}

TEST(LinalgTest, KernelIsCanonical) {
  const FieldModulus mod(7);
  const Rows a{{1, 2, 3}, {2, 4, 6}};
  const auto k1 = canonical_kernel_vector(to_matrix(a, mod));
  const auto k2 = canonical_kernel_vector(to_matrix(Rows{{2, 4, 6}, {1, 2, 3}}, mod));
  ASSERT_TRUE(k1 && k2);
  EXPECT_EQ(*k1, *k2);
  EXPECT_EQ(k1->back(), 1u);  // highest free column set to 1
}

std::vector<HermiteSample> samples_of(const Polynomial& f, const std::vector<u64>& points) {
  std::vector<HermiteSample> out;
  const Polynomial df = f.derivative();
  for (u64 x : points) {
    const FieldElement e = f.modulus()(x);
    out.push_back({e, f.eval(e), df.eval(e)});
  }
  return out;
}

TEST(ListDecodeTest, MonomialCounts) {
  EXPECT_EQ(qbase_monomial_count(5, 1), 21);
  EXPECT_EQ(qbase_monomial_count(15, 3), 51);
  EXPECT_EQ(qbase_monomial_count(15, 4), 40);
}

TEST(ListDecodeTest, InterpolationExample) {
  const FieldModulus mod(131);
  const Polynomial f(mod, {17, 42});
  const auto s = samples_of(f, {1, 2, 3, 4});
  const WeightedBivariate q = interpolate_qbase(s, 1, 5);
  EXPECT_EQ(q.rho, 5);
  EXPECT_FALSE(q.is_zero());
  EXPECT_TRUE(q.substitute(f).is_zero());
}

TEST(ListDecodeTest, InterpolationErrors) {
  const FieldModulus mod(131);
  const Polynomial f(mod, {1, 1});
  std::vector<HermiteSample> s;
  for (u64 x = 1; x <= 20; ++x) s.push_back({mod(x), f.eval(mod(x)), mod(1)});
  EXPECT_THROW(interpolate_qbase(s, 4, 15), InfeasibleParameters);
  std::vector<HermiteSample> dup = samples_of(f, {1, 1, 2});
  EXPECT_THROW(interpolate_qbase(dup, 1, 5), DuplicatePoint);
}

TEST(ListDecodeTest, InterpolationSoundOnRandomSamples) {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldModulus mod(trial % 2 ? 131 : 1031);
    const int k = 2 + static_cast<int>(gen() % 9);
    const int b = static_cast<int>(gen() % (k - 1));
    const int wt = 1 + static_cast<int>(gen() % 4);
    const int D = 2 * (k - b) - 1;
    if (qbase_monomial_count(D, wt) <= 2 * k) continue;
    std::vector<HermiteSample> s;
    for (int j = 1; j <= k; ++j) s.push_back({mod(j), mod(gen()), mod(gen())});
    const WeightedBivariate q = interpolate_qbase(s, wt, D);
    ASSERT_FALSE(q.is_zero());
    ASSERT_LE(q.weighted_degree(), D);
    for (const auto& x : s) {
      ASSERT_TRUE(q.eval(x.lambda, x.alpha).is_zero());
      ASSERT_TRUE(qext_eval(q, x.lambda, x.alpha, x.beta).is_zero());
    }
  }
}

TEST(ListDecodeTest, QextExamples) {
  const FieldModulus f7(7);
  WeightedBivariate q;
  q.wt = 1;
  q.D = 2;
  q.rho = 2;
  q.q = {Polynomial(f7, {0, 0, 6}), Polynomial(f7), Polynomial(f7, {1})};  // alpha^2 - lambda^2
  EXPECT_TRUE(qext_eval(q, f7(2), f7(2), f7(1)).is_zero());

  // Constant coefficients: Q^ext = beta * sum s Q_s alpha^{s-1}.
  WeightedBivariate c = q;
  c.q = {Polynomial(f7, {3}), Polynomial(f7, {2}), Polynomial(f7, {5})};
  const FieldElement y = f7(4), z = f7(6);
  EXPECT_EQ(qext_eval(c, f7(1), y, z), z * (f7(2) + f7(2) * f7(5) * y));
}

TEST(ListDecodeTest, QextChainRule) {
  const FieldModulus mod(131);
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 300; ++trial) {
    WeightedBivariate q;
    q.wt = 1 + static_cast<int>(gen() % 3);
    q.D = 6;
    q.rho = q.D / q.wt;
    for (int s = 0; s <= q.rho; ++s) {
      std::vector<FieldElement> c;
      for (int a = 0; a <= q.D - s * q.wt; ++a) c.push_back(mod(gen()));
      q.q.emplace_back(mod, c);
    }
    std::vector<FieldElement> gc;
    for (int d = 0; d <= q.wt; ++d) gc.push_back(mod(gen()));
    const Polynomial g(mod, gc);
    const Polynomial composed = q.substitute(g).derivative();
    const FieldElement x0 = mod(gen());
    ASSERT_EQ(composed.eval(x0), qext_eval(q, x0, g.eval(x0), g.derivative().eval(x0)));
  }
}

TEST(ListDecodeTest, RootExamples) {
  const FieldModulus f5(5);
  WeightedBivariate q;
  q.wt = 1;
  q.D = 2;
  q.rho = 2;
  // (a - x)(a - (x+1)) = a^2 - (2x+1) a + x^2 + x
  q.q = {Polynomial(f5, {0, 1, 1}), Polynomial(f5, {4, 3}), Polynomial(f5, {1})};
  EXPECT_EQ(rr_roots(q, 1), (std::vector<Polynomial>{Polynomial(f5, {0, 1}), Polynomial(f5, {1, 1})}));

  WeightedBivariate c;
  c.wt = 2;
  c.D = 2;
  c.rho = 1;
  c.q = {Polynomial(f5, {2}), Polynomial(f5, {1})};  // a + 2, root a = 3
  EXPECT_EQ(rr_roots(c, 2), std::vector<Polynomial>{Polynomial(f5, {3})});

  WeightedBivariate zero = c;
  zero.q = {Polynomial(f5), Polynomial(f5)};
  EXPECT_THROW(rr_roots(zero, 1), ZeroPolynomial);
}

// Enumerates every g of degree <= wt and keeps those with Q(x, g(x)) == 0.
std::vector<Polynomial> brute_roots(const WeightedBivariate& q, int wt, const FieldModulus& mod) {
  std::vector<Polynomial> out;
  const u64 p = mod.p();
  std::vector<u64> digits(wt + 1, 0);
  while (true) {
    std::vector<FieldElement> c;
    for (u64 d : digits) c.push_back(mod(d));
    Polynomial g(mod, c);
    if (q.substitute(g).is_zero()) out.push_back(g);
    size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ListDecodeTest, RootsMatchBruteForce) {
  std::mt19937_64 gen(14);
  for (int trial = 0; trial < 150; ++trial) {
    const FieldModulus mod(trial % 2 ? 11 : 13);
    const int k = 3 + static_cast<int>(gen() % 4);
    const int b = static_cast<int>(gen() % (k - 1));
    const int wt = 1 + static_cast<int>(gen() % 2);
    const int D = 2 * (k - b) - 1;
    if (qbase_monomial_count(D, wt) <= 2 * k) continue;
    std::vector<FieldElement> fc;
    for (int d = 0; d <= wt; ++d) fc.push_back(mod(gen()));
    const Polynomial f(mod, fc);
    std::vector<u64> pts;
    for (int j = 1; j <= k; ++j) pts.push_back(j);
    auto s = samples_of(f, pts);
    for (int j = 0; j < b; ++j) s[k - 1 - j].alpha = mod(gen());
    const WeightedBivariate q = interpolate_qbase(s, wt, D);
    const auto found = rr_roots(q, wt, gen());
    ASSERT_EQ(found, brute_roots(q, wt, mod));
    ASSERT_TRUE(std::find(found.begin(), found.end(), f) != found.end());
  }
}

}  // namespace
}  // namespace ldpir
