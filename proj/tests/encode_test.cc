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

#include <filesystem>
#include <random>
#include <set>

#include "ldpir/encode.h"
#include "ldpir/poly.h"

namespace ldpir {
namespace {

TEST(EncodeTest, IndexEncodeExamples) {
  EXPECT_EQ(index_encode(1, 4, 2), (std::vector<int>{1, 2}));
  EXPECT_EQ(index_encode(2, 4, 2), (std::vector<int>{1, 3}));
  EXPECT_EQ(index_encode(3, 4, 2), (std::vector<int>{2, 3}));
  EXPECT_EQ(index_encode(4, 4, 2), (std::vector<int>{1, 4}));
  EXPECT_EQ(index_encode(6, 4, 2), (std::vector<int>{3, 4}));
  EXPECT_THROW(index_encode(0, 4, 2), IndexOutOfRange);
  EXPECT_THROW(index_encode(7, 4, 2), IndexOutOfRange);
}

TEST(EncodeTest, IndexEncodeBijective) {
  for (auto [m, w] : {std::pair{10, 3}, std::pair{8, 1}, std::pair{9, 5}, std::pair{12, 2}}) {
    const u64 total = binomial_saturating(m, w);
    std::set<std::vector<int>> seen;
    for (u64 i = 1; i <= total; ++i) {
      const auto s = index_encode(i, m, w);
      ASSERT_EQ(s.size(), static_cast<size_t>(w));
      for (size_t a = 0; a < s.size(); ++a) {
        ASSERT_GE(s[a], 1);
        ASSERT_LE(s[a], m);
        if (a) {
          ASSERT_LT(s[a - 1], s[a]);
        }
      }
      ASSERT_EQ(index_rank(s), i);
      seen.insert(s);
    }
    EXPECT_EQ(seen.size(), total);
  }
}

TEST(EncodeTest, MinVariables) {
  EXPECT_EQ(min_variables(65536, 2), 363);
  EXPECT_EQ(min_variables(u64{1} << 26, 12), 30);
  EXPECT_EQ(min_variables(1, 1), 1);
  EXPECT_EQ(min_variables(10, 1), 10);
  // Independent scan using the exact binomial.
  for (u64 n : {100ULL, 1000ULL, 4096ULL}) {
    for (int w = 1; w <= 4; ++w) {
      int m = w;
      while (binomial_saturating(m, w) < n) ++m;
      EXPECT_EQ(min_variables(n, w), m);
    }
  }
}

TEST(EncodeTest, SelectParamsExamples) {
  const FieldModulus mod(131);
  const PirParams g1 = select_params(65536, 8, 6, 1, 3, Scheme::kGamma1, mod);
  EXPECT_EQ(g1.w, 2);
  EXPECT_EQ(g1.m, 363);
  EXPECT_EQ(select_params(1024, 20, 20, 1, 12, Scheme::kGamma1, mod).w, 12);
  EXPECT_EQ(select_params(1024, 20, 20, 1, 12, Scheme::kGamma2, mod).w, 3);
  EXPECT_EQ(select_params(1024, 8, 6, 1, 3, Scheme::kGamma2, mod).w, 1);
  EXPECT_EQ(select_params(1024, 8, 6, 1, 0, Scheme::kWoodruffYekhanin, mod).w, 11);
  EXPECT_TRUE(gamma2_feasible(20, 12, 1, 3));
  EXPECT_FALSE(gamma2_feasible(20, 12, 1, 4));
  EXPECT_THROW(make_params(Scheme::kGamma2, 1024, 20, 20, 1, 12, 4, mod), InfeasibleParameters);
  // b > k - sqrt(kt) leaves no feasible degree.
  EXPECT_THROW(select_params(1024, 8, 6, 1, 4, Scheme::kGamma2, mod), InfeasibleParameters);
  const auto& l = g1.lambdas;
  ASSERT_EQ(l.size(), 8u);
  for (int j = 0; j < 8; ++j) EXPECT_EQ(l[j], mod(j + 1));
}

TEST(EncodeTest, ValidateRejects) {
  const FieldModulus mod(131);
  EXPECT_THROW(make_params(Scheme::kGamma1, 64, 8, 6, 0, 3, 2, mod), InfeasibleParameters);
  EXPECT_THROW(make_params(Scheme::kGamma1, 64, 8, 6, 1, 5, 1, mod), InfeasibleParameters);
  EXPECT_THROW(make_params(Scheme::kGamma1, 64, 8, 9, 1, 3, 1, mod), InfeasibleParameters);
  EXPECT_THROW(make_params(Scheme::kGamma1, 64, 8, 6, 1, 3, 5, mod), InfeasibleParameters);
  EXPECT_THROW(make_params(Scheme::kWoodruffYekhanin, 64, 8, 6, 1, 1, 2, mod), InfeasibleParameters);
  EXPECT_THROW(make_params(Scheme::kGamma1, 64, 8, 6, 1, 3, 2, FieldModulus(7)), InfeasibleParameters);
  EXPECT_THROW(make_params(Scheme::kGamma1, 64, 3, 3, 1, 1, 1, mod,
                           std::vector<FieldElement>{mod(1), mod(2), mod(1)}),
               InfeasibleParameters);
  EXPECT_THROW(make_params(Scheme::kGamma1, 64, 3, 3, 1, 1, 1, mod,
                           std::vector<FieldElement>{mod(0), mod(2), mod(3)}),
               InfeasibleParameters);
  PirParams ok = make_params(Scheme::kGamma1, 64, 8, 6, 1, 3, 2, mod);
  ok.m += 1;
  EXPECT_THROW(validate_params(ok), InfeasibleParameters);
}

std::vector<FieldElement> elements(const FieldModulus& mod, std::initializer_list<u64> vs) {
  std::vector<FieldElement> out;
  for (u64 v : vs) out.push_back(mod(v));
  return out;
}

TEST(EncodeTest, SymbolicExample) {
  const FieldModulus mod(131);
  const PirParams p = make_params(Scheme::kGamma1, 3, 8, 6, 1, 3, 2, mod);
  ASSERT_EQ(p.m, 3);
  const EncodedDatabase db(p, elements(mod, {10, 20, 40}));
  const auto r = db.eval_and_gradient(FieldVector(mod, std::vector<u64>{1, 1, 1}));
  EXPECT_EQ(r.u, mod(70));
  EXPECT_EQ(r.v.elements(), elements(mod, {30, 50, 60}));
  const auto z = db.eval_and_gradient(FieldVector(mod, 3));
  EXPECT_TRUE(z.u.is_zero());
  for (const auto& e : z.v.elements()) EXPECT_TRUE(e.is_zero());
  EXPECT_THROW(db.eval_and_gradient(FieldVector(mod, 2)), ShapeError);
}

// Direct definition: u = sum x_j prod q_c, v_c = sum over supports containing c.
EvalGradient naive_eval(const PirParams& p, const std::vector<FieldElement>& x, const FieldVector& q) {
  const FieldModulus& mod = p.modulus;
  FieldElement u = mod.zero();
  std::vector<FieldElement> v(p.m, mod.zero());
  for (u64 j = 1; j <= p.n; ++j) {
    const auto s = index_encode(j, p.m, p.w);
    FieldElement prod = x[j - 1];
    for (int c : s) prod *= q[c - 1];
    u += prod;
    for (int c : s) {
      FieldElement partial = x[j - 1];
      for (int d : s) {
        if (d != c) partial *= q[d - 1];
      }
      v[c - 1] += partial;
    }
  }
  return {u, FieldVector(mod, v)};
}

TEST(EncodeTest, EvalMatchesDefinition) {
  std::mt19937_64 gen(21);
  for (u64 pr : {131ULL, 1031ULL, 4294967311ULL, 2305843009213693951ULL}) {
    const FieldModulus mod(pr);
    for (int w = 1; w <= 4; ++w) {
      const u64 n = 40 + gen() % 60;
      const PirParams p = make_params(Scheme::kGamma1, n, 12, 12, 1, 0, w, mod);
      const auto x = random_database(n, mod, gen());
      const EncodedDatabase db(p, x);
      for (int trial = 0; trial < 5; ++trial) {
        FieldVector q(mod, p.m);
        for (int c = 0; c < p.m; ++c) {
          // Sprinkle zeros so division-free gradients are exercised.
          q.set(c, gen() % 4 == 0 ? mod.zero() : mod(gen()));
        }
        const auto fast = db.eval_and_gradient(q);
        const auto slow = naive_eval(p, x, q);
        ASSERT_EQ(fast.u, slow.u);
        ASSERT_EQ(fast.v, slow.v);
      }
    }
  }
}

TEST(EncodeTest, DegreeDivisibleByCharacteristic) {
  const FieldModulus mod(7);
  const PirParams p = make_params(Scheme::kGamma1, 40, 6, 6, 1, 0, 7, mod);
  const auto x = random_database(40, mod, 9);
  const EncodedDatabase db(p, x);
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 20; ++trial) {
    FieldVector q(mod, p.m);
    for (int c = 0; c < p.m; ++c) q.set(c, mod(gen()));
    const auto fast = db.eval_and_gradient(q);
    const auto slow = naive_eval(p, x, q);
    ASSERT_EQ(fast.u, slow.u);
    ASSERT_EQ(fast.v, slow.v);
  }
}

TEST(EncodeTest, IndicatorRetrievesRecord) {
  const FieldModulus mod(1031);
  for (int w : {1, 2, 3}) {
    const u64 n = 4096;
    const PirParams p = make_params(Scheme::kGamma1, n, 12, 12, 1, 0, w, mod);
    const auto x = random_database(n, mod, 5);
    const EncodedDatabase db(p, x);
    for (u64 i = 1; i <= n; ++i) {
      FieldVector q(mod, p.m);
      for (int c : index_encode(i, p.m, w)) q.set(c - 1, mod.one());
      ASSERT_EQ(db.eval_and_gradient(q).u, x[i - 1]);
    }
  }
}

// d/dx F(G(x)) at x0 against <grad F(G(x0)), G'(x0)>, with the left side from
// Lagrange interpolation of F(G(.)) at enough points.
TEST(EncodeTest, ChainRule) {
  const FieldModulus mod(1031);
  std::mt19937_64 gen(22);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = 1 + trial % 3, t = 1 + trial % 2;
    const PirParams p = make_params(Scheme::kGamma1, 50, 12, 12, t, 0, w, mod);
    const EncodedDatabase db(p, random_database(50, mod, gen()));
    std::vector<std::vector<FieldElement>> g(p.m);  // coefficients of each coordinate
    for (auto& c : g) {
      for (int s = 0; s <= t; ++s) c.push_back(mod(gen()));
    }
    auto G = [&](const FieldElement& x) {
      FieldVector q(mod, p.m);
      for (int c = 0; c < p.m; ++c) q.set(c, Polynomial(mod, g[c]).eval(x));
      return q;
    };
    const int deg = w * t;
    std::vector<FieldElement> xs, ys;
    for (int j = 0; j <= deg; ++j) {
      xs.push_back(mod(j + 1));
      ys.push_back(db.eval_and_gradient(G(xs.back())).u);
    }
    Polynomial f(mod);
    for (int j = 0; j <= deg; ++j) {
      Polynomial basis = Polynomial::constant(ys[j]);
      for (int l = 0; l <= deg; ++l) {
        if (l == j) continue;
        basis = basis * Polynomial(mod, std::vector<FieldElement>{-xs[l], mod.one()}) *
                (xs[j] - xs[l]).inv();
      }
      f = f + basis;
    }
    const FieldElement x0 = mod(500 + gen() % 500);
    const auto eg = db.eval_and_gradient(G(x0));
    ASSERT_EQ(f.eval(x0), eg.u);
    FieldElement inner = mod.zero();
    for (int c = 0; c < p.m; ++c) inner += eg.v[c] * Polynomial(mod, g[c]).derivative().eval(x0);
    ASSERT_EQ(f.derivative().eval(x0), inner);
  }
}

TEST(EncodeTest, DatabaseFileRoundTrip) {
  for (u64 pr : {131ULL, 65537ULL, 2305843009213693951ULL}) {
    const FieldModulus mod(pr);
    const auto x = random_database(16, mod, 1);
    const auto bytes = encode_database_file(mod, x);
    const std::string header = "LDPIR1\n" + std::to_string(pr) + "\n16\n";
    ASSERT_EQ(std::string(bytes.begin(), bytes.begin() + header.size()), header);
    EXPECT_EQ(bytes.size(), header.size() + 16 * static_cast<size_t>(mod.byte_width()));
    const DatabaseFile back = decode_database_file(bytes);
    EXPECT_EQ(back.modulus.p(), pr);
    EXPECT_EQ(back.x, x);
  }
  EXPECT_EQ(random_database(16, FieldModulus(131), 1), random_database(16, FieldModulus(131), 1));
  EXPECT_NE(random_database(16, FieldModulus(131), 1), random_database(16, FieldModulus(131), 2));

  const auto path = std::filesystem::temp_directory_path() / "ldpir_encode_test.db";
  const FieldModulus mod(1031);
  write_database_file(path, mod, random_database(100, mod, 3));
  EXPECT_EQ(read_database_file(path).x, random_database(100, mod, 3));
  std::filesystem::remove(path);
}

TEST(EncodeTest, DatabaseFileErrors) {
  const FieldModulus mod(131);
  auto bytes = encode_database_file(mod, random_database(4, mod, 1));
  auto bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW(decode_database_file(bad), FormatError);
  bad = bytes;
  bad.pop_back();
  EXPECT_THROW(decode_database_file(bad), FormatError);
  bad = bytes;
  bad.back() = 200;  // >= p
  EXPECT_THROW(decode_database_file(bad), FormatError);
  const std::string nonprime = "LDPIR1\n8\n1\n\x01";
  EXPECT_THROW(decode_database_file(std::vector<std::uint8_t>(nonprime.begin(), nonprime.end())),
               InvalidModulus);
  const std::string trunc = "LDPIR1\n131";
  EXPECT_THROW(decode_database_file(std::vector<std::uint8_t>(trunc.begin(), trunc.end())),
               FormatError);
}

}  // namespace
}  // namespace ldpir
