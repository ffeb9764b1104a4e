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
#include <map>
#include <random>

#include "ldpir/encode.h"
#include "ldpir/protocol.h"

namespace ldpir {
namespace {

// Lagrange interpolation through (xs[j], ys[j]).
Polynomial lagrange(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys) {
  const FieldModulus& mod = xs.front().modulus();
  Polynomial f(mod);
  for (size_t j = 0; j < xs.size(); ++j) {
    Polynomial basis = Polynomial::constant(ys[j]);
    for (size_t l = 0; l < xs.size(); ++l) {
      if (l == j) continue;
      basis = basis * Polynomial(mod, std::vector<FieldElement>{-xs[l], mod.one()}) *
              (xs[j] - xs[l]).inv();
    }
    f = f + basis;
  }
  return f;
}

// f = F(G(.)) rebuilt from F evaluated on G at wt+1 fresh points, G taken
// from aux directly.
Polynomial session_polynomial(const PirParams& p, const EncodedDatabase& db, const Aux& aux) {
  const FieldModulus& mod = p.modulus;
  std::vector<FieldElement> xs, ys;
  const auto support = index_encode(aux.index, p.m, p.w);
  for (int j = 0; j <= p.wt(); ++j) {
    const FieldElement x = mod(1000 + j);
    FieldVector q(mod, p.m);
    for (int c : support) q.set(c - 1, mod.one());
    FieldElement xp = mod.one();
    for (int s = 0; s < p.t; ++s) {
      xp *= x;
      for (int c = 0; c < p.m; ++c) q.set(c, q[c] + xp * aux.r[s][c]);
    }
    xs.push_back(x);
    ys.push_back(db.eval_and_gradient(q).u);
  }
  return lagrange(xs, ys);
}

std::vector<Answer> honest_answers(const EncodedDatabase& db, const QueryBundle& b) {
  std::vector<Answer> out;
  for (const auto& q : b.queries) out.emplace_back(answer(db, q));
  return out;
}

TEST(ProtocolTest, QueryGenShape) {
  const FieldModulus mod(131);
  const PirParams p = select_params(1024, 8, 6, 2, 1, Scheme::kGamma1, mod);
  const QueryBundle a = query_gen(p, 7, 99), b = query_gen(p, 7, 99), c = query_gen(p, 7, 100);
  ASSERT_EQ(a.queries.size(), 8u);
  ASSERT_EQ(a.aux.r.size(), 2u);
  for (const auto& q : a.queries) EXPECT_EQ(q.q.size(), static_cast<size_t>(p.m));
  EXPECT_EQ(a.queries, b.queries);
  EXPECT_NE(a.queries, c.queries);
  EXPECT_EQ(a.aux.index, 7u);
  EXPECT_THROW(query_gen(p, 0, 1), IndexOutOfRange);
  EXPECT_THROW(query_gen(p, 1025, 1), IndexOutOfRange);
}

TEST(ProtocolTest, ZeroRandomnessSendsIndicator) {
  const FieldModulus mod(131);
  const PirParams p = select_params(100, 8, 6, 2, 1, Scheme::kGamma1, mod);
  const std::vector<FieldVector> r(2, FieldVector(mod, p.m));
  FieldVector e(mod, p.m);
  for (int c : index_encode(42, p.m, p.w)) e.set(c - 1, mod.one());
  for (const auto& q : make_queries(p, 42, r)) EXPECT_EQ(q.q, e);
}

TEST(ProtocolTest, SingleServerBijection) {
  const FieldModulus mod(5);
  const PirParams p = make_params(Scheme::kGamma1, 1, 4, 3, 1, 0, 1, mod);
  ASSERT_EQ(p.m, 1);
  std::vector<std::map<u64, int>> counts(4);
  for (u64 r = 0; r < 5; ++r) {
    const auto qs = make_queries(p, 1, {FieldVector(mod, std::vector<u64>{r})});
    for (int j = 0; j < 4; ++j) ++counts[j][qs[j].q[0].value()];
  }
  for (const auto& c : counts) {
    ASSERT_EQ(c.size(), 5u);
    for (const auto& [v, n] : c) EXPECT_EQ(n, 1);
  }
}

TEST(ProtocolTest, QueriesInterpolateToIndicator) {
  const FieldModulus mod(1031);
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int t = 1 + trial % 3;
    const PirParams p = select_params(500, 8, 7, t, 0, Scheme::kGamma1, mod);
    const u64 i = 1 + gen() % 500;
    const QueryBundle b = query_gen(p, i, gen());
    FieldVector e(mod, p.m);
    for (int c : index_encode(i, p.m, p.w)) e.set(c - 1, mod.one());
    for (int c = 0; c < p.m; ++c) {
      std::vector<FieldElement> xs, ys;
      for (int j = 0; j <= t; ++j) {
        xs.push_back(p.lambdas[j]);
        ys.push_back(b.queries[j].q[c]);
      }
      ASSERT_EQ(lagrange(xs, ys).eval(mod.zero()), e[c]);
    }
  }
}

TEST(ProtocolTest, AnswerIsDeterministic) {
  const FieldModulus mod(131);
  const PirParams p = select_params(200, 8, 6, 1, 3, Scheme::kGamma1, mod);
  const auto x = random_database(200, mod, 4);
  const EncodedDatabase db(p, x);
  const QueryBundle b = query_gen(p, 17, 3);
  EXPECT_EQ(answer(db, b.queries[0]), answer(db, b.queries[0]));
  FieldVector e(mod, p.m);
  for (int c : index_encode(17, p.m, p.w)) e.set(c - 1, mod.one());
  EXPECT_EQ(answer(db, Query{e}).u, x[16]);
}

TEST(ProtocolTest, HonestTuplesSampleSessionPolynomial) {
  const FieldModulus mod(1031);
  std::mt19937_64 gen(32);
  for (int trial = 0; trial < 12; ++trial) {
    const int t = 1 + trial % 3;
    const PirParams p = select_params(300, 8, 7, t, 1, Scheme::kGamma1, mod);
    const auto x = random_database(300, mod, gen());
    const EncodedDatabase db(p, x);
    const u64 i = 1 + gen() % 300;
    const QueryBundle b = query_gen(p, i, gen());
    const auto answers = honest_answers(db, b);
    const auto tuples = derive_tuples(b.aux, answers, p.k);
    const Polynomial f = session_polynomial(p, db, b.aux);
    ASSERT_LE(f.degree(), p.wt());
    ASSERT_EQ(f.eval(mod.zero()), x[i - 1]);
    ASSERT_EQ(tuples.size(), static_cast<size_t>(p.k));
    const Polynomial df = f.derivative();
    for (size_t j = 0; j < tuples.size(); ++j) {
      EXPECT_EQ(tuples[j].lambda, p.lambdas[j]);
      EXPECT_EQ(tuples[j].alpha, f.eval(p.lambdas[j]));
      EXPECT_EQ(tuples[j].beta, df.eval(p.lambdas[j]));
    }
    if (t == 1) {
      for (size_t j = 0; j < tuples.size(); ++j) {
        const u64 inner = dot_product(answers[j]->v.raw(), b.aux.r[0].raw(), mod);
        EXPECT_EQ(tuples[j].beta, FieldElement::from_canonical(mod, inner));
      }
    }
  }
}

TEST(ProtocolTest, ResponderSelection) {
  const FieldModulus mod(131);
  std::vector<Answer> answers(8, Response{mod.zero(), FieldVector(mod, 1)});
  answers[1].reset();
  answers[4].reset();
  EXPECT_EQ(select_responders(answers, 6), (std::vector<int>{0, 2, 3, 5, 6, 7}));
  EXPECT_EQ(select_responders(answers, 3), (std::vector<int>{0, 2, 3}));
  const std::vector<int> pref{7, 6, 5};
  EXPECT_EQ(select_responders(answers, 3, pref), (std::vector<int>{7, 6, 5}));
  answers[0].reset();
  answers[2].reset();
  EXPECT_THROW(select_responders(answers, 6), InsufficientResponses);
}

std::vector<HermiteSample> samples(const Polynomial& f, std::initializer_list<u64> pts) {
  std::vector<HermiteSample> out;
  const FieldModulus& mod = f.modulus();
  for (u64 x : pts) out.push_back({mod(x), f.eval(mod(x)), f.derivative().eval(mod(x))});
  return out;
}

TEST(ProtocolTest, WyMinimal) {
  const FieldModulus mod(131);
  const Polynomial f(mod, {77, 5});
  EXPECT_EQ(reconstruct_wy(samples(f, {1})), mod(77));
  const Polynomial g(mod, {9, 1, 2, 3, 4, 5});
  EXPECT_EQ(reconstruct_wy(samples(g, {1, 2, 3})), mod(9));
}

TEST(ProtocolTest, G1SmallExample) {
  const FieldModulus mod(7);
  const Polynomial f(mod, {1, 2});
  auto s = samples(f, {1, 2, 3});
  s[2].alpha = mod(0);
  s[2].beta = mod(1);
  for (G1Mode mode : {G1Mode::kNaive, G1Mode::kOptimized}) {
    const OutputList out = reconstruct_g1(s, 1, 1, mode);
    EXPECT_TRUE(out.contains(mod(1)));
    EXPECT_EQ(out.candidates, std::vector<Polynomial>{f});
  }
}

TEST(ProtocolTest, HonestTuplesDecodeUniquely) {
  const FieldModulus mod(131);
  std::mt19937_64 gen(33);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 3 + static_cast<int>(gen() % 6);
    const int b = static_cast<int>(gen() % (k - 1));
    const int wt = 1 + static_cast<int>(gen() % (2 * (k - b) - 2));
    std::vector<FieldElement> c;
    for (int d = 0; d <= wt; ++d) c.push_back(mod(gen()));
    const Polynomial f(mod, c);
    std::vector<HermiteSample> s;
    for (int j = 1; j <= k; ++j) s.push_back({mod(j), f.eval(mod(j)), f.derivative().eval(mod(j))});
    const OutputList naive = reconstruct_g1(s, wt, b, G1Mode::kNaive);
    const OutputList opt = reconstruct_g1(s, wt, b, G1Mode::kOptimized);
    ASSERT_EQ(naive.candidates, std::vector<Polynomial>{f});
    ASSERT_EQ(opt.candidates, naive.candidates);
    ASSERT_EQ(opt.values, std::vector<FieldElement>{f.eval(mod.zero())});
    if (gamma2_feasible(k, b, 1, wt)) {
      ASSERT_EQ(reconstruct_g2(s, wt, b, gen()).candidates, std::vector<Polynomial>{f});
    }
    if (b == 0 && wt <= 2 * k - 1) {
      ASSERT_EQ(reconstruct_wy(s), f.eval(mod.zero()));
    }
  }
}

// k=6, b=3: three tuples from f and three from an alternative fhat.  Any
// degree <= wt candidate with three order-1 agreements matches one of them at
// two points, which pins it down (4 conditions, degree <= 3).
TEST(ProtocolTest, ConsistentFakeYieldsTwoCandidates) {
  const FieldModulus mod(131);
  std::mt19937_64 gen(34);
  for (int trial = 0; trial < 100; ++trial) {
    const int wt = trial % 2 ? 2 : 1;
    std::vector<FieldElement> fc, gc;
    for (int d = 0; d <= wt; ++d) {
      fc.push_back(mod(gen()));
      gc.push_back(mod(gen()));
    }
    const Polynomial f(mod, fc), fhat(mod, gc);
    if (f == fhat) continue;
    auto s = samples(f, {1, 2, 3, 4, 5, 6});
    std::vector<int> pos{0, 1, 2, 3, 4, 5};
    std::shuffle(pos.begin(), pos.end(), gen);
    for (int j = 0; j < 3; ++j) {
      const FieldElement x = s[pos[j]].lambda;
      s[pos[j]] = {x, fhat.eval(x), fhat.derivative().eval(x)};
    }
    std::vector<Polynomial> expected{f, fhat};
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(reconstruct_g1(s, wt, 3, G1Mode::kNaive).candidates, expected);
    ASSERT_EQ(reconstruct_g1(s, wt, 3, G1Mode::kOptimized).candidates, expected);
    if (wt == 1) {
      const OutputList g2 = reconstruct_g2(s, wt, 3);
      ASSERT_EQ(g2.candidates, expected);
      ASSERT_TRUE(g2.contains(f.eval(mod.zero())));
      ASSERT_TRUE(g2.contains(fhat.eval(mod.zero())));
    }
  }
}

TEST(ProtocolTest, ReconstructorErrors) {
  const FieldModulus mod(131);
  const auto s = samples(Polynomial(mod, {1, 1}), {1, 2, 3, 4});
  EXPECT_THROW(reconstruct_g1(s, 5, 1), InfeasibleParameters);
  EXPECT_THROW(reconstruct_g1(s, 1, 3), InfeasibleParameters);
  EXPECT_THROW(reconstruct_g2(s, 4, 3), InfeasibleParameters);
}

TEST(ProtocolTest, ListBounds) {
  // C(6,2)/C(3,2) = 5 at (k,b,wt) = (6,3,2).
  EXPECT_TRUE(within_g1_list_bound(5, 6, 3, 2));
  EXPECT_FALSE(within_g1_list_bound(6, 6, 3, 2));
  // C(6,1)/C(3,1) = 2 at wt = 1.
  EXPECT_TRUE(within_g1_list_bound(2, 6, 3, 1));
  EXPECT_FALSE(within_g1_list_bound(3, 6, 3, 1));
  EXPECT_EQ(g2_list_bound(6, 3, 1), 5);
  EXPECT_EQ(g2_list_bound(20, 12, 3), 5);
}

TEST(ProtocolTest, EndToEndHonest) {
  const FieldModulus mod(131);
  std::mt19937_64 gen(35);
  for (Scheme scheme : {Scheme::kWoodruffYekhanin, Scheme::kGamma1, Scheme::kGamma2}) {
    const int b = scheme == Scheme::kWoodruffYekhanin ? 0 : 3;
    const PirParams p = select_params(256, 8, 6, 1, b, scheme, mod);
    const auto x = random_database(256, mod, gen());
    const EncodedDatabase db(p, x);
    for (int trial = 0; trial < 20; ++trial) {
      const u64 i = 1 + gen() % 256;
      const QueryBundle bundle = query_gen(p, i, gen());
      const auto tuples = derive_tuples(bundle.aux, honest_answers(db, bundle), p.k);
      const OutputList out = reconstruct(p, tuples);
      ASSERT_EQ(out.values, std::vector<FieldElement>{x[i - 1]});
    }
  }
}

}  // namespace
}  // namespace ldpir
