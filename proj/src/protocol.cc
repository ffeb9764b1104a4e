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

#include "ldpir/protocol.h"

#include <algorithm>
#include <string>

#include "ldpir/listdecode.h"
#include "ldpir/random.h"

namespace ldpir {
namespace {

// Advances idx to the next h-subset of {0..k-1} in lexicographic order.
bool next_subset(std::vector<int>& idx, int k) {
  const int h = static_cast<int>(idx.size());
  int pos = h - 1;
  while (pos >= 0 && idx[pos] == k - h + pos) --pos;
  if (pos < 0) return false;
  ++idx[pos];
  for (int r = pos + 1; r < h; ++r) idx[r] = idx[r - 1] + 1;
  return true;
}

OutputList finish(std::vector<Polynomial> cp) {
  std::sort(cp.begin(), cp.end());
  cp.erase(std::unique(cp.begin(), cp.end()), cp.end());
  OutputList out;
  for (const auto& f : cp) out.values.push_back(f.coeff(0));
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  out.candidates = std::move(cp);
  return out;
}

}  // namespace

bool OutputList::contains(const FieldElement& x) const {
  return std::find(values.begin(), values.end(), x) != values.end();
}

std::vector<Query> make_queries(const PirParams& params, u64 i, const std::vector<FieldVector>& r) {
  const FieldModulus& mod = params.modulus;
  const int m = params.m;
  if (r.size() != static_cast<size_t>(params.t)) throw ShapeError("need t random vectors");
  for (const auto& rs : r) {
    if (rs.size() != static_cast<size_t>(m)) throw ShapeError("random vector length differs from m");
    if (!(rs.modulus() == mod)) throw ModulusMismatch("random vector from another field");
  }
  const std::vector<int> support = index_encode(i, m, params.w);

  const detail::ModulusData md = mod.data();
  std::vector<Query> out;
  out.reserve(params.lambdas.size());
  std::vector<u64> powers(params.t + 1);
  for (const auto& lambda : params.lambdas) {
    powers[0] = 1;
    for (int s = 1; s <= params.t; ++s) powers[s] = md.mul(powers[s - 1], lambda.value());
    Query q{FieldVector(mod, static_cast<size_t>(m))};
    const std::span<u64> acc = q.q.raw();
    for (int c : support) acc[c - 1] = 1;
    for (int s = 1; s <= params.t; ++s) {
      const u64 ps = powers[s];
      const std::span<const u64> rs = r[s - 1].raw();
      for (int c = 0; c < m; ++c) acc[c] = md.add(acc[c], md.mul(ps, rs[c]));
    }
    out.push_back(std::move(q));
  }
  return out;
}

QueryBundle query_gen(const PirParams& params, u64 i, u64 seed) {
  if (i < 1 || i > params.n) throw IndexOutOfRange("record index " + std::to_string(i) + " outside [1, n]");
  CounterRng rng(seed);
  QueryBundle out;
  out.aux.lambdas = params.lambdas;
  out.aux.index = i;
  const u64 p = params.modulus.p();
  for (int s = 0; s < params.t; ++s) {
    FieldVector rs(params.modulus, static_cast<size_t>(params.m));
    for (u64& e : rs.raw()) e = rng.uniform(p);
    out.aux.r.push_back(std::move(rs));
  }
  out.queries = make_queries(params, i, out.aux.r);
  return out;
}

Response answer(const EncodedDatabase& db, const Query& q) {
  EvalGradient g = db.eval_and_gradient(q.q);
  return {g.u, std::move(g.v)};
}

FieldVector query_derivative(const Aux& aux, const FieldElement& x) {
  if (aux.r.empty()) throw ShapeError("aux carries no randomness");
  const FieldModulus& mod = x.modulus();
  const detail::ModulusData md = mod.data();
  FieldVector out(mod, aux.r.front().size());
  const std::span<u64> acc = out.raw();
  u64 xpow = 1;  // x^{s-1}
  for (size_t s = 1; s <= aux.r.size(); ++s) {
    const u64 coef = md.mul(md.reduce64(static_cast<u64>(s)), xpow);
    const std::span<const u64> rs = aux.r[s - 1].raw();
    for (size_t c = 0; c < acc.size(); ++c) acc[c] = md.add(acc[c], md.mul(coef, rs[c]));
    xpow = md.mul(xpow, x.value());
  }
  return out;
}

FieldElement derivative_inner(const Aux& aux, const FieldElement& x, const FieldVector& v) {
  if (aux.r.empty()) throw ShapeError("aux carries no randomness");
  const FieldModulus& mod = x.modulus();
  if (v.size() != aux.r.front().size()) throw ShapeError("gradient length differs from m");
  if (!(v.modulus() == mod)) throw ModulusMismatch("gradient from another field");
  u64 total = 0;
  u64 xpow = 1;  // x^{s-1}
  for (size_t s = 1; s <= aux.r.size(); ++s) {
    const u64 coef = mod.mul(mod.reduce(static_cast<u64>(s)), xpow);
    total = mod.add(total, mod.mul(coef, dot_product(v.raw(), aux.r[s - 1].raw(), mod)));
    xpow = mod.mul(xpow, x.value());
  }
  return FieldElement::from_canonical(mod, total);
}

std::vector<int> select_responders(std::span<const Answer> answers, int k,
                                   std::optional<std::span<const int>> preferred) {
  std::vector<int> chosen;
  if (preferred) {
    for (int j : *preferred) {
      if (j < 0 || static_cast<size_t>(j) >= answers.size()) throw ShapeError("responder out of range");
      if (answers[j] && static_cast<int>(chosen.size()) < k) chosen.push_back(j);
    }
  } else {
    for (size_t j = 0; j < answers.size() && static_cast<int>(chosen.size()) < k; ++j) {
      if (answers[j]) chosen.push_back(static_cast<int>(j));
    }
  }
  if (static_cast<int>(chosen.size()) < k) {
    throw InsufficientResponses("only " + std::to_string(chosen.size()) + " of the required " +
                                std::to_string(k) + " servers responded");
  }
  return chosen;
}

std::vector<HermiteSample> derive_tuples(const Aux& aux, std::span<const Answer> answers, int k,
                                         std::optional<std::span<const int>> preferred) {
  if (answers.size() != aux.lambdas.size()) throw ShapeError("one answer slot per server expected");
  std::vector<HermiteSample> out;
  for (int j : select_responders(answers, k, preferred)) {
    const FieldElement& lambda = aux.lambdas[j];
    const Response& a = *answers[j];
    out.push_back({lambda, a.u, derivative_inner(aux, lambda, a.v)});
  }
  return out;
}

FieldElement reconstruct_wy(std::span<const HermiteSample> tuples) {
  const Polynomial f = hermite_interpolate(tuples);
  return f.coeff(0);
}

OutputList reconstruct_g1(std::span<const HermiteSample> tuples, int wt, int b, G1Mode mode) {
  const int k = static_cast<int>(tuples.size());
  if (k < 1) throw ShapeError("no tuples");
  if (b < 0 || b > k - 2) {
    throw InfeasibleParameters("G1 needs 0 <= b <= k-2 (k=" + std::to_string(k) + ", b=" +
                               std::to_string(b) + ")");
  }
  if (wt < 0 || wt > 2 * (k - b) - 2) {
    throw InfeasibleParameters("G1 needs wt <= 2(k-b)-2 (wt=" + std::to_string(wt) + ")");
  }
  const int h = (mode == G1Mode::kNaive) ? k - b : wt / 2 + 1;

  std::vector<Polynomial> cp;
  std::vector<int> idx(h);
  for (int r = 0; r < h; ++r) idx[r] = r;
  std::vector<HermiteSample> subset(h, tuples.front());
  do {
    for (int r = 0; r < h; ++r) subset[r] = tuples[idx[r]];
    Polynomial f = hermite_interpolate(subset);
    if (f.degree() > wt) continue;
    if (mode == G1Mode::kOptimized && order1_agreement_count(f, tuples) < k - b) continue;
    cp.push_back(std::move(f));
  } while (next_subset(idx, k));
  return finish(std::move(cp));
}

OutputList reconstruct_g2(std::span<const HermiteSample> tuples, int wt, int b, u64 seed) {
  const int k = static_cast<int>(tuples.size());
  if (k < 1) throw ShapeError("no tuples");
  if (b < 0 || b >= k) throw InfeasibleParameters("G2 needs 0 <= b < k");
  const WeightedBivariate q = interpolate_qbase(tuples, wt, 2 * (k - b) - 1);
  std::vector<Polynomial> cp;
  for (auto& f : rr_roots(q, wt, seed)) {
    if (order1_agreement_count(f, tuples) >= k - b) cp.push_back(std::move(f));
  }
  return finish(std::move(cp));
}

OutputList reconstruct(const PirParams& params, std::span<const HermiteSample> tuples, G1Mode mode,
                       u64 seed) {
  switch (params.scheme) {
    case Scheme::kWoodruffYekhanin: {
      OutputList out;
      Polynomial f = hermite_interpolate(tuples);
      out.values.push_back(f.coeff(0));
      out.candidates.push_back(std::move(f));
      return out;
    }
    case Scheme::kGamma1:
      return reconstruct_g1(tuples, params.wt(), params.b, mode);
    case Scheme::kGamma2:
      return reconstruct_g2(tuples, params.wt(), params.b, seed);
  }
  throw InfeasibleParameters("unknown scheme");
}

bool within_g1_list_bound(size_t size, int k, int b, int wt) {
  const u64 h = static_cast<u64>(wt / 2 + 1);
  const u128 num = binomial_saturating(static_cast<u64>(k), h);
  const u128 den = binomial_saturating(static_cast<u64>(k - b), h);
  return static_cast<u128>(size) * den <= num;
}

int g2_list_bound(int k, int b, int wt) { return (2 * (k - b) - 1) / wt; }

}  // namespace ldpir
