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

// Client and server algorithms shared by all three schemes. Queries are
// Shamir-style shares G(lambda_j) of the encoded index; each server answers
// with F and its gradient at its share; the client turns answers into
// order-1 samples (lambda_j, f(lambda_j), f'(lambda_j)) of f = F o G and
// decodes them.

#include <optional>
#include <span>
#include <vector>

#include "ldpir/encode.h"
#include "ldpir/poly.h"

namespace ldpir {

struct Query {
  FieldVector q;

  bool operator==(const Query&) const = default;
};

// Client-side secret state of one retrieval.
struct Aux {
  std::vector<FieldElement> lambdas;
  std::vector<FieldVector> r;  // t random vectors of length m
  u64 index = 0;                             // 1-based record index
};

struct Response {
  FieldElement u;
  FieldVector v;

  bool operator==(const Response&) const = default;
};

// nullopt means the server stayed silent.
using Answer = std::optional<Response>;

struct OutputList {
  std::vector<FieldElement> values;     // distinct constant terms, ascending
  std::vector<Polynomial> candidates;   // distinct candidate polynomials, sorted

  bool contains(const FieldElement& x) const;
};

struct QueryBundle {
  std::vector<Query> queries;  // one per server
  Aux aux;
};

// Queries for index i under explicit randomness r (t vectors of length m).
std::vector<Query> make_queries(const PirParams& params, u64 i,
                                const std::vector<FieldVector>& r);

// Draws r uniformly from the seeded stream and builds the queries.
QueryBundle query_gen(const PirParams& params, u64 i, u64 seed);

Response answer(const EncodedDatabase& db, const Query& q);

// G'(x) = sum_s s x^{s-1} r_s.
FieldVector query_derivative(const Aux& aux, const FieldElement& x);
// <v, G'(x)> computed as sum_s s x^{s-1} <v, r_s>, without forming G'(x).
FieldElement derivative_inner(const Aux& aux, const FieldElement& x, const FieldVector& v);

// Server positions (0-based) of the k lowest-indexed non-silent answers, or
// of `preferred` filtered to non-silent ones when given. Throws
// InsufficientResponses when fewer than k respond.
std::vector<int> select_responders(std::span<const Answer> answers, int k,
                                   std::optional<std::span<const int>> preferred = {});

// (lambda_j, u_j, <v_j, G'(lambda_j)>) for the selected responders.
std::vector<HermiteSample> derive_tuples(const Aux& aux, std::span<const Answer> answers, int k,
                                         std::optional<std::span<const int>> preferred = {});

// Baseline reconstruction, valid only when every tuple is honest.
FieldElement reconstruct_wy(std::span<const HermiteSample> tuples);

enum class G1Mode { kNaive, kOptimized };

// Overinterpolation decoder. Throws InfeasibleParameters unless
// 0 <= b <= k-2 and wt <= 2(k-b)-2.
OutputList reconstruct_g1(std::span<const HermiteSample> tuples, int wt, int b,
                          G1Mode mode = G1Mode::kOptimized);

// Weighted-degree decoder. Throws InfeasibleParameters when the
// interpolation has too few unknowns.
OutputList reconstruct_g2(std::span<const HermiteSample> tuples, int wt, int b, u64 seed = 0);

// Scheme dispatch; the baseline yields a single-element list.
OutputList reconstruct(const PirParams& params, std::span<const HermiteSample> tuples,
                       G1Mode mode = G1Mode::kOptimized, u64 seed = 0);

// C(k, h) / C(k-b, h) with h = floor(wt/2)+1, as an exact rational test:
// true iff size <= that ratio.
bool within_g1_list_bound(size_t size, int k, int b, int wt);
// floor((2(k-b)-1) / wt).
int g2_list_bound(int k, int b, int wt);

}  // namespace ldpir
