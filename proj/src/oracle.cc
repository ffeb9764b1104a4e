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

#include "ldpir/oracle.h"

#include <algorithm>
#include <string>

#include "ldpir/protocol.h"

namespace ldpir {
namespace {

// p^e, or limit+1 once it exceeds limit.
u64 capped_power(u64 p, u64 e, u64 limit) {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) {
    if (r > limit / p) return limit + 1;
    r *= p;
  }
  return r;
}

// Increments a little-endian base-p counter; false on wraparound.
bool advance(std::vector<u64>& digits, u64 p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

}  // namespace

std::vector<Polynomial> brute_force_list(std::span<const HermiteSample> tuples, int wt, int b,
                                         const FieldModulus& mod, const OracleLimits& limits) {
  if (mod.p() > limits.max_p || wt > limits.max_wt || wt < 0) {
    throw OracleTooLarge("p=" + std::to_string(mod.p()) + ", wt=" + std::to_string(wt));
  }
  const u64 total = capped_power(mod.p(), static_cast<u64>(wt + 1), limits.max_enumeration);
  if (total > limits.max_enumeration) throw OracleTooLarge("enumeration too large");
  const int need = static_cast<int>(tuples.size()) - b;

  std::vector<Polynomial> out;
  std::vector<u64> digits(wt + 1, 0);
  // digits[wt] is the most significant coefficient; enumeration runs
  // lexicographically from the top coefficient down.
  do {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(digits.size());
    for (u64 d : digits) coeffs.push_back(FieldElement::from_canonical(mod, d));
    Polynomial g(mod, std::move(coeffs));
    if (order1_agreement_count(g, tuples) >= need) out.push_back(std::move(g));
  } while (advance(digits, mod.p()));
  std::sort(out.begin(), out.end());
  return out;
}

PrivacyDistributions privacy_enumerate(const PirParams& params, u64 i1, u64 i2,
                                       std::span<const int> servers, const OracleLimits& limits) {
  const FieldModulus& mod = params.modulus;
  const u64 dims = static_cast<u64>(params.m) * static_cast<u64>(params.t);
  const u64 total = capped_power(mod.p(), dims, limits.max_enumeration);
  if (total > limits.max_enumeration) throw OracleTooLarge("p^(m t) exceeds the enumeration limit");
  for (int j : servers) {
    if (j < 0 || j >= params.ell) throw ShapeError("server position out of range");
  }

  PrivacyDistributions out;
  std::vector<u64> digits(dims, 0);
  std::vector<FieldVector> r(params.t, FieldVector(mod, static_cast<size_t>(params.m)));
  do {
    for (int s = 0; s < params.t; ++s) {
      for (int c = 0; c < params.m; ++c) r[s].raw()[c] = digits[s * params.m + c];
    }
    for (auto [index, dist] : {std::pair{i1, &out.first}, std::pair{i2, &out.second}}) {
      const std::vector<Query> qs = make_queries(params, index, r);
      std::vector<u64> key;
      key.reserve(servers.size() * params.m);
      for (int j : servers) {
        for (u64 e : qs[j].q.raw()) key.push_back(e);
      }
      ++(*dist)[key];
    }
  } while (advance(digits, mod.p()));
  return out;
}

}  // namespace ldpir
