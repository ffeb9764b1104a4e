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

// Exhaustive references for the decoders and the privacy property. Both are
// definition-true by enumeration and share no code path with the decoders
// beyond polynomial evaluation.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ldpir/encode.h"
#include "ldpir/poly.h"

namespace ldpir {

struct OracleLimits {
  u64 max_p = 17;
  int max_wt = 2;
  u64 max_enumeration = 10'000'000;
};

// Every g over F_p with deg g <= wt agreeing with at least k-b samples to
// order one, in lexicographic coefficient order of enumeration, then sorted
// like decoder output. Throws OracleTooLarge beyond `limits`.
std::vector<Polynomial> brute_force_list(std::span<const HermiteSample> tuples, int wt, int b,
                                         const FieldModulus& mod, const OracleLimits& limits = {});

// Multiset of restricted query tuples: key = concatenated q_j for j in T.
using QueryDistribution = std::map<std::vector<u64>, u64>;

struct PrivacyDistributions {
  QueryDistribution first;
  QueryDistribution second;
};

// Exact distributions of (q_j)_{j in T} over all p^{m t} choices of the
// client randomness, for retrieval indices i1 and i2. `servers` holds
// 0-based server positions.
PrivacyDistributions privacy_enumerate(const PirParams& params, u64 i1, u64 i2,
                                       std::span<const int> servers,
                                       const OracleLimits& limits = {});

}  // namespace ldpir
