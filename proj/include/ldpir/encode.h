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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldpir/field.h"

namespace ldpir {

enum class Scheme {
  kWoodruffYekhanin,  // unique decoding baseline, no Byzantine tolerance
  kGamma1,            // overinterpolation list decoder
  kGamma2,            // weighted-degree bivariate list decoder
};

std::string scheme_name(Scheme s);
// Accepts "WY", "G1", "G2" (case-insensitive). Throws FormatError.
Scheme parse_scheme(const std::string& s);

struct PirParams {
  Scheme scheme = Scheme::kGamma1;
  u64 n = 0;    // database size
  int ell = 0;  // servers
  int k = 0;    // responders used for reconstruction
  int t = 0;    // privacy threshold
  int b = 0;    // Byzantine bound
  int w = 0;    // degree of the database polynomial
  int m = 0;    // variables; smallest with C(m, w) >= n
  FieldModulus modulus;
  std::vector<FieldElement> lambdas;  // one nonzero point per server

  // Degree of f(x) = F(G(x)).
  int wt() const { return w * t; }
  // Weighted-degree cap 2(k-b)-1 used by the Gamma2 decoder.
  int list_degree_cap() const { return 2 * (k - b) - 1; }
};

// Exact Gamma2 feasibility: the bivariate has more unknowns than the 2k
// constraints it must satisfy.
bool gamma2_feasible(int k, int b, int t, int w);

// Smallest m >= w with C(m, w) >= n (exact big-integer binomials).
int min_variables(u64 n, int w);

// C(n, r) saturated at UINT64_MAX.
u64 binomial_saturating(u64 n, u64 r);

// Builds and validates parameters for an explicit degree w. Server points
// default to lambda_j = j (1-based). Throws InfeasibleParameters.
PirParams make_params(Scheme scheme, u64 n, int ell, int k, int t, int b, int w,
                      FieldModulus modulus, std::optional<std::vector<FieldElement>> lambdas = {});

// Degree parameter per scheme (see select_params). Throws
// InfeasibleParameters when no w >= 1 qualifies.
int choose_degree(Scheme scheme, int k, int t, int b);

// Chooses w per scheme and builds parameters:
//   WY: floor((2k-1)/t)
//   G1: floor(2(k-b-2)/t), at least 1
//   G2: largest w <= floor((k-b)^2/(kt)) passing gamma2_feasible
PirParams select_params(u64 n, int ell, int k, int t, int b, Scheme scheme, FieldModulus modulus);

// Throws InfeasibleParameters if any invariant fails.
void validate_params(const PirParams& p);

// The (i-1)-th w-subset of {1..m} in colexicographic order, ascending.
// Throws IndexOutOfRange unless 1 <= i <= C(m, w).
std::vector<int> index_encode(u64 i, int m, int w);
// Inverse of index_encode: the 1-based rank of a w-subset of {1..m}.
u64 index_rank(std::span<const int> support);

struct EvalGradient {
  FieldElement u;
  FieldVector v;
};

// Database x together with its encoding; F(z) = sum_j x_j prod_{c in E(j)} z_c.
class EncodedDatabase {
 public:
  EncodedDatabase(PirParams params, std::vector<FieldElement> x);

  const PirParams& params() const { return params_; }
  const std::vector<FieldElement>& x() const { return x_; }
  // Zero-based query coordinates touched by record i (1-based).
  std::span<const std::uint32_t> coordinates(u64 i) const;

  // F(q) and its gradient at q, O(n w) multiplications.
  EvalGradient eval_and_gradient(const FieldVector& q) const;

 private:
  // Calls deposit(c, a, b) once per term a*b of the gradient coordinate c.
  template <typename Deposit>
  void accumulate_gradient(std::span<const u64> qv, Deposit deposit, const detail::ModulusData& md) const;

  PirParams params_;
  std::vector<FieldElement> x_;
  std::vector<u64> xv_;
  std::vector<u64> linear_grad_;  // w = 1 only
  std::vector<std::uint32_t> coords_;  // n * w, row-major
};

// File layout: "LDPIR1\n", p in decimal, "\n", n in decimal, "\n", then n
// residues, each byte_width() bytes little-endian.
struct DatabaseFile {
  FieldModulus modulus;
  std::vector<FieldElement> x;
};

std::vector<std::uint8_t> encode_database_file(const FieldModulus& mod,
                                               std::span<const FieldElement> x);
DatabaseFile decode_database_file(std::span<const std::uint8_t> bytes);
void write_database_file(const std::filesystem::path& path, const FieldModulus& mod,
                         std::span<const FieldElement> x);
DatabaseFile read_database_file(const std::filesystem::path& path);

// n uniform residues from a seeded stream.
std::vector<FieldElement> random_database(u64 n, const FieldModulus& mod, u64 seed);

}  // namespace ldpir
