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
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "ldpir/field.h"

namespace ldpir {

// Univariate polynomial over F_p in ascending-degree coefficient order.
// Trailing zeros are always stripped, so the zero polynomial has no
// coefficients and degree() == kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Polynomial(FieldModulus mod) : mod_(mod) {}
  Polynomial(FieldModulus mod, std::vector<FieldElement> coeffs);
  Polynomial(FieldModulus mod, std::initializer_list<u64> coeffs);

  static Polynomial constant(const FieldElement& c);
  // x^e.
  static Polynomial monomial(FieldModulus mod, int e);

  const FieldModulus& modulus() const { return mod_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of x^i; zero past the degree.
  FieldElement coeff(int i) const;
  FieldElement leading() const;

  FieldElement operator()(const FieldElement& x) const { return eval(x); }
  FieldElement eval(const FieldElement& x) const;
  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const FieldElement& c) const;
  Polynomial operator-() const;
  // Polynomial division; throws ZeroPolynomial on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  // Deterministic total order: by degree, then coefficients from the top.
  bool operator<(const Polynomial& o) const;

 private:
  void trim();

  FieldModulus mod_;
  std::vector<FieldElement> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

Polynomial poly_gcd(Polynomial a, Polynomial b);
// base^e mod m.
Polynomial poly_powmod(const Polynomial& base, u64 e, const Polynomial& m);

// An order-1 evaluation: point, claimed value, claimed derivative.
struct HermiteSample {
  FieldElement lambda;
  FieldElement alpha;
  FieldElement beta;

  bool operator==(const HermiteSample&) const = default;
};

// The unique polynomial of degree <= 2h-1 matching value and derivative at
// each of the h samples. Throws DuplicatePoint if two samples share a point.
Polynomial hermite_interpolate(std::span<const HermiteSample> samples);

// Every x in F_p with q(x) = 0, ascending. Throws ZeroPolynomial on q = 0.
// Small fields are scanned exhaustively; larger ones split
// gcd(x^p - x, q) with a seeded equal-degree factorisation.
std::vector<FieldElement> poly_roots(const Polynomial& q, u64 seed = 0);

// Fields up to this size use the exhaustive root scan.
inline constexpr u64 kExhaustiveRootLimit = u64{1} << 16;

// Number of samples j with f(lambda_j) = alpha_j and f'(lambda_j) = beta_j.
int order1_agreement_count(const Polynomial& f, std::span<const HermiteSample> samples);

}  // namespace ldpir
