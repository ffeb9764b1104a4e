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

#include "ldpir/poly.h"

#include <algorithm>
#include <functional>
#include <string>

#include "ldpir/random.h"

namespace ldpir {

Polynomial::Polynomial(FieldModulus mod, std::vector<FieldElement> coeffs)
    : mod_(mod), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.modulus() == mod_)) throw ModulusMismatch("coefficient from another field");
  }
  trim();
}

Polynomial::Polynomial(FieldModulus mod, std::initializer_list<u64> coeffs) : mod_(mod) {
  coeffs_.reserve(coeffs.size());
  for (u64 c : coeffs) coeffs_.push_back(mod(c));
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.modulus(), std::vector<FieldElement>{c});
}

Polynomial Polynomial::monomial(FieldModulus mod, int e) {
  std::vector<FieldElement> c(e + 1, mod.zero());
  c[e] = mod.one();
  return Polynomial(mod, std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return mod_.zero();
  return coeffs_[i];
}

FieldElement Polynomial::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of zero");
  return coeffs_.back();
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  if (!(x.modulus() == mod_)) throw ModulusMismatch("evaluation point from another field");
  u64 acc = 0;
  const u64 xv = x.value();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = mod_.add(mod_.mul(acc, xv), it->value());
  }
  return FieldElement::from_canonical(mod_, acc);
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> d;
  if (coeffs_.size() > 1) d.reserve(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * mod_(i));
  return Polynomial(mod_, std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!(mod_ == o.mod_)) throw ModulusMismatch("polynomials from different fields");
  std::vector<FieldElement> r(std::max(coeffs_.size(), o.coeffs_.size()), mod_.zero());
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return Polynomial(mod_, std::move(r));
}

Polynomial Polynomial::operator-() const {
  std::vector<FieldElement> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.push_back(-c);
  return Polynomial(mod_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!(mod_ == o.mod_)) throw ModulusMismatch("polynomials from different fields");
  if (is_zero() || o.is_zero()) return Polynomial(mod_);
  std::vector<FieldElement> r(coeffs_.size() + o.coeffs_.size() - 1, mod_.zero());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(mod_, std::move(r));
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
  std::vector<FieldElement> r;
  r.reserve(coeffs_.size());
  for (const auto& x : coeffs_) r.push_back(x * c);
  return Polynomial(mod_, std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (!(mod_ == d.mod_)) throw ModulusMismatch("polynomials from different fields");
  if (degree() < d.degree()) return {Polynomial(mod_), *this};
  std::vector<FieldElement> rem = coeffs_;
  std::vector<FieldElement> quo(coeffs_.size() - d.coeffs_.size() + 1, mod_.zero());
  const FieldElement lead_inv = d.leading().inv();
  const int dd = d.degree();
  for (int i = degree(); i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    const FieldElement factor = rem[i] * lead_inv;
    quo[i - dd] = factor;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= factor * d.coeffs_[j];
  }
  rem.resize(dd, mod_.zero());
  return {Polynomial(mod_, std::move(quo)), Polynomial(mod_, std::move(rem))};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

bool Polynomial::operator==(const Polynomial& o) const {
  return mod_ == o.mod_ && coeffs_ == o.coeffs_;
}

bool Polynomial::operator<(const Polynomial& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i].value() != o.coeffs_[i].value()) return coeffs_[i].value() < o.coeffs_[i].value();
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const u64 c = f.coeffs()[i].value();
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial poly_powmod(const Polynomial& base, u64 e, const Polynomial& m) {
  Polynomial result = Polynomial::constant(m.modulus().one()) % m;
  Polynomial b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

Polynomial hermite_interpolate(std::span<const HermiteSample> samples) {
  if (samples.empty()) throw ShapeError("hermite_interpolate needs at least one sample");
  const FieldModulus mod = samples.front().lambda.modulus();
  const size_t h = samples.size();
  for (size_t a = 0; a < h; ++a) {
    for (size_t b = a + 1; b < h; ++b) {
      if (samples[a].lambda == samples[b].lambda) {
        throw DuplicatePoint("evaluation point " + std::to_string(samples[a].lambda.value()) +
                             " repeated");
      }
    }
  }

  // Each point appears twice in the node list z; the first divided difference
  // across a repeated node is the supplied derivative.
  const size_t n = 2 * h;
  std::vector<FieldElement> z, table;
  z.reserve(n);
  table.reserve(n);
  for (const auto& s : samples) {
    z.push_back(s.lambda);
    z.push_back(s.lambda);
    table.push_back(s.alpha);
    table.push_back(s.alpha);
  }
  // In-place divided differences: after pass r, table[i] = f[z_{i-r}..z_i]
  // for i >= r, and table[r-1] holds the Newton coefficient c_{r-1}.
  for (size_t r = 1; r < n; ++r) {
    for (size_t i = n - 1; i >= r; --i) {
      if (r == 1 && i % 2 == 1) {
        table[i] = samples[i / 2].beta;
      } else {
        table[i] = (table[i] - table[i - 1]) / (z[i] - z[i - r]);
      }
    }
  }

  // Newton form to monomial basis, Horner style from the top.
  std::vector<FieldElement> poly{table[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    // poly = poly * (x - z_i) + c_i
    std::vector<FieldElement> next(poly.size() + 1, mod.zero());
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * z[i];
    }
    next[0] += table[i];
    poly = std::move(next);
  }
  return Polynomial(mod, std::move(poly));
}

namespace {

void split_linear(const Polynomial& g, CounterRng& rng, std::vector<FieldElement>& out) {
  const FieldModulus& mod = g.modulus();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  const u64 half = (mod.p() - 1) / 2;
  const Polynomial one = Polynomial::constant(mod.one());
  for (;;) {
    const Polynomial probe(mod, std::vector<FieldElement>{rng.element(mod), mod.one()});
    Polynomial h = poly_gcd(poly_powmod(probe, half, g) - one, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, rng, out);
      split_linear(g.divmod(h).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FieldElement> poly_roots(const Polynomial& q, u64 seed) {
  if (q.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
  const FieldModulus& mod = q.modulus();
  std::vector<FieldElement> roots;
  if (q.degree() == 0) return roots;
  if (mod.p() <= kExhaustiveRootLimit) {
    for (u64 x = 0; x < mod.p(); ++x) {
      const FieldElement fx = FieldElement::from_canonical(mod, x);
      if (q.eval(fx).is_zero()) roots.push_back(fx);
    }
    return roots;
  }
  const Polynomial x = Polynomial::monomial(mod, 1);
  const Polynomial g = poly_gcd(poly_powmod(x, mod.p(), q) - x, q);
  CounterRng rng(seed);
  split_linear(g, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

int order1_agreement_count(const Polynomial& f, std::span<const HermiteSample> samples) {
  const Polynomial df = f.derivative();
  int count = 0;
  for (const auto& s : samples) {
    if (f.eval(s.lambda) == s.alpha && df.eval(s.lambda) == s.beta) ++count;
  }
  return count;
}

}  // namespace ldpir
