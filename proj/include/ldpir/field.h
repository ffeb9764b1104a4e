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

// Prime-field arithmetic. A FieldModulus is a cheap copyable handle to an
// interned modulus record; two handles compare equal iff they name the same
// prime. FieldElement carries its modulus so that mixing fields is caught at
// run time.

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "ldpir/errors.h"

namespace ldpir {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

namespace detail {
struct ModulusData {
  u64 p;
  int bit_width;
  bool narrow;      // p < 2^32: products fit in 64 bits
  u64 barrett;      // floor(2^64 / p), narrow moduli only
  u64 two64;        // 2^64 mod p, narrow moduli only

  u64 reduce64(u64 x) const {
    if (!narrow) return x % p;
    u64 q = static_cast<u64>((static_cast<u128>(x) * barrett) >> 64);
    u64 r = x - q * p;
    if (r >= p) r -= p;
    if (r >= p) r -= p;
    return r;
  }
  u64 reduce128(u128 x) const {
    if (!narrow) return static_cast<u64>(x % p);
    const u64 hi = reduce64(static_cast<u64>(x >> 64));
    return reduce64(reduce64(hi * two64) + reduce64(static_cast<u64>(x)));
  }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;  // p < 2^63, no overflow
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const {
    if (narrow) return reduce64(a * b);
    return static_cast<u64>((static_cast<u128>(a) * b) % p);
  }
};
}  // namespace detail

class FieldElement;

class FieldModulus {
 public:
  // Throws InvalidModulus unless p is a prime with 2 < p < 2^63.
  explicit FieldModulus(u64 p);

  u64 p() const { return d_->p; }
  // ceil(log2 p).
  int bit_width() const { return d_->bit_width; }
  // Bytes needed to store one canonical residue.
  int byte_width() const { return (d_->bit_width + 7) / 8; }

  FieldElement operator()(u64 v) const;
  FieldElement zero() const;
  FieldElement one() const;

  // Raw residue arithmetic. Inputs must already be canonical.
  u64 add(u64 a, u64 b) const { return d_->add(a, b); }
  u64 sub(u64 a, u64 b) const { return d_->sub(a, b); }
  u64 neg(u64 a) const { return a == 0 ? 0 : d_->p - a; }
  u64 mul(u64 a, u64 b) const { return d_->mul(a, b); }
  u64 reduce(u64 x) const { return d_->reduce64(x); }
  u64 reduce(u128 x) const { return d_->reduce128(x); }
  u64 pow(u64 a, u64 e) const;
  // Throws DivisionByZero on a == 0.
  u64 inv(u64 a) const;

  bool operator==(const FieldModulus& o) const { return d_ == o.d_; }

  // By-value copy of the constants, for loops where the compiler cannot
  // prove the pointer target unchanged.
  detail::ModulusData data() const { return *d_; }

 private:
  const detail::ModulusData* d_;
};

class FieldElement {
 public:
  FieldElement(FieldModulus mod, u64 v) : mod_(mod), v_(mod.reduce(v)) {}

  u64 value() const { return v_; }
  const FieldModulus& modulus() const { return mod_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const {
    check(o);
    return raw(mod_.add(v_, o.v_));
  }
  FieldElement operator-(const FieldElement& o) const {
    check(o);
    return raw(mod_.sub(v_, o.v_));
  }
  FieldElement operator*(const FieldElement& o) const {
    check(o);
    return raw(mod_.mul(v_, o.v_));
  }
  FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
  FieldElement operator-() const { return raw(mod_.neg(v_)); }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inv() const { return raw(mod_.inv(v_)); }
  // 0^0 = 1.
  FieldElement pow(u64 e) const { return raw(mod_.pow(v_, e)); }

  bool operator==(const FieldElement& o) const {
    return mod_ == o.mod_ && v_ == o.v_;
  }
  // Orders by residue; only meaningful within one field.
  bool operator<(const FieldElement& o) const { return v_ < o.v_; }

  // Wraps a residue already known to be canonical.
  static FieldElement from_canonical(FieldModulus mod, u64 v) {
    return FieldElement(mod, v, 0);
  }

 private:
  FieldElement(FieldModulus mod, u64 v, int) : mod_(mod), v_(v) {}
  FieldElement raw(u64 v) const { return FieldElement(mod_, v, 0); }
  void check(const FieldElement& o) const {
    if (!(mod_ == o.mod_)) throw ModulusMismatch("operands from different fields");
  }

  FieldModulus mod_;
  u64 v_;
};

inline FieldElement FieldModulus::operator()(u64 v) const { return FieldElement(*this, v); }
inline FieldElement FieldModulus::zero() const { return FieldElement::from_canonical(*this, 0); }
inline FieldElement FieldModulus::one() const { return FieldElement::from_canonical(*this, 1); }

inline FieldElement inv(const FieldElement& a) { return a.inv(); }
inline FieldElement pow(const FieldElement& a, u64 e) { return a.pow(e); }

inline std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.value();
}

// Dense vector of canonical residues over one modulus.
class FieldVector {
 public:
  explicit FieldVector(FieldModulus mod, size_t n = 0) : mod_(mod), v_(n, 0) {}
  // Reduces every entry.
  FieldVector(FieldModulus mod, std::vector<u64> values);
  FieldVector(FieldModulus mod, const std::vector<FieldElement>& values);

  size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  const FieldModulus& modulus() const { return mod_; }

  FieldElement operator[](size_t c) const { return FieldElement::from_canonical(mod_, v_[c]); }
  void set(size_t c, const FieldElement& e);

  // Residues in [0, p). Writers must keep them canonical.
  std::span<const u64> raw() const { return v_; }
  std::span<u64> raw() { return v_; }
  std::vector<FieldElement> elements() const;

  bool operator==(const FieldVector& o) const { return mod_ == o.mod_ && v_ == o.v_; }

 private:
  FieldModulus mod_;
  std::vector<u64> v_;
};

// Sum of products with deferred reduction. Narrow moduli accumulate exact
// 64-bit products in a 128-bit register and reduce once at the end.
class DotAccumulator {
 public:
  explicit DotAccumulator(const FieldModulus& mod) : mod_(mod), narrow_(mod.p() < (u64{1} << 32)) {}

  void add_product(u64 a, u64 b) {
    if (narrow_) {
      acc_ += a * b;
    } else {
      wide_ = mod_.add(wide_, mod_.mul(a, b));
    }
  }
  void add(u64 a) {
    if (narrow_) {
      acc_ += a;
    } else {
      wide_ = mod_.add(wide_, a);
    }
  }
  u64 value() const { return narrow_ ? mod_.reduce(acc_) : wide_; }

 private:
  const FieldModulus& mod_;
  bool narrow_;
  u128 acc_ = 0;
  u64 wide_ = 0;
};

// sum_c a_c b_c over canonical residues of equal length.
u64 dot_product(std::span<const u64> a, std::span<const u64> b, const FieldModulus& mod);

}  // namespace ldpir
