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

#include "ldpir/field.h"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace ldpir {
namespace {

u64 mulmod(u64 a, u64 b, u64 n) {
  return static_cast<u64>((static_cast<u128>(a) * b) % n);
}

u64 powmod(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

const detail::ModulusData* intern(u64 p) {
  static std::mutex mu;
  static std::map<u64, std::unique_ptr<detail::ModulusData>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[p];
  if (!slot) {
    auto d = std::make_unique<detail::ModulusData>();
    d->p = p;
    // p is an odd prime, never a power of two, so ceil(log2 p) is its bit length.
    d->bit_width = std::bit_width(p);
    d->narrow = p < (u64{1} << 32);
    d->barrett = d->narrow ? static_cast<u64>((static_cast<u128>(1) << 64) / p) : 0;
    d->two64 = d->narrow ? static_cast<u64>((static_cast<u128>(1) << 64) % p) : 0;
    slot = std::move(d);
  }
  return slot.get();
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set below 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldModulus::FieldModulus(u64 p) {
  if (p <= 2 || p >= (u64{1} << 63)) {
    throw InvalidModulus("modulus " + std::to_string(p) + " outside (2, 2^63)");
  }
  if (!is_prime(p)) throw InvalidModulus(std::to_string(p) + " is not prime");
  d_ = intern(p);
}

u64 FieldModulus::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 FieldModulus::inv(u64 a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  return pow(a, d_->p - 2);
}

FieldVector::FieldVector(FieldModulus mod, std::vector<u64> values) : mod_(mod), v_(std::move(values)) {
  const detail::ModulusData md = mod_.data();
  for (u64& x : v_) x = md.reduce64(x);
}

FieldVector::FieldVector(FieldModulus mod, const std::vector<FieldElement>& values)
    : mod_(mod), v_(values.size()) {
  for (size_t c = 0; c < values.size(); ++c) {
    if (!(values[c].modulus() == mod_)) throw ModulusMismatch("element from another field");
    v_[c] = values[c].value();
  }
}

void FieldVector::set(size_t c, const FieldElement& e) {
  if (!(e.modulus() == mod_)) throw ModulusMismatch("element from another field");
  v_.at(c) = e.value();
}

std::vector<FieldElement> FieldVector::elements() const {
  std::vector<FieldElement> out;
  out.reserve(v_.size());
  for (u64 x : v_) out.push_back(FieldElement::from_canonical(mod_, x));
  return out;
}

u64 dot_product(std::span<const u64> a, std::span<const u64> b, const FieldModulus& mod) {
  if (a.size() != b.size()) throw ShapeError("dot product of vectors with different lengths");
  const detail::ModulusData md = mod.data();
  if (md.narrow) {
    u128 acc = 0;
    for (size_t c = 0; c < a.size(); ++c) acc += a[c] * b[c];
    return md.reduce128(acc);
  }
  u64 acc = 0;
  for (size_t c = 0; c < a.size(); ++c) acc = md.add(acc, md.mul(a[c], b[c]));
  return acc;
}

}  // namespace ldpir
