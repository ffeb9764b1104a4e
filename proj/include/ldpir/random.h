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
#include <limits>

#include "ldpir/field.h"

namespace ldpir {

// Counter-based generator: the i-th output is SplitMix64's finaliser applied
// to seed + i * golden-gamma. Output depends only on (seed, i), so streams are
// reproducible bit-for-bit on every platform.
class CounterRng {
 public:
  using result_type = u64;

  explicit CounterRng(u64 seed) : seed_(seed) {}
  // Independent stream derived from a parent seed and a label.
  CounterRng(u64 seed, u64 label) : seed_(mix(seed ^ mix(label + kGamma))) {}

  static constexpr u64 min() { return 0; }
  static constexpr u64 max() { return std::numeric_limits<u64>::max(); }

  u64 operator()() { return mix(seed_ + (++counter_) * kGamma); }

  // Uniform in [0, bound) by rejection; bound > 0.
  u64 uniform(u64 bound) {
    const u64 limit = max() - (max() % bound + 1) % bound;
    u64 x;
    do {
      x = (*this)();
    } while (x > limit);
    return x % bound;
  }

  FieldElement element(const FieldModulus& mod) {
    return FieldElement::from_canonical(mod, uniform(mod.p()));
  }
  FieldElement nonzero_element(const FieldModulus& mod) {
    return FieldElement::from_canonical(mod, 1 + uniform(mod.p() - 1));
  }

  u64 counter() const { return counter_; }

 private:
  static constexpr u64 kGamma = 0x9E3779B97F4A7C15ULL;

  static u64 mix(u64 z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  u64 seed_;
  u64 counter_ = 0;
};

}  // namespace ldpir
