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

#include "ldpir/encode.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ldpir/listdecode.h"
#include "ldpir/random.h"

namespace ldpir {

using boost::multiprecision::cpp_int;

namespace {

cpp_int binomial_exact(u64 n, u64 r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  cpp_int c = 1;
  for (u64 i = 1; i <= r; ++i) {
    c *= n - r + i;
    c /= i;
  }
  return c;
}

[[noreturn]] void infeasible(const std::string& why) { throw InfeasibleParameters(why); }

}  // namespace

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kWoodruffYekhanin:
      return "WY";
    case Scheme::kGamma1:
      return "G1";
    case Scheme::kGamma2:
      return "G2";
  }
  return "?";
}

Scheme parse_scheme(const std::string& s) {
  std::string u;
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "WY") return Scheme::kWoodruffYekhanin;
  if (u == "G1" || u == "GAMMA1") return Scheme::kGamma1;
  if (u == "G2" || u == "GAMMA2") return Scheme::kGamma2;
  throw FormatError("unknown scheme '" + s + "'");
}

u64 binomial_saturating(u64 n, u64 r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  u128 c = 1;
  for (u64 i = 1; i <= r; ++i) {
    // c * (n-r+i) / i stays exact; bail once past 64 bits.
    c = c * (n - r + i) / i;
    if (c > std::numeric_limits<u64>::max()) return std::numeric_limits<u64>::max();
  }
  return static_cast<u64>(c);
}

bool gamma2_feasible(int k, int b, int t, int w) {
  if (w < 1 || t < 1 || k - b < 1) return false;
  return qbase_monomial_count(2 * (k - b) - 1, w * t) > 2 * k;
}

int min_variables(u64 n, int w) {
  if (w < 1) infeasible("degree parameter must be positive");
  const cpp_int target = n;
  auto enough = [&](u64 m) { return binomial_exact(m, static_cast<u64>(w)) >= target; };
  u64 lo = static_cast<u64>(w);
  if (enough(lo)) return static_cast<int>(lo);
  u64 hi = lo * 2;
  while (!enough(hi)) hi *= 2;
  // Invariant: !enough(lo), enough(hi).
  while (hi - lo > 1) {
    const u64 mid = lo + (hi - lo) / 2;
    (enough(mid) ? hi : lo) = mid;
  }
  if (hi > static_cast<u64>(std::numeric_limits<int>::max())) infeasible("variable count overflows");
  return static_cast<int>(hi);
}

void validate_params(const PirParams& p) {
  if (p.t < 1) infeasible("t must be at least 1");
  if (p.b < 0 || p.b > p.k - 2) infeasible("need 0 <= b <= k-2");
  if (!(p.t < p.k && p.k <= p.ell)) infeasible("need t < k <= ell");
  if (static_cast<u64>(p.ell) >= p.modulus.p()) infeasible("need ell < p");
  if (p.n < 1) infeasible("database must be nonempty");
  if (p.w < 1) infeasible("degree parameter must be positive");
  switch (p.scheme) {
    case Scheme::kWoodruffYekhanin:
      if (p.b != 0) infeasible("the baseline scheme tolerates no Byzantine servers");
      if (p.wt() > 2 * p.k - 1) infeasible("WY needs w*t <= 2k-1");
      break;
    case Scheme::kGamma1:
      if (p.wt() > 2 * (p.k - p.b) - 2) infeasible("G1 needs w*t <= 2(k-b)-2");
      break;
    case Scheme::kGamma2:
      if (!gamma2_feasible(p.k, p.b, p.t, p.w)) {
        infeasible("G2 interpolation has no more unknowns than constraints at w=" +
                   std::to_string(p.w));
      }
      break;
  }
  if (p.m != min_variables(p.n, p.w)) infeasible("m is not the minimal variable count");
  if (p.lambdas.size() != static_cast<size_t>(p.ell)) infeasible("need one point per server");
  for (size_t a = 0; a < p.lambdas.size(); ++a) {
    if (!(p.lambdas[a].modulus() == p.modulus)) infeasible("server point from another field");
    if (p.lambdas[a].is_zero()) infeasible("server points must be nonzero");
    for (size_t c = a + 1; c < p.lambdas.size(); ++c) {
      if (p.lambdas[a] == p.lambdas[c]) infeasible("server points must be distinct");
    }
  }
}

PirParams make_params(Scheme scheme, u64 n, int ell, int k, int t, int b, int w,
                      FieldModulus modulus, std::optional<std::vector<FieldElement>> lambdas) {
  PirParams p{scheme, n, ell, k, t, b, w, 0, modulus, {}};
  if (w < 1) infeasible("degree parameter must be positive");
  if (ell < 1 || static_cast<u64>(ell) >= modulus.p()) infeasible("need 1 <= ell < p");
  p.m = min_variables(n, w);
  if (lambdas) {
    p.lambdas = std::move(*lambdas);
  } else {
    for (int j = 1; j <= ell; ++j) p.lambdas.push_back(modulus(static_cast<u64>(j)));
  }
  validate_params(p);
  return p;
}

int choose_degree(Scheme scheme, int k, int t, int b) {
  if (t < 1 || k < 1) infeasible("need t >= 1 and k >= 1");
  switch (scheme) {
    case Scheme::kWoodruffYekhanin:
      return std::max(1, (2 * k - 1) / t);
    case Scheme::kGamma1:
      return std::max(1, 2 * (k - b - 2) / t);
    case Scheme::kGamma2: {
      const long long cap = static_cast<long long>(k - b) * (k - b) / (static_cast<long long>(k) * t);
      for (long long w = cap; w >= 1; --w) {
        if (gamma2_feasible(k, b, t, static_cast<int>(w))) return static_cast<int>(w);
      }
      infeasible("no w >= 1 makes G2 interpolation feasible at (k,b,t)=(" + std::to_string(k) + "," +
                 std::to_string(b) + "," + std::to_string(t) + ")");
    }
  }
  infeasible("unknown scheme");
}

PirParams select_params(u64 n, int ell, int k, int t, int b, Scheme scheme, FieldModulus modulus) {
  return make_params(scheme, n, ell, k, t, b, choose_degree(scheme, k, t, b), modulus);
}

std::vector<int> index_encode(u64 i, int m, int w) {
  if (m < 0 || w < 0 || w > m) throw IndexOutOfRange("need 0 <= w <= m");
  const u64 total = binomial_saturating(static_cast<u64>(m), static_cast<u64>(w));
  if (i < 1 || i > total) {
    throw IndexOutOfRange("index " + std::to_string(i) + " outside [1, C(m,w)]");
  }
  u64 rank = i - 1;
  std::vector<int> out(w);
  u64 upper = static_cast<u64>(m);  // exclusive bound on the next element
  for (int idx = w; idx >= 1; --idx) {
    // Largest c < upper with C(c, idx) <= rank; C(idx-1, idx) = 0 always fits.
    u64 lo = static_cast<u64>(idx - 1), hi = upper - 1;
    while (lo < hi) {
      const u64 mid = lo + (hi - lo + 1) / 2;
      if (binomial_saturating(mid, static_cast<u64>(idx)) <= rank) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    out[idx - 1] = static_cast<int>(lo) + 1;
    rank -= binomial_saturating(lo, static_cast<u64>(idx));
    upper = lo;
  }
  return out;
}

u64 index_rank(std::span<const int> support) {
  u64 rank = 0;
  for (size_t idx = 0; idx < support.size(); ++idx) {
    if (support[idx] < 1 || (idx > 0 && support[idx] <= support[idx - 1])) {
      throw IndexOutOfRange("support must be strictly increasing and 1-based");
    }
    rank += binomial_saturating(static_cast<u64>(support[idx] - 1), idx + 1);
  }
  return rank + 1;
}

EncodedDatabase::EncodedDatabase(PirParams params, std::vector<FieldElement> x)
    : params_(std::move(params)), x_(std::move(x)) {
  validate_params(params_);
  if (x_.size() != params_.n) throw ShapeError("database length differs from n");
  const int w = params_.w;
  coords_.resize(x_.size() * static_cast<size_t>(w));
  for (u64 i = 1; i <= params_.n; ++i) {
    const std::vector<int> s = index_encode(i, params_.m, w);
    for (int r = 0; r < w; ++r) coords_[(i - 1) * w + r] = static_cast<std::uint32_t>(s[r] - 1);
  }
  xv_.reserve(x_.size());
  for (const auto& e : x_) {
    if (!(e.modulus() == params_.modulus)) throw ModulusMismatch("record from another field");
    xv_.push_back(e.value());
  }
  if (w == 1) {
    // F is linear: its gradient does not depend on the query.
    linear_grad_.assign(params_.m, 0);
    const detail::ModulusData md = params_.modulus.data();
    for (size_t j = 0; j < xv_.size(); ++j) linear_grad_[coords_[j]] = md.add(linear_grad_[coords_[j]], xv_[j]);
  }
}

std::span<const std::uint32_t> EncodedDatabase::coordinates(u64 i) const {
  if (i < 1 || i > params_.n) throw IndexOutOfRange("record index out of range");
  const size_t w = static_cast<size_t>(params_.w);
  return {coords_.data() + (i - 1) * w, w};
}

template <typename Deposit>
void EncodedDatabase::accumulate_gradient(std::span<const u64> qv, Deposit deposit,
                                          const detail::ModulusData& md) const {
  const int w = params_.w;
  std::vector<u64> prefix(w + 1), suffix(w + 1);
  const std::uint32_t* sup = coords_.data();
  for (size_t j = 0; j < xv_.size(); ++j, sup += w) {
    const u64 xj = xv_[j];
    if (xj == 0) continue;
    if (w == 1) {
      deposit(sup[0], xj, 1);
    } else if (w == 2) {
      deposit(sup[0], xj, qv[sup[1]]);
      deposit(sup[1], xj, qv[sup[0]]);
    } else {
      prefix[0] = 1;
      for (int r = 0; r < w; ++r) prefix[r + 1] = md.mul(prefix[r], qv[sup[r]]);
      suffix[w] = 1;
      for (int r = w; r-- > 0;) suffix[r] = md.mul(suffix[r + 1], qv[sup[r]]);
      for (int r = 0; r < w; ++r) deposit(sup[r], xj, md.mul(prefix[r], suffix[r + 1]));
    }
  }
}

EvalGradient EncodedDatabase::eval_and_gradient(const FieldVector& q) const {
  const int m = params_.m;
  const int w = params_.w;
  if (q.size() != static_cast<size_t>(m)) throw ShapeError("query length differs from m");
  const FieldModulus& mod = params_.modulus;
  if (!(q.modulus() == mod)) throw ModulusMismatch("query from another field");
  const std::span<const u64> qv = q.raw();

  // v_c = sum over records touching c of x_j times the other coordinates.
  const detail::ModulusData md = mod.data();
  EvalGradient out{mod.zero(), FieldVector(mod, static_cast<size_t>(m))};
  const std::span<u64> grad = out.v.raw();
  if (w == 1) {
    std::copy(linear_grad_.begin(), linear_grad_.end(), grad.begin());
  } else if (md.narrow) {
    // Products of narrow residues fit in 64 bits; defer reduction.
    std::vector<u128> acc(m, 0);
    accumulate_gradient(qv, [&](std::uint32_t c, u64 a, u64 b) { acc[c] += a * b; }, md);
    for (int c = 0; c < m; ++c) grad[c] = md.reduce128(acc[c]);
  } else {
    accumulate_gradient(qv, [&](std::uint32_t c, u64 a, u64 b) { grad[c] = md.add(grad[c], md.mul(a, b)); }, md);
  }

  // F is homogeneous of degree w, so sum_c q_c v_c = w F(q).
  u64 u;
  const u64 w_mod = mod.reduce(static_cast<u64>(w));
  if (w_mod != 0) {
    u = mod.mul(dot_product(qv, grad, mod), mod.inv(w_mod));
  } else {
    DotAccumulator dot(mod);
    const std::uint32_t* sup = coords_.data();
    for (size_t j = 0; j < xv_.size(); ++j, sup += w) {
      u64 term = xv_[j];
      for (int r = 0; r < w; ++r) term = mod.mul(term, qv[sup[r]]);
      dot.add(term);
    }
    u = dot.value();
  }

  out.u = FieldElement::from_canonical(mod, u);
  return out;
}

std::vector<FieldElement> random_database(u64 n, const FieldModulus& mod, u64 seed) {
  CounterRng rng(seed, /*label=*/0xDA7ABA5EULL);
  std::vector<FieldElement> x;
  x.reserve(n);
  for (u64 j = 0; j < n; ++j) x.push_back(rng.element(mod));
  return x;
}

}  // namespace ldpir
