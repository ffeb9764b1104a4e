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

#include "ldpir/sim.h"

#include <algorithm>
#include <cctype>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "json.hpp"
#include "ldpir/random.h"
#include "ldpir/wire.h"

namespace ldpir {
namespace {

std::string upper(const std::string& s) {
  std::string u;
  for (char c : s) {
    if (c == '_' || c == '-') continue;
    u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return u;
}

bool corrupting(Strategy s) {
  return s == Strategy::kRandomGarbage || s == Strategy::kAdditiveNoise ||
         s == Strategy::kConsistentFake;
}

// `count` distinct entries of `pool`, chosen uniformly, ascending.
std::vector<int> sample_subset(std::vector<int> pool, size_t count, CounterRng& rng) {
  count = std::min(count, pool.size());
  for (size_t a = 0; a < count; ++a) {
    const size_t pick = a + rng.uniform(pool.size() - a);
    std::swap(pool[a], pool[pick]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Polynomial random_poly(const FieldModulus& mod, int max_degree, CounterRng& rng) {
  std::vector<FieldElement> c;
  for (int d = 0; d <= max_degree; ++d) c.push_back(rng.element(mod));
  return Polynomial(mod, std::move(c));
}

// Recovers r_1..r_t from t+1 shares G(lambda_a) by Lagrange interpolation.
std::vector<FieldVector> recover_randomness(const PirParams& params, const std::vector<Query>& queries,
                                            std::span<const int> positions) {
  const FieldModulus& mod = params.modulus;
  const int t = params.t;
  std::vector<Polynomial> basis;
  for (int a = 0; a <= t; ++a) {
    Polynomial l = Polynomial::constant(mod.one());
    const FieldElement la = params.lambdas[positions[a]];
    for (int b = 0; b <= t; ++b) {
      if (b == a) continue;
      const FieldElement lb = params.lambdas[positions[b]];
      l = l * Polynomial(mod, std::vector<FieldElement>{-lb, mod.one()}) * (la - lb).inv();
    }
    basis.push_back(std::move(l));
  }
  std::vector<FieldVector> r(t, FieldVector(mod, static_cast<size_t>(params.m)));
  for (int s = 1; s <= t; ++s) {
    for (int c = 0; c < params.m; ++c) {
      DotAccumulator dot(mod);
      for (int a = 0; a <= t; ++a) {
        dot.add_product(queries[positions[a]].q.raw()[c], basis[a].coeff(s).value());
      }
      r[s - 1].raw()[c] = dot.value();
    }
  }
  return r;
}

// Corrupted answers all agree with one alternative polynomial fake != f,
// value and derivative, whenever the adversary knows G.
void consistent_fake(const PirParams& params, const QueryBundle& bundle,
                     const AdversaryConfig& adversary, std::span<const int> corrupt,
                     std::vector<Answer>& delivered, const std::vector<Answer>& honest,
                     CounterRng& rng, std::optional<Polynomial>& fake_out) {
  const FieldModulus& mod = params.modulus;
  std::optional<std::vector<FieldVector>> known_r;
  if (adversary.knowledge == Knowledge::kOmniscient) {
    known_r = bundle.aux.r;
  } else if (adversary.knowledge == Knowledge::kColluding &&
             static_cast<int>(corrupt.size()) > params.t) {
    known_r = recover_randomness(params, bundle.queries, corrupt);
  }

  if (!known_r) {
    // Without G' the derivative cannot be steered; shift values only.
    Polynomial e(mod);
    while (e.is_zero()) e = random_poly(mod, params.wt(), rng);
    for (int j : corrupt) delivered[j]->u += e.eval(params.lambdas[j]);
    return;
  }

  Aux view{params.lambdas, *known_r, bundle.aux.index};
  // deg f <= wt, so ceil((wt+1)/2) honest order-1 samples pin it down.
  const size_t needed = static_cast<size_t>(params.wt() / 2 + 1);
  std::vector<HermiteSample> truth;
  for (int j = 0; j < params.ell && truth.size() < needed; ++j) {
    if (!honest[j] || std::binary_search(corrupt.begin(), corrupt.end(), j)) continue;
    truth.push_back({params.lambdas[j], honest[j]->u, derivative_inner(view, params.lambdas[j], honest[j]->v)});
  }
  if (truth.size() < needed) throw ShapeError("too few honest answers to fix the true polynomial");
  const Polynomial f = hermite_interpolate(truth);
  Polynomial fake = f;
  while (fake == f) fake = random_poly(mod, params.wt(), rng);
  const Polynomial dfake = fake.derivative();

  for (int j : corrupt) {
    Response& a = *delivered[j];
    const FieldElement lambda = params.lambdas[j];
    a.u = fake.eval(lambda);
    const FieldElement want = dfake.eval(lambda);
    const FieldElement have = derivative_inner(view, lambda, a.v);
    const FieldVector dg = query_derivative(view, lambda);
    const auto raw = dg.raw();
    auto pivot = std::find_if(raw.begin(), raw.end(), [](u64 e) { return e != 0; });
    if (pivot == raw.end()) continue;  // G'(lambda_j) = 0 pins the derivative at 0
    const size_t c = static_cast<size_t>(pivot - raw.begin());
    a.v.set(c, a.v[c] + (want - have) / dg[c]);
  }
  fake_out = fake;
}

}  // namespace

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kHonest:
      return "Honest";
    case Strategy::kSilent:
      return "Silent";
    case Strategy::kRandomGarbage:
      return "RandomGarbage";
    case Strategy::kAdditiveNoise:
      return "AdditiveNoise";
    case Strategy::kConsistentFake:
      return "ConsistentFake";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s) {
  const std::string u = upper(s);
  for (Strategy st : {Strategy::kHonest, Strategy::kSilent, Strategy::kRandomGarbage,
                      Strategy::kAdditiveNoise, Strategy::kConsistentFake}) {
    if (upper(strategy_name(st)) == u) return st;
  }
  throw FormatError("unknown adversary strategy '" + s + "'");
}

std::string knowledge_name(Knowledge k) {
  switch (k) {
    case Knowledge::kOblivious:
      return "Oblivious";
    case Knowledge::kColluding:
      return "Colluding";
    case Knowledge::kOmniscient:
      return "Omniscient";
  }
  return "?";
}

Knowledge parse_knowledge(const std::string& s) {
  const std::string u = upper(s);
  for (Knowledge k : {Knowledge::kOblivious, Knowledge::kColluding, Knowledge::kOmniscient}) {
    if (upper(knowledge_name(k)) == u) return k;
  }
  throw FormatError("unknown adversary knowledge '" + s + "'");
}

size_t Transcript::total_bytes() const {
  size_t total = 0;
  for (const auto& s : servers) total += s.query_bytes + s.answer_bytes;
  return total;
}

size_t Transcript::payload_bytes() const {
  size_t total = 0;
  for (const auto& s : servers) total += (s.query_bytes - kQueryHeaderBytes) + (s.answer_bytes - kAnswerHeaderBytes);
  return total;
}

Transcript run_session(const PirParams& params, const EncodedDatabase& db, u64 i,
                       const AdversaryConfig& adversary, u64 seed, const SessionOptions& options) {
  const FieldModulus& mod = params.modulus;
  const int ell = params.ell;
  auto in_range = [&](const std::vector<int>& set) {
    return std::all_of(set.begin(), set.end(), [&](int j) { return j >= 0 && j < ell; });
  };
  if (!in_range(adversary.corrupt_set) || !in_range(adversary.silent_set)) {
    throw ShapeError("adversary names a server outside [0, ell)");
  }
  if (static_cast<int>(adversary.corrupt_set.size()) > params.b) {
    throw ShapeError("adversary corrupts more than b servers");
  }

  CounterRng rng(adversary.seed, seed);
  const QueryBundle bundle = query_gen(params, i, seed);

  std::vector<bool> silent(ell, false);
  if (adversary.strategy == Strategy::kSilent && adversary.silent_set.empty()) {
    std::vector<int> all(ell);
    for (int j = 0; j < ell; ++j) all[j] = j;
    for (int j : sample_subset(all, static_cast<size_t>(ell - params.k), rng)) silent[j] = true;
  } else {
    for (int j : adversary.silent_set) silent[j] = true;
  }
  if (std::count(silent.begin(), silent.end(), false) < params.k) {
    throw InsufficientResponses("fewer than k servers respond");
  }

  // Servers the client will decode from.
  std::vector<int> used;
  if (options.responders) {
    for (int j : *options.responders) {
      if (j >= 0 && j < ell && !silent[j] && static_cast<int>(used.size()) < params.k) used.push_back(j);
    }
  } else {
    for (int j = 0; j < ell && static_cast<int>(used.size()) < params.k; ++j) {
      if (!silent[j]) used.push_back(j);
    }
  }

  std::vector<int> corrupt;
  if (corrupting(adversary.strategy)) {
    corrupt = adversary.corrupt_set.empty()
                  ? sample_subset(used, static_cast<size_t>(params.b), rng)
                  : adversary.corrupt_set;
    std::sort(corrupt.begin(), corrupt.end());
    for (int j : corrupt) {
      if (silent[j]) throw ShapeError("a server cannot be both silent and corrupted");
    }
  }

  Transcript tr;
  tr.scheme = params.scheme;
  tr.index = i;
  tr.seed = seed;
  tr.expected = db.x()[i - 1].value();
  tr.servers.resize(ell);

  std::vector<Answer> honest(ell);
  for (int j = 0; j < ell; ++j) {
    ServerRecord& rec = tr.servers[j];
    rec.position = j;
    rec.silent = silent[j];
    std::vector<std::uint8_t> wire = serialize_query(bundle.queries[j], mod);
    rec.query_bytes = wire.size();
    if (!silent[j]) honest[j] = answer(db, deserialize_query(wire, mod));
    if (options.keep_wire) rec.query_wire = std::move(wire);
  }

  // Only corrupted positions get their own copy; the rest deliver `honest`.
  std::vector<Answer> delivered(ell);
  for (int j : corrupt) delivered[j] = honest[j];
  switch (adversary.strategy) {
    case Strategy::kHonest:
    case Strategy::kSilent:
      break;
    case Strategy::kRandomGarbage:
      for (int j : corrupt) {
        delivered[j]->u = rng.element(mod);
        for (u64& e : delivered[j]->v.raw()) e = rng.uniform(mod.p());
      }
      break;
    case Strategy::kAdditiveNoise:
      for (int j : corrupt) {
        delivered[j]->u += rng.nonzero_element(mod);
        const detail::ModulusData md = mod.data();
        for (u64& e : delivered[j]->v.raw()) e = md.add(e, rng.uniform(mod.p()));
      }
      break;
    case Strategy::kConsistentFake:
      consistent_fake(params, bundle, adversary, corrupt, delivered, honest, rng, tr.fake);
      break;
  }

  std::vector<Answer> received(ell);
  for (int j = 0; j < ell; ++j) {
    ServerRecord& rec = tr.servers[j];
    const bool own = std::binary_search(corrupt.begin(), corrupt.end(), j);
    std::vector<std::uint8_t> wire = serialize_answer(own ? delivered[j] : honest[j], mod);
    rec.answer_bytes = wire.size();
    received[j] = deserialize_answer(wire, mod, params.m);
    rec.corrupted = own && delivered[j] != honest[j];
    tr.corrupted_count += rec.corrupted ? 1 : 0;
    if (options.keep_wire) rec.answer_wire = std::move(wire);
  }

  tr.responders = select_responders(received, params.k, std::span<const int>(used));
  tr.tuples = derive_tuples(bundle.aux, received, params.k, std::span<const int>(used));
  tr.output = reconstruct(params, tr.tuples, options.g1_mode, seed);
  tr.success = tr.output.contains(db.x()[i - 1]);
  for (int j = 0; j < ell; ++j) tr.servers[j].delivered = std::move(received[j]);
  return tr;
}

std::string transcript_to_json(const Transcript& t, bool full) {
  using nlohmann::json;
  auto values = [](const std::vector<FieldElement>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(e.value());
    return a;
  };
  json j;
  j["scheme"] = scheme_name(t.scheme);
  j["index"] = t.index;
  j["seed"] = t.seed;
  j["expected"] = t.expected;
  j["success"] = t.success;
  j["corrupted_count"] = t.corrupted_count;
  j["responders"] = t.responders;
  j["total_bytes"] = t.total_bytes();
  j["payload_bytes"] = t.payload_bytes();
  j["output_values"] = values(t.output.values);
  json cands = json::array();
  for (const auto& f : t.output.candidates) cands.push_back(values(f.coeffs()));
  j["candidates"] = cands;
  if (t.fake) j["fake"] = values(t.fake->coeffs());
  json tuples = json::array();
  for (const auto& s : t.tuples) tuples.push_back({s.lambda.value(), s.alpha.value(), s.beta.value()});
  j["tuples"] = tuples;
  json servers = json::array();
  for (const auto& s : t.servers) {
    json r;
    r["position"] = s.position;
    r["query_bytes"] = s.query_bytes;
    r["answer_bytes"] = s.answer_bytes;
    r["silent"] = s.silent;
    r["corrupted"] = s.corrupted;
    if (full && s.delivered) {
      r["u"] = s.delivered->u.value();
      r["v"] = s.delivered->v.raw();
    }
    servers.push_back(std::move(r));
  }
  j["servers"] = servers;
  return j.dump();
}

CommReport comm_report_formula(int ell, int m, int bit_width) {
  CommReport r;
  r.ell = ell;
  r.m = m;
  r.bit_width = bit_width;
  r.element_width_bytes = (bit_width + 7) / 8;
  r.per_server_query_elems = static_cast<u64>(m);
  r.per_server_answer_elems = static_cast<u64>(m) + 1;
  const u64 elems = r.per_server_query_elems + r.per_server_answer_elems;
  r.per_server_payload_bytes = elems * r.element_width_bytes;
  r.total_payload_bytes = r.per_server_payload_bytes * static_cast<u64>(ell);
  r.total_wire_bytes = r.total_payload_bytes + static_cast<u64>(ell) * (kQueryHeaderBytes + kAnswerHeaderBytes);
  r.cc_per_bit = static_cast<u64>(ell) * elems;
  return r;
}

CommReport comm_report(const PirParams& params) {
  return comm_report_formula(params.ell, params.m, params.modulus.bit_width());
}

void retain_freed_memory() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_THRESHOLD, 256 << 20);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
}

}  // namespace ldpir
