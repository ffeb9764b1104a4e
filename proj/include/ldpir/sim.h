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

// In-process multi-server simulation: every message crosses the wire codec,
// an adversary rewrites the answers of the servers it controls, and the
// full exchange is recorded.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldpir/encode.h"
#include "ldpir/protocol.h"

namespace ldpir {

enum class Strategy { kHonest, kSilent, kRandomGarbage, kAdditiveNoise, kConsistentFake };

// What the corrupted servers can see when crafting answers.
//   Oblivious:  only their own query.
//   Colluding:  the pooled queries of all corrupted servers; with more than
//               t of them they recover G(x) and act as if omniscient.
//   Omniscient: the client's secret state as well.
enum class Knowledge { kOblivious, kColluding, kOmniscient };

std::string strategy_name(Strategy s);
Strategy parse_strategy(const std::string& s);
std::string knowledge_name(Knowledge k);
Knowledge parse_knowledge(const std::string& s);

struct AdversaryConfig {
  Strategy strategy = Strategy::kHonest;
  Knowledge knowledge = Knowledge::kOblivious;
  // 0-based server positions. When empty, corrupting strategies draw b of the
  // k servers the client will use, and kSilent silences ell-k random servers,
  // afresh for each session.
  std::vector<int> corrupt_set;
  std::vector<int> silent_set;
  u64 seed = 0;
};

struct SessionOptions {
  G1Mode g1_mode = G1Mode::kOptimized;
  // Explicit responder order for reconstruction (0-based positions).
  std::optional<std::vector<int>> responders;
  // Keep the raw wire bytes in the transcript.
  bool keep_wire = false;
};

struct ServerRecord {
  int position = 0;
  size_t query_bytes = 0;
  size_t answer_bytes = 0;
  bool silent = false;
  bool corrupted = false;  // delivered answer differs from the honest one
  Answer delivered;
  std::vector<std::uint8_t> query_wire;
  std::vector<std::uint8_t> answer_wire;
};

struct Transcript {
  Scheme scheme = Scheme::kGamma1;
  u64 index = 0;
  u64 seed = 0;
  u64 expected = 0;  // x_i
  std::vector<ServerRecord> servers;
  std::vector<int> responders;
  std::vector<HermiteSample> tuples;
  OutputList output;
  int corrupted_count = 0;
  bool success = false;
  // The alternative polynomial pushed by a consistent-fake adversary.
  std::optional<Polynomial> fake;

  size_t total_bytes() const;
  // Bytes excluding the fixed per-message headers.
  size_t payload_bytes() const;
};

// Runs one retrieval of record i end to end. Throws ShapeError /
// InsufficientResponses when the adversary configuration is inconsistent.
Transcript run_session(const PirParams& params, const EncodedDatabase& db, u64 i,
                       const AdversaryConfig& adversary, u64 seed, const SessionOptions& options = {});

// Compact JSON rendering; vectors are included only when `full` is set.
std::string transcript_to_json(const Transcript& t, bool full = false);

struct CommReport {
  int ell = 0;
  int m = 0;
  int bit_width = 0;
  int element_width_bytes = 0;
  u64 per_server_query_elems = 0;
  u64 per_server_answer_elems = 0;
  u64 per_server_payload_bytes = 0;
  u64 total_payload_bytes = 0;
  u64 total_wire_bytes = 0;  // payload plus headers, no silent servers
  u64 cc_per_bit = 0;        // ell (2m + 1) field elements per retrieved element
};

CommReport comm_report(const PirParams& params);

// Keeps freed megabyte-sized buffers in the heap instead of returning them to
// the OS, so back-to-back sessions with large m do not page-fault on every
// allocation. No-op outside glibc.
void retain_freed_memory();
// Analytic counts for any field width, including widths above 63 bits.
CommReport comm_report_formula(int ell, int m, int bit_width);

}  // namespace ldpir
