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

// Experiment drivers behind the command-line tool: JSON configuration,
// trial sweeps and communication tables.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ldpir/encode.h"
#include "ldpir/poly.h"
#include "ldpir/sim.h"

namespace ldpir {

enum class OutputFormat { kCsv, kJson };

struct ExperimentConfig {
  Scheme scheme = Scheme::kGamma1;
  u64 n = 1024;
  int ell = 8;
  int k = 6;
  int t = 1;
  int b = 3;
  u64 p = 131;  // carried as a decimal string in JSON
  u64 trials = 100;
  Strategy strategy = Strategy::kHonest;
  Knowledge knowledge = Knowledge::kOblivious;
  u64 adversary_seed = 0;
  u64 seed = 1;  // database contents and per-trial index/session seeds
  std::string db_path;
  std::string out_path;
  OutputFormat format = OutputFormat::kCsv;
  G1Mode g1_mode = G1Mode::kOptimized;

  bool operator==(const ExperimentConfig&) const = default;
};

// Throws FormatError on malformed documents, unknown keys or bad values.
ExperimentConfig parse_config(const std::string& json_text);
std::string serialize_config(const ExperimentConfig& c);

// Builds parameters via select_params. Throws InvalidModulus or
// InfeasibleParameters.
PirParams config_params(const ExperimentConfig& c);

struct TrialResult {
  u64 trial = 0;
  u64 index = 0;
  u64 seed = 0;
  size_t list_size = 0;   // |output_list|
  size_t candidates = 0;  // |cp|
  int corrupted = 0;
  bool success = false;
  size_t bytes = 0;
};

struct SimulationSummary {
  int w = 0;
  int m = 0;
  u64 trials_run = 0;
  u64 successes = 0;
  size_t worst_list_size = 0;
  size_t worst_candidates = 0;
  size_t max_bytes = 0;
  std::optional<u64> failing_seed;  // first trial missing x_i; the run stops there
};

// Runs c.trials sessions. Each trial draws a fresh index and session seed
// from c.seed. The callback sees every trial in order.
SimulationSummary run_simulation(const ExperimentConfig& c,
                                 const std::function<void(const TrialResult&)>& on_trial = {});

std::string trial_csv_header();
std::string trial_csv_row(const TrialResult& r);
std::string trial_json(const TrialResult& r);
std::string summary_csv(const SimulationSummary& s);
std::string summary_json(const SimulationSummary& s);

struct BenchCell {
  Scheme scheme = Scheme::kGamma1;
  int k = 20;
  int b = 12;
  int t = 1;
  int bits = 128;
  bool operator==(const BenchCell&) const = default;
};

struct BenchGrid {
  u64 n = u64{1} << 26;
  int ell = 0;  // 0: use k servers per cell
  u64 measure_limit = u64{1} << 16;
  u64 seed = 1;
  std::vector<BenchCell> cells;
};

struct BenchRow {
  BenchCell cell;
  bool feasible = false;
  std::string note;
  int w = 0;
  int m = 0;
  u64 formula_bytes = 0;  // per server, payload only
  std::optional<u64> measured_bytes;
};

// Baseline (20,12,1,128) varied one coordinate at a time, for G1 and G2.
BenchGrid default_bench_grid();
// {"n":..., "ell":..., "measure_limit":..., "seed":..., "cells":[{"scheme","k","b","t","bits"}]}
BenchGrid parse_bench_grid(const std::string& json_text);

// Infeasible cells are reported, not thrown. Cells of at most 62 bits over a
// database of at most measure_limit records run one honest session over the
// smallest prime of that width and record its per-server payload.
std::vector<BenchRow> bench_comm(const BenchGrid& grid);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);

struct SelftestInstance {
  u64 p = 0;
  int k = 0;
  int b = 0;
  int wt = 0;
  std::vector<HermiteSample> tuples;
  std::vector<Polynomial> naive;
  std::vector<Polynomial> optimized;
  std::vector<Polynomial> bivariate;
  std::vector<Polynomial> oracle;
  bool agree() const { return naive == oracle && optimized == oracle && bivariate == oracle; }
};

struct SelftestReport {
  u64 instances = 0;
  u64 mismatches = 0;
  std::optional<SelftestInstance> first_mismatch;
};

// Random small instances (p in {7,11,13,17}, k <= 6, wt <= 2, b <= k-2,
// partly corrupted tuples) decoded by every decoder and by the exhaustive
// oracle.
SelftestReport run_selftest(u64 instances, u64 seed,
                            const std::function<void(const SelftestInstance&)>& on_instance = {});

}  // namespace ldpir
