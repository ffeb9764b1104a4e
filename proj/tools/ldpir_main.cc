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


// ldpir: database generation, retrieval sweeps and communication tables.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ldpir/experiment.h"

namespace {

using namespace ldpir;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitViolation = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Overrides {
  std::string config_path;
  std::optional<std::string> scheme, p, strategy, knowledge, out_path, format, db_path, g1_mode;
  std::optional<u64> n, trials, seed, adversary_seed;
  std::optional<int> ell, k, t, b;
};

void add_config_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "JSON experiment config");
  cmd->add_option("--scheme", o.scheme, "WY, G1 or G2");
  cmd->add_option("--n", o.n, "number of records");
  cmd->add_option("--ell", o.ell, "number of servers");
  cmd->add_option("--k", o.k, "responders used");
  cmd->add_option("--t", o.t, "privacy threshold");
  cmd->add_option("--b", o.b, "Byzantine servers tolerated");
  cmd->add_option("--p", o.p, "prime modulus (decimal)");
  cmd->add_option("--trials", o.trials, "number of sessions");
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--strategy", o.strategy, "Honest, Silent, RandomGarbage, AdditiveNoise, ConsistentFake");
  cmd->add_option("--knowledge", o.knowledge, "Oblivious, Colluding, Omniscient");
  cmd->add_option("--adversary-seed", o.adversary_seed, "adversary seed");
  cmd->add_option("--out", o.out_path, "output file (default stdout)");
  cmd->add_option("--format", o.format, "csv or json");
  cmd->add_option("--db", o.db_path, "database file (default: random from seed)");
  cmd->add_option("--g1-mode", o.g1_mode, "naive or optimized");
}

ExperimentConfig resolve(const Overrides& o) {
  ExperimentConfig c = o.config_path.empty() ? ExperimentConfig{} : parse_config(slurp(o.config_path));
  // Route string overrides through the JSON parser so validation is shared.
  nlohmann::json j = nlohmann::json::parse(serialize_config(c));
  if (o.scheme) j["scheme"] = *o.scheme;
  if (o.p) j["p"] = *o.p;
  if (o.strategy) j["adversary"]["strategy"] = *o.strategy;
  if (o.knowledge) j["adversary"]["knowledge"] = *o.knowledge;
  if (o.adversary_seed) j["adversary"]["seed"] = std::to_string(*o.adversary_seed);
  if (o.out_path) j["out_path"] = *o.out_path;
  if (o.format) j["format"] = *o.format;
  if (o.db_path) j["db_path"] = *o.db_path;
  if (o.g1_mode) j["g1_mode"] = *o.g1_mode;
  if (o.n) j["n"] = *o.n;
  if (o.trials) j["trials"] = *o.trials;
  if (o.seed) j["seed"] = std::to_string(*o.seed);
  if (o.ell) j["ell"] = *o.ell;
  if (o.k) j["k"] = *o.k;
  if (o.t) j["t"] = *o.t;
  if (o.b) j["b"] = *o.b;
  return parse_config(j.dump());
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw FormatError("cannot write " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_simulate(const Overrides& o, bool summary_only) {
  const ExperimentConfig c = resolve(o);
  config_params(c);  // reject infeasible parameters before any trial
  Sink sink(c.out_path);
  std::ostream& out = sink.out();
  const bool csv = c.format == OutputFormat::kCsv;
  if (csv && !summary_only) out << trial_csv_header() << '\n';
  if (!csv) out << "{\"trials\":[";
  bool first = true;
  const SimulationSummary s = run_simulation(c, [&](const TrialResult& r) {
    if (summary_only) return;
    if (csv) {
      out << trial_csv_row(r) << '\n';
    } else {
      out << (first ? "" : ",") << '\n' << trial_json(r);
      first = false;
    }
  });
  if (csv) {
    out << summary_csv(s) << '\n';
  } else {
    out << "],\n\"summary\":" << summary_json(s) << "}\n";
  }
  if (s.failing_seed) {
    std::cerr << "correctness violation: x_i missing from the output list, session seed "
              << *s.failing_seed << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_gen_db(u64 n, const std::string& p, u64 seed, const std::string& path) {
  u64 pv = 0;
  try {
    pv = std::stoull(p);
  } catch (const std::exception&) {
    throw FormatError("p must be a decimal integer");
  }
  if (n < 1) throw FormatError("n must be at least 1");
  const FieldModulus mod(pv);
  write_database_file(path, mod, random_database(n, mod, seed));
  return kExitOk;
}

int cmd_bench(const std::string& grid_path, u64 n_override, const std::string& format,
              const std::string& out_path) {
  BenchGrid grid = grid_path.empty() ? default_bench_grid() : parse_bench_grid(slurp(grid_path));
  if (n_override) grid.n = n_override;
  if (format != "csv" && format != "json") throw FormatError("format must be csv or json");
  const auto rows = bench_comm(grid);
  Sink sink(out_path);
  sink.out() << (format == "csv" ? bench_csv(rows) : bench_json(rows) + "\n");
  return kExitOk;
}

int cmd_selftest(u64 instances, u64 seed) {
  const SelftestReport r = run_selftest(instances, seed);
  std::cout << "instances " << r.instances << ", mismatches " << r.mismatches << '\n';
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    std::cout << "first mismatch at p=" << m.p << " k=" << m.k << " b=" << m.b << " wt=" << m.wt << '\n';
  }
  return r.mismatches == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  retain_freed_memory();
  CLI::App app{"List-decodable robust PIR experiments"};
  app.require_subcommand(1);

  Overrides sim_opts, sweep_opts;
  CLI::App* simulate = app.add_subcommand("simulate", "run retrieval sessions, one row per trial");
  add_config_flags(simulate, sim_opts);
  CLI::App* sweep = app.add_subcommand("list-sweep", "simulate, emitting only the list-size summary");
  add_config_flags(sweep, sweep_opts);

  u64 db_n = 16, db_seed = 1;
  std::string db_p = "131", db_path;
  CLI::App* gen = app.add_subcommand("gen-db", "write a random database file");
  gen->add_option("--n", db_n, "number of records");
  gen->add_option("--p", db_p, "prime modulus (decimal)");
  gen->add_option("--seed", db_seed, "seed");
  gen->add_option("--out", db_path, "output path")->required();

  std::string grid_path, bench_format = "csv", bench_out;
  u64 bench_n = 0;
  CLI::App* bench = app.add_subcommand("bench-comm", "per-server communication table");
  bench->add_option("--config", grid_path, "JSON grid (default: the (20,12,1,128) sweep)");
  bench->add_option("--n", bench_n, "override the database size");
  bench->add_option("--format", bench_format, "csv or json");
  bench->add_option("--out", bench_out, "output file (default stdout)");

  u64 st_instances = 200, st_seed = 1;
  CLI::App* selftest = app.add_subcommand("selftest", "compare every decoder with the exhaustive oracle");
  selftest->add_option("--instances", st_instances, "random instances");
  selftest->add_option("--seed", st_seed, "seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return cmd_simulate(sim_opts, false);
    if (*sweep) return cmd_simulate(sweep_opts, true);
    if (*gen) return cmd_gen_db(db_n, db_p, db_seed, db_path);
    if (*bench) return cmd_bench(grid_path, bench_n, bench_format, bench_out);
    if (*selftest) return cmd_selftest(st_instances, st_seed);
  } catch (const InfeasibleParameters& e) {
    std::cerr << "infeasible parameters: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}
