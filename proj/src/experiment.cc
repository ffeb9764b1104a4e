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


#include "ldpir/experiment.h"

#include <charconv>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ldpir/listdecode.h"
#include "ldpir/oracle.h"
#include "ldpir/random.h"

namespace ldpir {
namespace {

using nlohmann::json;

constexpr u64 kTrialLabel = 0x7121A1;

u64 parse_u64(const std::string& s, const char* what) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw FormatError(std::string(what) + ": expected a decimal integer, got '" + s + "'");
  }
  return v;
}

u64 get_u64(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_string()) return parse_u64(v.get<std::string>(), key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw FormatError(std::string(key) + ": expected a nonnegative integer");
  }
  return v.get<u64>();
}

int get_int(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw FormatError(std::string(key) + ": expected an integer");
  const long long x = v.get<long long>();
  if (x < -1000000 || x > 1000000) throw FormatError(std::string(key) + ": out of range");
  return static_cast<int>(x);
}

std::string get_string(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_string()) throw FormatError(std::string(key) + ": expected a string");
  return v.get<std::string>();
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw FormatError(where + ": unknown key '" + key + "'");
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::string g1_mode_name(G1Mode m) { return m == G1Mode::kNaive ? "naive" : "optimized"; }

G1Mode parse_g1_mode(const std::string& s) {
  if (s == "naive") return G1Mode::kNaive;
  if (s == "optimized") return G1Mode::kOptimized;
  throw FormatError("unknown g1_mode '" + s + "'");
}

u64 smallest_prime_of_width(int bits) {
  u64 c = (u64{1} << (bits - 1)) + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  const json j = parse_json(json_text);
  reject_unknown(j,
                 {"scheme", "n", "ell", "k", "t", "b", "p", "trials", "adversary", "out_path", "format",
                  "seed", "db_path", "g1_mode"},
                 "config");
  ExperimentConfig c;
  try {
    if (j.contains("scheme")) c.scheme = parse_scheme(get_string(j, "scheme"));
    if (j.contains("n")) c.n = get_u64(j, "n");
    if (j.contains("ell")) c.ell = get_int(j, "ell");
    if (j.contains("k")) c.k = get_int(j, "k");
    if (j.contains("t")) c.t = get_int(j, "t");
    if (j.contains("b")) c.b = get_int(j, "b");
    if (j.contains("p")) c.p = get_u64(j, "p");
    if (j.contains("trials")) c.trials = get_u64(j, "trials");
    if (j.contains("seed")) c.seed = get_u64(j, "seed");
    if (j.contains("out_path")) c.out_path = get_string(j, "out_path");
    if (j.contains("db_path")) c.db_path = get_string(j, "db_path");
    if (j.contains("g1_mode")) c.g1_mode = parse_g1_mode(get_string(j, "g1_mode"));
    if (j.contains("format")) {
      const std::string f = get_string(j, "format");
      if (f == "csv") {
        c.format = OutputFormat::kCsv;
      } else if (f == "json") {
        c.format = OutputFormat::kJson;
      } else {
        throw FormatError("format must be csv or json");
      }
    }
    if (j.contains("adversary")) {
      const json& a = j.at("adversary");
      reject_unknown(a, {"strategy", "knowledge", "seed"}, "adversary");
      if (a.contains("strategy")) c.strategy = parse_strategy(get_string(a, "strategy"));
      if (a.contains("knowledge")) c.knowledge = parse_knowledge(get_string(a, "knowledge"));
      if (a.contains("seed")) c.adversary_seed = get_u64(a, "seed");
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  return c;
}

std::string serialize_config(const ExperimentConfig& c) {
  json j;
  j["scheme"] = scheme_name(c.scheme);
  j["n"] = c.n;
  j["ell"] = c.ell;
  j["k"] = c.k;
  j["t"] = c.t;
  j["b"] = c.b;
  j["p"] = std::to_string(c.p);
  j["trials"] = c.trials;
  j["seed"] = std::to_string(c.seed);
  j["adversary"] = {{"strategy", strategy_name(c.strategy)},
                    {"knowledge", knowledge_name(c.knowledge)},
                    {"seed", std::to_string(c.adversary_seed)}};
  j["out_path"] = c.out_path;
  j["db_path"] = c.db_path;
  j["format"] = c.format == OutputFormat::kCsv ? "csv" : "json";
  j["g1_mode"] = g1_mode_name(c.g1_mode);
  return j.dump(2);
}

PirParams config_params(const ExperimentConfig& c) {
  return select_params(c.n, c.ell, c.k, c.t, c.b, c.scheme, FieldModulus(c.p));
}

SimulationSummary run_simulation(const ExperimentConfig& c,
                                 const std::function<void(const TrialResult&)>& on_trial) {
  const PirParams params = config_params(c);
  std::vector<FieldElement> x;
  if (!c.db_path.empty()) {
    DatabaseFile file = read_database_file(c.db_path);
    if (!(file.modulus == params.modulus)) throw FormatError("database file is over a different field");
    if (file.x.size() != c.n) throw FormatError("database file holds a different number of records");
    x = std::move(file.x);
  } else {
    x = random_database(c.n, params.modulus, c.seed);
  }
  const EncodedDatabase db(params, std::move(x));
  const AdversaryConfig adversary{c.strategy, c.knowledge, {}, {}, c.adversary_seed};
  SessionOptions options;
  options.g1_mode = c.g1_mode;

  SimulationSummary s;
  s.w = params.w;
  s.m = params.m;
  CounterRng rng(c.seed, kTrialLabel);
  for (u64 trial = 0; trial < c.trials; ++trial) {
    TrialResult r;
    r.trial = trial;
    r.index = 1 + rng.uniform(c.n);
    r.seed = rng();
    const Transcript tr = run_session(params, db, r.index, adversary, r.seed, options);
    r.list_size = tr.output.values.size();
    r.candidates = tr.output.candidates.size();
    r.corrupted = tr.corrupted_count;
    r.success = tr.success;
    r.bytes = tr.total_bytes();
    ++s.trials_run;
    if (r.success) ++s.successes;
    s.worst_list_size = std::max(s.worst_list_size, r.list_size);
    s.worst_candidates = std::max(s.worst_candidates, r.candidates);
    s.max_bytes = std::max(s.max_bytes, r.bytes);
    if (on_trial) on_trial(r);
    if (!r.success) {
      s.failing_seed = r.seed;
      break;
    }
  }
  return s;
}

std::string trial_csv_header() { return "trial,index,seed,list_size,candidates,corrupted,success,bytes"; }

std::string trial_csv_row(const TrialResult& r) {
  std::ostringstream os;
  os << r.trial << ',' << r.index << ',' << r.seed << ',' << r.list_size << ',' << r.candidates << ','
     << r.corrupted << ',' << (r.success ? 1 : 0) << ',' << r.bytes;
  return os.str();
}

std::string trial_json(const TrialResult& r) {
  return json{{"trial", r.trial},         {"index", r.index},         {"seed", std::to_string(r.seed)},
              {"list_size", r.list_size}, {"candidates", r.candidates}, {"corrupted", r.corrupted},
              {"success", r.success},     {"bytes", r.bytes}}
      .dump();
}

std::string summary_csv(const SimulationSummary& s) {
  std::ostringstream os;
  os << "summary,w,m,trials,successes,worst_list_size,worst_candidates,max_bytes,failing_seed\n"
     << "summary," << s.w << ',' << s.m << ',' << s.trials_run << ',' << s.successes << ','
     << s.worst_list_size << ',' << s.worst_candidates << ',' << s.max_bytes << ','
     << (s.failing_seed ? std::to_string(*s.failing_seed) : "");
  return os.str();
}

std::string summary_json(const SimulationSummary& s) {
  json j{{"w", s.w},
         {"m", s.m},
         {"trials", s.trials_run},
         {"successes", s.successes},
         {"worst_list_size", s.worst_list_size},
         {"worst_candidates", s.worst_candidates},
         {"max_bytes", s.max_bytes}};
  j["failing_seed"] = s.failing_seed ? json(std::to_string(*s.failing_seed)) : json(nullptr);
  return j.dump();
}

BenchGrid default_bench_grid() {
  BenchGrid g;
  for (Scheme s : {Scheme::kGamma1, Scheme::kGamma2}) {
    for (int k : {16, 18, 20, 22, 24}) g.cells.push_back({s, k, 12, 1, 128});
    for (int b : {10, 11, 12, 13, 14}) g.cells.push_back({s, 20, b, 1, 128});
    for (int t : {1, 2, 3, 4}) g.cells.push_back({s, 20, 12, t, 128});
    for (int bits : {16, 32, 64, 128}) g.cells.push_back({s, 20, 12, 1, bits});
  }
  return g;
}

BenchGrid parse_bench_grid(const std::string& json_text) {
  const json j = parse_json(json_text);
  reject_unknown(j, {"n", "ell", "measure_limit", "seed", "cells"}, "grid");
  BenchGrid g;
  try {
    if (j.contains("n")) g.n = get_u64(j, "n");
    if (j.contains("ell")) g.ell = get_int(j, "ell");
    if (j.contains("measure_limit")) g.measure_limit = get_u64(j, "measure_limit");
    if (j.contains("seed")) g.seed = get_u64(j, "seed");
    if (!j.contains("cells")) {
      g.cells = default_bench_grid().cells;
      return g;
    }
    for (const json& cj : j.at("cells")) {
      reject_unknown(cj, {"scheme", "k", "b", "t", "bits"}, "cell");
      BenchCell cell;
      if (cj.contains("scheme")) cell.scheme = parse_scheme(get_string(cj, "scheme"));
      if (cj.contains("k")) cell.k = get_int(cj, "k");
      if (cj.contains("b")) cell.b = get_int(cj, "b");
      if (cj.contains("t")) cell.t = get_int(cj, "t");
      if (cj.contains("bits")) cell.bits = get_int(cj, "bits");
      if (cell.bits < 2 || cell.bits > 4096) throw FormatError("cell bits out of range");
      g.cells.push_back(cell);
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("grid: ") + e.what());
  }
  return g;
}

std::vector<BenchRow> bench_comm(const BenchGrid& grid) {
  std::vector<BenchRow> rows;
  for (const BenchCell& cell : grid.cells) {
    BenchRow row;
    row.cell = cell;
    const int ell = std::max(grid.ell, cell.k);
    try {
      if (cell.scheme == Scheme::kWoodruffYekhanin && cell.b != 0) {
        throw InfeasibleParameters("the baseline scheme needs b = 0");
      }
      if (cell.b < 0 || cell.b > cell.k - 2 || cell.t < 1 || cell.t >= cell.k) {
        throw InfeasibleParameters("need 0 <= b <= k-2 and 1 <= t < k");
      }
      row.w = choose_degree(cell.scheme, cell.k, cell.t, cell.b);
      if (cell.scheme == Scheme::kGamma1 && row.w * cell.t > 2 * (cell.k - cell.b) - 2) {
        throw InfeasibleParameters("G1 needs w*t <= 2(k-b)-2");
      }
      row.m = min_variables(grid.n, row.w);
      row.formula_bytes = comm_report_formula(ell, row.m, cell.bits).per_server_payload_bytes;
      row.feasible = true;
      if (cell.bits <= 62 && grid.n <= grid.measure_limit) {
        const FieldModulus mod(smallest_prime_of_width(cell.bits));
        if (static_cast<u64>(ell) < mod.p()) {
          const PirParams params = make_params(cell.scheme, grid.n, ell, cell.k, cell.t, cell.b, row.w, mod);
          const EncodedDatabase db(params, random_database(grid.n, mod, grid.seed));
          const Transcript tr = run_session(params, db, 1, AdversaryConfig{}, grid.seed);
          row.measured_bytes = tr.payload_bytes() / static_cast<u64>(ell);
        } else {
          row.note = "field too small to measure";
        }
      } else {
        row.note = "formula";
      }
    } catch (const InfeasibleParameters& e) {
      row.feasible = false;
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "scheme,k,b,t,bits,feasible,w,m,exponent,formula_bytes,measured_bytes,note\n";
  for (const auto& r : rows) {
    os << scheme_name(r.cell.scheme) << ',' << r.cell.k << ',' << r.cell.b << ',' << r.cell.t << ','
       << r.cell.bits << ',' << (r.feasible ? 1 : 0) << ',';
    if (r.feasible) {
      os << r.w << ',' << r.m << ",1/" << r.w << ',' << r.formula_bytes << ',';
    } else {
      os << ",,,,";
    }
    if (r.measured_bytes) os << *r.measured_bytes;
    std::string note = r.note;
    for (char& ch : note) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    os << ',' << note << '\n';
  }
  return os.str();
}

std::string bench_json(const std::vector<BenchRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json j{{"scheme", scheme_name(r.cell.scheme)},
           {"k", r.cell.k},
           {"b", r.cell.b},
           {"t", r.cell.t},
           {"bits", r.cell.bits},
           {"feasible", r.feasible},
           {"note", r.note}};
    if (r.feasible) {
      j["w"] = r.w;
      j["m"] = r.m;
      j["exponent"] = "1/" + std::to_string(r.w);
      j["formula_bytes"] = r.formula_bytes;
    }
    j["measured_bytes"] = r.measured_bytes ? json(*r.measured_bytes) : json(nullptr);
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

SelftestReport run_selftest(u64 instances, u64 seed,
                            const std::function<void(const SelftestInstance&)>& on_instance) {
  static constexpr u64 kPrimes[] = {7, 11, 13, 17};
  CounterRng rng(seed, 0x5E1F7E57);
  SelftestReport report;
  while (report.instances < instances) {
    SelftestInstance inst;
    inst.p = kPrimes[rng.uniform(4)];
    inst.k = 2 + static_cast<int>(rng.uniform(5));
    inst.b = static_cast<int>(rng.uniform(static_cast<u64>(inst.k - 1)));
    inst.wt = 1 + static_cast<int>(rng.uniform(2));
    const int good = inst.k - inst.b;
    if (inst.wt > 2 * good - 2) continue;
    if (qbase_monomial_count(2 * good - 1, inst.wt) <= 2 * inst.k) continue;
    const FieldModulus mod(inst.p);

    std::vector<u64> points;
    for (u64 v = 1; v < inst.p; ++v) points.push_back(v);
    for (int a = 0; a < inst.k; ++a) std::swap(points[a], points[a + rng.uniform(points.size() - a)]);

    std::vector<FieldElement> coeffs;
    for (int d = 0; d <= inst.wt; ++d) coeffs.push_back(rng.element(mod));
    const Polynomial f(mod, coeffs);
    for (int d = 0; d <= inst.wt; ++d) coeffs[d] = rng.element(mod);
    const Polynomial fake(mod, coeffs);
    const Polynomial df = f.derivative(), dfake = fake.derivative();
    // 0: honest then b corruptions, 1: all tuples random
    const bool scrambled = rng.uniform(8) == 0;
    for (int a = 0; a < inst.k; ++a) {
      const FieldElement x = mod(points[a]);
      HermiteSample s{x, f.eval(x), df.eval(x)};
      if (scrambled) {
        s.alpha = rng.element(mod);
        s.beta = rng.element(mod);
      } else if (a >= good) {
        switch (rng.uniform(4)) {
          case 0:
            s.alpha = rng.element(mod);
            s.beta = rng.element(mod);
            break;
          case 1:
            s.alpha = fake.eval(x);
            s.beta = dfake.eval(x);
            break;
          case 2:
            s.alpha += rng.nonzero_element(mod);
            break;
          default:
            s.beta += rng.nonzero_element(mod);
            break;
        }
      }
      inst.tuples.push_back(s);
    }
    for (int a = inst.k - 1; a > 0; --a) std::swap(inst.tuples[a], inst.tuples[rng.uniform(a + 1)]);

    inst.naive = reconstruct_g1(inst.tuples, inst.wt, inst.b, G1Mode::kNaive).candidates;
    inst.optimized = reconstruct_g1(inst.tuples, inst.wt, inst.b, G1Mode::kOptimized).candidates;
    inst.bivariate = reconstruct_g2(inst.tuples, inst.wt, inst.b, rng()).candidates;
    inst.oracle = brute_force_list(inst.tuples, inst.wt, inst.b, mod);
    ++report.instances;
    if (!inst.agree()) {
      ++report.mismatches;
      if (!report.first_mismatch) report.first_mismatch = inst;
    }
    if (on_instance) on_instance(inst);
  }
  return report;
}

}  // namespace ldpir
