//
// Copyright 2026 the quboflow authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "quboflow/run.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "quboflow/errors.hpp"
#include "quboflow/samplers.hpp"
#include "quboflow/text.hpp"

namespace quboflow {

namespace fs = std::filesystem;

std::string sampler_name(SamplerKind s) {
  return s == SamplerKind::kExhaustive ? "exhaustive" : "annealing";
}

SamplerKind sampler_from_name(const std::string& name) {
  if (name == "exhaustive") return SamplerKind::kExhaustive;
  if (name == "annealing") return SamplerKind::kAnnealing;
  throw ConfigError("unknown sampler '" + name + "' (expected exhaustive or annealing)");
}

std::string feed_name(FeedMode f) { return f == FeedMode::kQuantum ? "quantum" : "classical"; }

FeedMode feed_from_name(const std::string& name) {
  if (name == "quantum") return FeedMode::kQuantum;
  if (name == "classical") return FeedMode::kClassical;
  throw ConfigError("unknown feed mode '" + name + "' (expected quantum or classical)");
}

FixedPointFormat RunConfig::format() const { return FixedPointFormat(precision, radix_position); }

int RunConfig::logical_size() const {
  return logical_problem_size(flow.grid_points, precision);
}

void RunConfig::set_strategy(const std::string& name) {
  if (name == "all") {
    strategies = {Strategy::kLowestEnergy, Strategy::kUnweightedMean, Strategy::kWeightedMean};
    all_strategies = true;
  } else {
    strategies = {strategy_from_name(name)};
    all_strategies = false;
  }
}

std::string RunConfig::strategy_string() const {
  if (all_strategies) return "all";
  return strategy_name(strategies.at(0));
}

void RunConfig::validate() const {
  flow.validate();
  (void)format();  // throws on a bad precision / radix position
  if (strategies.empty()) throw ConfigError("RunConfig: no selection strategy");
  if (sweeps < 1) throw ConfigError("RunConfig: sweeps must be >= 1");
  if (num_reads < 1) throw ConfigError("RunConfig: reads must be >= 1");
  if (embed_budget < 1) throw ConfigError("RunConfig: embed budget must be >= 1");
  if (initial_value < 0.0) throw ConfigError("RunConfig: initial value must be non-negative");
  if (sampler == SamplerKind::kExhaustive && logical_size() > kMaxExhaustiveVars)
    throw CapacityError(
        "RunConfig: logical problem size " + std::to_string(logical_size()) +
        " exceeds the exhaustive sampler cap of " + std::to_string(kMaxExhaustiveVars) +
        "; switch to --sampler annealing");
}

std::map<std::string, std::string> load_key_value_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#' || sv.front() == ';') continue;
    const auto eq = sv.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
    kv[std::string(trim(sv.substr(0, eq)))] = std::string(trim(sv.substr(eq + 1)));
  }
  return kv;
}

void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "grid-points") cfg.flow.grid_points = static_cast<int>(parse_int(value));
    else if (key == "precision") cfg.precision = static_cast<int>(parse_int(value));
    else if (key == "radix-pos") cfg.radix_position = static_cast<int>(parse_int(value));
    else if (key == "steps") cfg.flow.n_steps = static_cast<int>(parse_int(value));
    else if (key == "reads") cfg.num_reads = static_cast<std::uint64_t>(parse_int(value));
    else if (key == "sampler") cfg.sampler = sampler_from_name(value);
    else if (key == "strategy") cfg.set_strategy(value);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(value));
    else if (key == "sweeps") cfg.sweeps = static_cast<std::size_t>(parse_int(value));
    else if (key == "t0") cfg.t0 = parse_double(value);
    else if (key == "t1") cfg.t1 = parse_double(value);
    else if (key == "alpha") cfg.flow.alpha = parse_double(value);
    else if (key == "density") cfg.flow.density = parse_double(value);
    else if (key == "viscosity") cfg.flow.dynamic_viscosity = parse_double(value);
    else if (key == "dpdx") cfg.flow.pressure_gradient = parse_double(value);
    else if (key == "channel-height") cfg.flow.channel_height = parse_double(value);
    else if (key == "body-force") cfg.flow.body_force = parse_double(value);
    else if (key == "initial") cfg.initial_value = parse_double(value);
    else if (key == "feed") cfg.feed = feed_from_name(value);
    else if (key == "embed-budget") cfg.embed_budget = static_cast<int>(parse_int(value));
    else if (key == "dump-max-rows") cfg.dump_max_rows = static_cast<std::size_t>(parse_int(value));
    else if (key == "validate-samples") cfg.validate_samples = parse_int(value) != 0;
    else if (key == "out") cfg.out_dir = value;
    else throw ConfigError("unknown config key '" + key + "'");
  }
}

RunConfig config_from_file(const std::string& path) {
  RunConfig cfg;
  apply_config(cfg, load_key_value_file(path));
  return cfg;
}

std::string manifest_text(const RunConfig& cfg, const std::vector<std::string>& notes) {
  std::ostringstream os;
  os << "# quboflow run manifest; rerunnable via --config\n";
  os << "grid-points=" << cfg.flow.grid_points << '\n';
  os << "precision=" << cfg.precision << '\n';
  os << "radix-pos=" << cfg.radix_position << '\n';
  os << "steps=" << cfg.flow.n_steps << '\n';
  os << "reads=" << cfg.num_reads << '\n';
  os << "sampler=" << sampler_name(cfg.sampler) << '\n';
  os << "strategy=" << cfg.strategy_string() << '\n';
  os << "seed=" << cfg.seed << '\n';
  os << "sweeps=" << cfg.sweeps << '\n';
  os << "t0=" << format_double(cfg.t0) << '\n';
  os << "t1=" << format_double(cfg.t1) << '\n';
  os << "alpha=" << format_double(cfg.flow.alpha) << '\n';
  os << "density=" << format_double(cfg.flow.density) << '\n';
  os << "viscosity=" << format_double(cfg.flow.dynamic_viscosity) << '\n';
  os << "dpdx=" << format_double(cfg.flow.pressure_gradient) << '\n';
  os << "channel-height=" << format_double(cfg.flow.channel_height) << '\n';
  os << "body-force=" << format_double(cfg.flow.body_force) << '\n';
  os << "initial=" << format_double(cfg.initial_value) << '\n';
  os << "feed=" << feed_name(cfg.feed) << '\n';
  os << "embed-budget=" << cfg.embed_budget << '\n';
  os << "dump-max-rows=" << cfg.dump_max_rows << '\n';
  os << "validate-samples=" << (cfg.validate_samples ? 1 : 0) << '\n';
  os << "out=" << cfg.out_dir << '\n';
  for (const std::string& n : notes) os << "# " << n << '\n';
  return os.str();
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

// One sampler seed per (step, trajectory); lane 7 marks the shared
// classical-feed draw.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t step, std::uint64_t lane) {
  return mix64(master + 0x9E3779B97F4A7C15ull * (step * 8 + lane + 1));
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open output file " + path.string());
  return os;
}

std::string step_suffix(int step) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", step);
  return buf;
}

struct StepDraw {
  Qubo qubo;
  SampleSet samples;
};

StepDraw draw_step(const RunConfig& cfg, const FixedPointFormat& fmt,
                   const SolutionProfile& prev, std::uint64_t sampler_seed) {
  StepDraw d;
  const LinearSystem sys = assemble_system(cfg.flow, prev);
  const Matrix ad = expand_matrix(sys.to_dense(), fmt);
  d.qubo = build_qubo(ad, sys.rhs);
  if (cfg.sampler == SamplerKind::kExhaustive) {
    d.samples = sample_exhaustive(d.qubo);
  } else {
    SamplerConfig sc;
    sc.num_reads = cfg.num_reads;
    sc.seed = sampler_seed;
    sc.sweeps = cfg.sweeps;
    sc.initial_temperature = cfg.t0;
    sc.final_temperature = cfg.t1;
    d.samples = sample_annealing(d.qubo, sc);
  }
  if (cfg.validate_samples) d.samples.validate(d.qubo);
  return d;
}

// Decoded values never exceed the format maximum, but the mean strategies
// divide in floating point; clamp and report rather than let a stray ulp
// leak into the next right-hand side.
void clamp_profile(SolutionProfile& profile, const FixedPointFormat& fmt, int step,
                   Strategy strategy, std::vector<std::string>& warnings) {
  const double vmax = fmt.max_value();
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    if (profile.values[i] > vmax) {
      warnings.push_back("step " + std::to_string(step) + " strategy " +
                         strategy_name(strategy) + ": value " +
                         format_double(profile.values[i]) + " at grid index " +
                         std::to_string(i) + " clamped to " + format_double(vmax));
      profile.values[i] = vmax;
    }
  }
}

void append_center_step(CenterDistribution& acc, const SampleSet& set,
                        const FixedPointFormat& fmt, const FlowParams& flow) {
  CenterDistribution one = center_distribution({set}, fmt, flow);
  acc.center_index = one.center_index;
  acc.used_lower_middle = one.used_lower_middle;
  acc.per_step.push_back(std::move(one.per_step.front()));
}

}  // namespace

RunResult run_experiment(const RunConfig& cfg) {
  cfg.validate();
  const FixedPointFormat fmt = cfg.format();
  const FlowParams& flow = cfg.flow;
  fs::create_directories(cfg.out_dir);

  RunResult result;
  result.config = cfg;
  result.classical.push_back(initial_profile(flow, cfg.initial_value));

  for (Strategy s : cfg.strategies) {
    StrategyRun sr;
    sr.strategy = s;
    sr.profiles.push_back(result.classical.front());
    result.per_strategy.push_back(std::move(sr));
  }

  for (int step = 1; step <= flow.n_steps; ++step) {
    result.classical.push_back(step_classical(flow, result.classical.back()));

    if (cfg.feed == FeedMode::kClassical) {
      // One draw per step, shared by every strategy: errors then measure the
      // per-step QUBO solve alone, with no accumulation across steps.
      const SolutionProfile& prev = result.classical[static_cast<std::size_t>(step - 1)];
      StepDraw d = draw_step(cfg, fmt, prev, derive_seed(cfg.seed, static_cast<std::uint64_t>(step), 7));
      {
        auto os = open_out(fs::path(cfg.out_dir) / ("samples_step" + step_suffix(step) + ".csv"));
        d.samples.write_csv(os, cfg.dump_max_rows);
      }
      for (StrategyRun& sr : result.per_strategy) {
        SolutionProfile profile = select_profile(d.samples, sr.strategy, fmt, flow, step);
        clamp_profile(profile, fmt, step, sr.strategy, result.warnings);
        sr.qubos.push_back(d.qubo);
        sr.min_energies.push_back(d.samples.energies.front());
        append_center_step(sr.center, d.samples, fmt, flow);
        sr.errors.rows.push_back({step, sr.strategy, cfg.precision, flow.grid_points,
                                  l2_error(profile.values, result.classical.back().values),
                                  linf_error(profile.values, result.classical.back().values),
                                  chebyshev_error(profile.values, result.classical.back().values)});
        sr.profiles.push_back(std::move(profile));
      }
    } else {
      for (std::size_t si = 0; si < result.per_strategy.size(); ++si) {
        StrategyRun& sr = result.per_strategy[si];
        StepDraw d = draw_step(cfg, fmt, sr.profiles.back(),
                               derive_seed(cfg.seed, static_cast<std::uint64_t>(step), si));
        {
          const std::string name = cfg.all_strategies
                                       ? "samples_" + strategy_name(sr.strategy) + "_step" +
                                             step_suffix(step) + ".csv"
                                       : "samples_step" + step_suffix(step) + ".csv";
          auto os = open_out(fs::path(cfg.out_dir) / name);
          d.samples.write_csv(os, cfg.dump_max_rows);
        }
        SolutionProfile profile = select_profile(d.samples, sr.strategy, fmt, flow, step);
        clamp_profile(profile, fmt, step, sr.strategy, result.warnings);
        sr.qubos.push_back(std::move(d.qubo));
        sr.min_energies.push_back(d.samples.energies.front());
        append_center_step(sr.center, d.samples, fmt, flow);
        sr.errors.rows.push_back({step, sr.strategy, cfg.precision, flow.grid_points,
                                  l2_error(profile.values, result.classical.back().values),
                                  linf_error(profile.values, result.classical.back().values),
                                  chebyshev_error(profile.values, result.classical.back().values)});
        sr.profiles.push_back(std::move(profile));
      }
    }
  }

  // profiles.csv: step, grid index, y, one column per strategy, classical.
  {
    auto os = open_out(fs::path(cfg.out_dir) / "profiles.csv");
    os << "step,index,y";
    for (const StrategyRun& sr : result.per_strategy) os << ",q_" << strategy_name(sr.strategy);
    os << ",classical\n";
    for (int step = 0; step <= flow.n_steps; ++step)
      for (int i = 0; i < flow.grid_points; ++i) {
        os << step << ',' << i << ',' << format_double(static_cast<double>(i) * flow.dy());
        for (const StrategyRun& sr : result.per_strategy)
          os << ',' << format_double(sr.profiles[static_cast<std::size_t>(step)]
                                         .values[static_cast<std::size_t>(i)]);
        os << ',' << format_double(result.classical[static_cast<std::size_t>(step)]
                                       .values[static_cast<std::size_t>(i)]);
        os << '\n';
      }
  }

  // errors.csv, all strategies interleaved by step.
  {
    ErrorSeries all;
    for (int step = 0; step < flow.n_steps; ++step)
      for (const StrategyRun& sr : result.per_strategy)
        all.rows.push_back(sr.errors.rows[static_cast<std::size_t>(step)]);
    auto os = open_out(fs::path(cfg.out_dir) / "errors.csv");
    write_errors_csv(os, all);
  }

  for (const StrategyRun& sr : result.per_strategy) {
    const std::string name = cfg.all_strategies
                                 ? "center_dist_" + strategy_name(sr.strategy) + ".csv"
                                 : "center_dist.csv";
    auto os = open_out(fs::path(cfg.out_dir) / name);
    write_center_csv(os, sr.center);
  }

  {
    std::vector<std::string> notes;
    notes.push_back("center-index=" + std::to_string(center_grid_index(flow.grid_points)));
    notes.push_back(std::string("center-lower-middle=") +
                    (flow.grid_points % 2 == 0 ? "true" : "false"));
    for (const std::string& w : result.warnings) notes.push_back("warning: " + w);
    auto os = open_out(fs::path(cfg.out_dir) / "manifest.txt");
    os << manifest_text(cfg, notes);
  }

  return result;
}

std::vector<SweepEntry> sweep(const RunConfig& base, const std::vector<int>& grid_points,
                              const std::vector<int>& precisions,
                              const SweepObserver& on_result) {
  fs::create_directories(base.out_dir);
  std::vector<SweepEntry> entries;

  for (int g : grid_points)
    for (int n : precisions) {
      SweepEntry e;
      e.grid_points = g;
      e.precision = n;
      e.size = logical_problem_size(g, n);
      if (!embeddable_hint(e.size, base.embed_budget)) {
        e.completed = false;
        e.reason = "size " + std::to_string(e.size) + " exceeds budget " +
                   std::to_string(base.embed_budget);
      } else {
        RunConfig cfg = base;
        cfg.flow.grid_points = g;
        cfg.precision = n;
        e.dir = "sweep_ngp" + std::to_string(g) + "_n" + std::to_string(n);
        cfg.out_dir = (fs::path(base.out_dir) / e.dir).string();
        const RunResult result = run_experiment(cfg);
        e.completed = true;
        if (on_result) on_result(e, result);
      }
      entries.push_back(std::move(e));
    }

  auto os = open_out(fs::path(base.out_dir) / "sweep_index.csv");
  os << "Ngp,n,size,status,dir,reason\n";
  for (const SweepEntry& e : entries)
    os << e.grid_points << ',' << e.precision << ',' << e.size << ','
       << (e.completed ? "completed" : "skipped") << ',' << e.dir << ',' << e.reason << '\n';
  return entries;
}

}  // namespace quboflow
