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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quboflow/analysis.hpp"
#include "quboflow/channel_flow.hpp"
#include "quboflow/qubo.hpp"
#include "quboflow/selection.hpp"

namespace quboflow {

enum class SamplerKind { kExhaustive, kAnnealing };
enum class FeedMode { kQuantum, kClassical };

std::string sampler_name(SamplerKind s);
SamplerKind sampler_from_name(const std::string& name);
std::string feed_name(FeedMode f);
FeedMode feed_from_name(const std::string& name);

/// Full description of one experiment. Everything an output depends on lives
/// here, and the manifest echoes it key for key, so a manifest alone
/// reproduces a run byte-identically.
struct RunConfig {
  FlowParams flow;
  int precision = 4;
  int radix_position = 1;
  std::uint64_t num_reads = 10000;
  SamplerKind sampler = SamplerKind::kAnnealing;
  std::vector<Strategy> strategies = {Strategy::kLowestEnergy};
  bool all_strategies = false;
  std::uint64_t seed = 0;
  std::size_t sweeps = 1000;         // annealing sweeps per read
  double t0 = 0.0;                   // annealing start temperature (0 = auto)
  double t1 = 0.0;                   // annealing end temperature (0 = auto)
  double initial_value = 0.0;        // initial interior velocity
  FeedMode feed = FeedMode::kQuantum;
  int embed_budget = 54;
  std::size_t dump_max_rows = 65536; // sample dump truncation (0 = unlimited)
  bool validate_samples = false;     // re-check sample-set invariants per draw
  std::string out_dir = "out";

  FixedPointFormat format() const;
  int logical_size() const;
  void validate() const;

  /// "lowest", "mean", "wmean" or "all".
  void set_strategy(const std::string& name);
  std::string strategy_string() const;
};

/// key=value config text (comments start with '#' or ';'). Keys match the
/// CLI flag names without the leading dashes.
std::map<std::string, std::string> load_key_value_file(const std::string& path);
void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& kv);
RunConfig config_from_file(const std::string& path);
std::string manifest_text(const RunConfig& cfg, const std::vector<std::string>& notes);

/// Per-strategy trajectory and analysis products kept in memory after a run
/// (sample sets are streamed to disk, not retained).
struct StrategyRun {
  Strategy strategy = Strategy::kLowestEnergy;
  std::vector<SolutionProfile> profiles;  // indices 0..n_steps
  std::vector<Qubo> qubos;                // one per step
  std::vector<double> min_energies;       // lowest sampled energy per step
  ErrorSeries errors;
  CenterDistribution center;
};

struct RunResult {
  RunConfig config;
  std::vector<SolutionProfile> classical;  // indices 0..n_steps
  std::vector<StrategyRun> per_strategy;
  std::vector<std::string> warnings;
};

/// Runs the full time-stepping experiment: per step, assemble the system
/// from the previous selected profile (or the classical profile under
/// --feed classical), expand to binary variables, build the QUBO, sample,
/// select per strategy, and advance; the classical trajectory runs in
/// lockstep. Writes profiles.csv, errors.csv, center distribution(s),
/// per-step sample dumps and manifest.txt under cfg.out_dir.
RunResult run_experiment(const RunConfig& cfg);

struct SweepEntry {
  int grid_points = 0;
  int precision = 0;
  int size = 0;
  bool completed = false;
  std::string dir;
  std::string reason;
};

/// run_experiment per (grid_points, precision) combination, skipping those
/// whose logical size exceeds the embed budget; writes sweep_index.csv under
/// base.out_dir. `on_result` observes each completed run.
using SweepObserver = std::function<void(const SweepEntry&, const RunResult&)>;
std::vector<SweepEntry> sweep(const RunConfig& base, const std::vector<int>& grid_points,
                              const std::vector<int>& precisions,
                              const SweepObserver& on_result = {});

}  // namespace quboflow
