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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "quboflow/channel_flow.hpp"
#include "quboflow/errors.hpp"
#include "quboflow/fixed_point.hpp"
#include "quboflow/qubo.hpp"
#include "quboflow/run.hpp"
#include "quboflow/samplers.hpp"

namespace {

using quboflow::RunConfig;

// Flags bound here override config-file values only when given on the
// command line.
struct CommonFlags {
  std::string config_path;
  int grid_points = 0;
  int precision = 0;
  int radix_pos = 0;
  int steps = 0;
  std::uint64_t reads = 0;
  std::string sampler;
  std::string strategy;
  std::uint64_t seed = 0;
  std::uint64_t sweeps = 0;
  double t0 = 0.0;
  double t1 = 0.0;
  double alpha = 0.0;
  double density = 0.0;
  double viscosity = 0.0;
  double dpdx = 0.0;
  double initial = 0.0;
  std::string feed;
  int embed_budget = 0;
  std::uint64_t dump_max_rows = 0;
  std::string out;
};

void add_common_flags(CLI::App& app, CommonFlags& f, bool scalar_grid) {
  app.add_option("--config", f.config_path,
                 "key=value config file; explicit flags override it");
  if (scalar_grid) {
    app.add_option("--grid-points", f.grid_points, "grid points including boundaries (>= 3)");
    app.add_option("--precision", f.precision, "bits per unknown");
  }
  app.add_option("--radix-pos", f.radix_pos, "fixed-point radix position (default 1)");
  app.add_option("--steps", f.steps, "number of time steps (default 10)");
  app.add_option("--reads", f.reads, "annealer reads per step (default 10000)");
  app.add_option("--sampler", f.sampler, "exhaustive | annealing (default annealing)");
  app.add_option("--strategy", f.strategy, "lowest | mean | wmean | all (default lowest)");
  app.add_option("--seed", f.seed, "master seed; all randomness derives from it");
  app.add_option("--sweeps", f.sweeps, "annealing sweeps per read (default 1000)");
  app.add_option("--t0", f.t0, "annealing start temperature (default: largest coefficient)");
  app.add_option("--t1", f.t1, "annealing end temperature (default: 1e-3 * start)");
  app.add_option("--alpha", f.alpha, "diffusion number nu*dt/dy^2 (default 0.4)");
  app.add_option("--density", f.density, "fluid density (default 0.5)");
  app.add_option("--viscosity", f.viscosity, "dynamic viscosity (default 0.6)");
  app.add_option("--dpdx", f.dpdx, "constant pressure gradient (default -2)");
  app.add_option("--initial", f.initial, "initial interior velocity (default 0)");
  app.add_option("--feed", f.feed, "quantum | classical rhs feeding (default quantum)");
  app.add_option("--embed-budget", f.embed_budget, "embeddability size budget (default 54)");
  app.add_option("--dump-max-rows", f.dump_max_rows,
                 "sample dump row cap, 0 = unlimited (default 65536)");
  app.add_option("--out,-o", f.out, "output directory");
}

RunConfig resolve_config(const CLI::App& app, const CommonFlags& f, bool scalar_grid) {
  RunConfig cfg;
  if (!f.config_path.empty()) quboflow::apply_config(cfg, quboflow::load_key_value_file(f.config_path));

  const auto given = [&app](const std::string& name) { return app.count(name) > 0; };
  if (scalar_grid) {
    if (given("--grid-points")) cfg.flow.grid_points = f.grid_points;
    if (given("--precision")) cfg.precision = f.precision;
  }
  if (given("--radix-pos")) cfg.radix_position = f.radix_pos;
  if (given("--steps")) cfg.flow.n_steps = f.steps;
  if (given("--reads")) cfg.num_reads = f.reads;
  if (given("--sampler")) cfg.sampler = quboflow::sampler_from_name(f.sampler);
  if (given("--strategy")) cfg.set_strategy(f.strategy);
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--sweeps")) cfg.sweeps = f.sweeps;
  if (given("--t0")) cfg.t0 = f.t0;
  if (given("--t1")) cfg.t1 = f.t1;
  if (given("--alpha")) cfg.flow.alpha = f.alpha;
  if (given("--density")) cfg.flow.density = f.density;
  if (given("--viscosity")) cfg.flow.dynamic_viscosity = f.viscosity;
  if (given("--dpdx")) cfg.flow.pressure_gradient = f.dpdx;
  if (given("--initial")) cfg.initial_value = f.initial;
  if (given("--feed")) cfg.feed = quboflow::feed_from_name(f.feed);
  if (given("--embed-budget")) cfg.embed_budget = f.embed_budget;
  if (given("--dump-max-rows")) cfg.dump_max_rows = f.dump_max_rows;
  if (given("--out")) cfg.out_dir = f.out;
  return cfg;
}

int cmd_run(const CLI::App& app, const CommonFlags& f) {
  const RunConfig cfg = resolve_config(app, f, true);
  const quboflow::RunResult result = quboflow::run_experiment(cfg);
  std::cout << "run complete: " << cfg.flow.n_steps << " steps, "
            << result.per_strategy.size() << " strateg" << (result.per_strategy.size() == 1 ? "y" : "ies")
            << ", outputs in " << cfg.out_dir << '\n';
  for (const std::string& w : result.warnings) std::cout << "warning: " << w << '\n';
  return 0;
}

int cmd_sweep(const CLI::App& app, const CommonFlags& f, const std::vector<int>& grids,
              const std::vector<int>& precisions) {
  const RunConfig base = resolve_config(app, f, false);
  const auto entries = quboflow::sweep(base, grids, precisions);
  for (const auto& e : entries) {
    std::cout << "Ngp=" << e.grid_points << " n=" << e.precision << " size=" << e.size << ": "
              << (e.completed ? "completed (" + e.dir + ")" : "skipped, " + e.reason) << '\n';
  }
  std::cout << "sweep index in " << base.out_dir << "/sweep_index.csv\n";
  return 0;
}

int cmd_export_qubo(const CLI::App& app, const CommonFlags& f, const std::string& qubo_out) {
  const RunConfig cfg = resolve_config(app, f, true);
  cfg.validate();
  const quboflow::FixedPointFormat fmt = cfg.format();
  const quboflow::SolutionProfile prev = quboflow::initial_profile(cfg.flow, cfg.initial_value);
  const quboflow::LinearSystem sys = quboflow::assemble_system(cfg.flow, prev);
  const quboflow::Matrix ad = quboflow::expand_matrix(sys.to_dense(), fmt);
  const quboflow::Qubo qubo = quboflow::build_qubo(ad, sys.rhs);
  if (qubo_out.empty() || qubo_out == "-") {
    quboflow::write_qubo(std::cout, qubo);
  } else {
    quboflow::write_qubo_file(qubo_out, qubo);
    std::cout << "wrote " << qubo.num_vars << "-variable QUBO to " << qubo_out << '\n';
  }
  return 0;
}

int cmd_sample_qubo(const CommonFlags& f, const std::string& qubo_in,
                    const std::string& csv_out) {
  const quboflow::Qubo qubo = quboflow::read_qubo_file(qubo_in);
  quboflow::SampleSet set;
  if (!f.sampler.empty() && quboflow::sampler_from_name(f.sampler) ==
                                quboflow::SamplerKind::kExhaustive) {
    set = quboflow::sample_exhaustive(qubo);
  } else {
    quboflow::SamplerConfig sc;
    if (f.reads > 0) sc.num_reads = f.reads;
    sc.seed = f.seed;
    if (f.sweeps > 0) sc.sweeps = f.sweeps;
    set = quboflow::sample_annealing(qubo, sc);
  }
  if (csv_out.empty() || csv_out == "-") {
    set.write_csv(std::cout, f.dump_max_rows);
  } else {
    std::ofstream os(csv_out);
    if (!os) throw quboflow::ConfigError("cannot open " + csv_out);
    set.write_csv(os, f.dump_max_rows);
    std::cout << "wrote " << set.size() << " distinct states (" << set.num_reads
              << " reads) to " << csv_out << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transient 1D channel flow solved as per-step QUBO problems on "
               "annealer-emulating samplers, with classical reference analysis"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run one time-stepping experiment");
  add_common_flags(*run, run_flags, true);

  CommonFlags sweep_flags;
  std::vector<int> sweep_grids, sweep_precisions;
  CLI::App* sw = app.add_subcommand("sweep", "run a grid of (grid-points, precision) experiments");
  add_common_flags(*sw, sweep_flags, false);
  sw->add_option("--grid-points", sweep_grids, "grid point counts to sweep")->expected(-1);
  sw->add_option("--precision", sweep_precisions, "precisions to sweep")->expected(-1);

  CommonFlags export_flags;
  std::string qubo_out;
  CLI::App* ex = app.add_subcommand("export-qubo", "write the first-step QUBO in triplet format");
  add_common_flags(*ex, export_flags, true);
  ex->add_option("--qubo-out", qubo_out, "output path (default stdout)");

  CommonFlags sample_flags;
  std::string qubo_in, csv_out;
  CLI::App* sq = app.add_subcommand("sample-qubo", "sample a triplet-format QUBO file");
  sq->add_option("--qubo", qubo_in, "input QUBO file")->required();
  sq->add_option("--sampler", sample_flags.sampler, "exhaustive | annealing (default annealing)");
  sq->add_option("--reads", sample_flags.reads, "reads (default 10000)");
  sq->add_option("--seed", sample_flags.seed, "seed");
  sq->add_option("--sweeps", sample_flags.sweeps, "sweeps per read (default 1000)");
  sq->add_option("--dump-max-rows", sample_flags.dump_max_rows, "row cap, 0 = unlimited");
  sq->add_option("--out,-o", csv_out, "output CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(*run, run_flags);
    if (sw->parsed()) return cmd_sweep(*sw, sweep_flags, sweep_grids, sweep_precisions);
    if (ex->parsed()) return cmd_export_qubo(*ex, export_flags, qubo_out);
    if (sq->parsed()) return cmd_sample_qubo(sample_flags, qubo_in, csv_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
