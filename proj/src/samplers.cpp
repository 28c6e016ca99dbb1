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

#include "quboflow/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quboflow/errors.hpp"
#include "quboflow/kernels/kernels.hpp"

namespace quboflow {

namespace {

// Grouping order for deduplication: plain word-tuple order (the final
// (energy, lex) sort happens afterwards).
bool words_less(const std::uint64_t* a, const std::uint64_t* b, std::size_t wps) {
  for (std::size_t i = 0; i < wps; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool words_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t wps) {
  for (std::size_t i = 0; i < wps; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Energies for distinct packed states, through the same arithmetic as
// eval_energy (single-word states take the batch kernel).
std::vector<double> energies_for(const Qubo& qubo, const std::vector<std::uint64_t>& words,
                                 std::size_t wps, std::size_t count) {
  std::vector<double> energies(count);
  if (wps == 1) {
    const kernels::TermList terms = kernels::TermList::compile(qubo);
    kernels::active_kernels().batch_energy(terms, words.data(), count, energies.data());
  } else {
    for (std::size_t i = 0; i < count; ++i)
      energies[i] = eval_energy(
          qubo, unpack_bits({words.data() + i * wps, wps}, static_cast<std::size_t>(qubo.num_vars)));
  }
  return energies;
}

}  // namespace

SampleSet sample_exhaustive(const Qubo& qubo) {
  if (qubo.num_vars < 1) throw ConfigError("sample_exhaustive: empty landscape");
  if (qubo.num_vars > kMaxExhaustiveVars)
    throw CapacityError("sample_exhaustive: " + std::to_string(qubo.num_vars) +
                        " variables exceed the exhaustive cap of " +
                        std::to_string(kMaxExhaustiveVars) +
                        "; use the annealing sampler instead");

  const std::size_t total = std::size_t{1} << qubo.num_vars;
  const kernels::TermList terms = kernels::TermList::compile(qubo);

  SampleSet set = SampleSet::empty(qubo.num_vars);
  set.words.resize(total);
  for (std::size_t s = 0; s < total; ++s) set.words[s] = s;
  set.energies.resize(total);
  kernels::active_kernels().batch_energy(terms, set.words.data(), total, set.energies.data());
  set.occurrences.assign(total, 1);
  set.num_reads = total;
  set.sort_entries();
  return set;
}

std::vector<double> annealing_temperatures(const Qubo& qubo, const SamplerConfig& cfg) {
  if (cfg.sweeps < 1) throw ConfigError("sample_annealing: sweeps must be >= 1");
  double t0 = cfg.initial_temperature;
  if (t0 == 0.0) {
    t0 = qubo.max_abs_coefficient();
    if (t0 == 0.0) t0 = 1.0;
  }
  double t1 = cfg.final_temperature;
  if (t1 == 0.0) t1 = 1e-3 * t0;
  if (!(t0 > 0.0) || !(t1 > 0.0))
    throw ConfigError("sample_annealing: temperatures must be positive");
  if (!(t1 < t0)) throw ConfigError("sample_annealing: final temperature must be below initial");

  std::vector<double> temps(cfg.sweeps);
  if (cfg.sweeps == 1) {
    temps[0] = t0;
  } else {
    const double ratio = t1 / t0;
    const double denom = static_cast<double>(cfg.sweeps - 1);
    for (std::size_t s = 0; s < cfg.sweeps; ++s)
      temps[s] = t0 * std::pow(ratio, static_cast<double>(s) / denom);
  }
  return temps;
}

SampleSet sample_annealing(const Qubo& qubo, const SamplerConfig& cfg) {
  if (qubo.num_vars < 1) throw ConfigError("sample_annealing: empty landscape");
  if (cfg.num_reads < 1) throw ConfigError("sample_annealing: num_reads must be >= 1");
  if (cfg.num_reads > 0xFFFFFFFFull)
    throw CapacityError("sample_annealing: more than 2^32-1 reads per batch");

  const kernels::SaProblem problem =
      kernels::SaProblem::compile(qubo, annealing_temperatures(qubo, cfg));
  const std::size_t wps = problem.words_per_state();

  std::vector<std::uint64_t> reads(cfg.num_reads * wps);
  kernels::active_kernels().run_reads(problem, cfg.seed, cfg.read_offset, cfg.num_reads,
                                      reads.data());

  // Deduplicate: sort read indices by state, then group.
  std::vector<std::uint32_t> order(cfg.num_reads);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return words_less(reads.data() + a * wps, reads.data() + b * wps, wps);
  });

  SampleSet set = SampleSet::empty(qubo.num_vars);
  set.num_reads = cfg.num_reads;
  for (std::size_t i = 0; i < order.size();) {
    const std::uint64_t* state = reads.data() + order[i] * wps;
    std::size_t j = i + 1;
    while (j < order.size() && words_equal(state, reads.data() + order[j] * wps, wps)) ++j;
    set.words.insert(set.words.end(), state, state + wps);
    set.occurrences.push_back(j - i);
    i = j;
  }
  set.energies = energies_for(qubo, set.words, wps, set.occurrences.size());
  set.sort_entries();
  return set;
}

SampleSet merge(const SampleSet& a, const SampleSet& b) {
  if (a.num_vars != b.num_vars)
    throw DimensionError("merge: sample sets over different variable counts");
  const std::size_t wps = a.words_per_state;

  struct Ref {
    const SampleSet* set;
    std::size_t idx;
  };
  std::vector<Ref> refs;
  refs.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) refs.push_back({&a, i});
  for (std::size_t i = 0; i < b.size(); ++i) refs.push_back({&b, i});
  std::sort(refs.begin(), refs.end(), [&](const Ref& x, const Ref& y) {
    return words_less(x.set->words.data() + x.idx * wps, y.set->words.data() + y.idx * wps,
                      wps);
  });

  SampleSet out = SampleSet::empty(a.num_vars);
  out.num_reads = a.num_reads + b.num_reads;
  for (std::size_t i = 0; i < refs.size();) {
    const std::uint64_t* state = refs[i].set->words.data() + refs[i].idx * wps;
    const double energy = refs[i].set->energies[refs[i].idx];
    std::uint64_t occ = 0;
    std::size_t j = i;
    for (; j < refs.size() &&
           words_equal(state, refs[j].set->words.data() + refs[j].idx * wps, wps);
         ++j) {
      if (refs[j].set->energies[refs[j].idx] != energy)
        throw ConfigError("merge: same state carries different energies");
      occ += refs[j].set->occurrences[refs[j].idx];
    }
    out.words.insert(out.words.end(), state, state + wps);
    out.energies.push_back(energy);
    out.occurrences.push_back(occ);
    i = j;
  }
  out.sort_entries();
  return out;
}

}  // namespace quboflow
