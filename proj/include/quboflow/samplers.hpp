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
#include <vector>

#include "quboflow/qubo.hpp"
#include "quboflow/sample_set.hpp"

namespace quboflow {

/// Exhaustive enumeration refuses anything past this many variables
/// (2^26 states is the largest batch worth materializing).
inline constexpr int kMaxExhaustiveVars = 26;

/// Simulated-annealing batch parameters. Each read is one independent
/// single-bit-flip Metropolis chain cooled geometrically from the initial to
/// the final temperature over `sweeps` passes; a zero temperature field means
/// "derive from the landscape" (T0 = largest coefficient magnitude,
/// T1 = 1e-3 * T0). Chain r depends only on (seed, read_offset + r), so read
/// batches can be split and merged without changing any chain.
struct SamplerConfig {
  std::uint64_t num_reads = 10000;
  std::uint64_t seed = 0;
  std::uint64_t read_offset = 0;
  double initial_temperature = 0.0;  // 0 = auto
  double final_temperature = 0.0;    // 0 = auto
  std::size_t sweeps = 1000;
};

/// All 2^M states, each with occurrence count 1, sorted by energy; the first
/// entry is a true global minimizer. Throws CapacityError past
/// kMaxExhaustiveVars.
SampleSet sample_exhaustive(const Qubo& qubo);

/// num_reads independent annealing chains aggregated into a SampleSet.
/// Deterministic in (qubo, cfg), and identical whichever kernel variant runs.
SampleSet sample_annealing(const Qubo& qubo, const SamplerConfig& cfg);

/// Union of two batches over the same variable space: occurrences of shared
/// states add, num_reads add.
SampleSet merge(const SampleSet& a, const SampleSet& b);

/// The resolved geometric temperature ladder sample_annealing would use.
std::vector<double> annealing_temperatures(const Qubo& qubo, const SamplerConfig& cfg);

}  // namespace quboflow
