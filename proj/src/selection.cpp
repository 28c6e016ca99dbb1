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

#include "quboflow/selection.hpp"

#include <string>

#include "quboflow/errors.hpp"

namespace quboflow {

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kLowestEnergy: return "lowest";
    case Strategy::kUnweightedMean: return "mean";
    case Strategy::kWeightedMean: return "wmean";
  }
  throw ConfigError("strategy_name: unknown strategy");
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "lowest") return Strategy::kLowestEnergy;
  if (name == "mean") return Strategy::kUnweightedMean;
  if (name == "wmean") return Strategy::kWeightedMean;
  throw ConfigError("unknown strategy '" + name + "' (expected lowest, mean or wmean)");
}

std::vector<double> select(const SampleSet& samples, Strategy strategy,
                           const FixedPointFormat& fmt, std::size_t count) {
  if (samples.size() == 0) throw ConfigError("select: empty sample set");
  if (static_cast<std::size_t>(samples.num_vars) !=
      count * static_cast<std::size_t>(fmt.precision))
    throw DimensionError("select: sample state length does not equal count*precision");

  switch (strategy) {
    case Strategy::kLowestEnergy:
      return decode_vector(samples.state(0), fmt, count);

    case Strategy::kUnweightedMean: {
      std::vector<double> acc(count, 0.0);
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const std::vector<double> u = decode_vector(samples.state(i), fmt, count);
        for (std::size_t c = 0; c < count; ++c) acc[c] += u[c];
      }
      const double inv = 1.0 / static_cast<double>(samples.size());
      for (double& v : acc) v *= inv;
      return acc;
    }

    case Strategy::kWeightedMean: {
      std::vector<double> acc(count, 0.0);
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const double occ = static_cast<double>(samples.occurrences[i]);
        const std::vector<double> u = decode_vector(samples.state(i), fmt, count);
        for (std::size_t c = 0; c < count; ++c) acc[c] += occ * u[c];
      }
      const double inv = 1.0 / static_cast<double>(samples.num_reads);
      for (double& v : acc) v *= inv;
      return acc;
    }
  }
  throw ConfigError("select: unknown strategy");
}

SolutionProfile select_profile(const SampleSet& samples, Strategy strategy,
                               const FixedPointFormat& fmt, const FlowParams& params,
                               int time_index) {
  const std::size_t interior = static_cast<std::size_t>(params.interior_points());
  const std::vector<double> inner = select(samples, strategy, fmt, interior);

  SolutionProfile profile;
  profile.values.assign(static_cast<std::size_t>(params.grid_points), 0.0);
  for (std::size_t i = 0; i < interior; ++i) profile.values[i + 1] = inner[i];
  profile.time_index = time_index;
  return profile;
}

}  // namespace quboflow
