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

#include <string>
#include <vector>

#include "quboflow/channel_flow.hpp"
#include "quboflow/fixed_point.hpp"
#include "quboflow/sample_set.hpp"

namespace quboflow {

/// How to collapse a read distribution into one real-valued solution.
///   kLowestEnergy  — decode the minimum-energy state.
///   kUnweightedMean — mean of the decoded DISTINCT states, ignoring counts.
///   kWeightedMean  — occurrence-weighted mean over all reads.
enum class Strategy { kLowestEnergy, kUnweightedMean, kWeightedMean };

/// CLI names: "lowest", "mean", "wmean".
std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// One value per encoded coordinate; `count` blocks of fmt.precision bits.
/// Mean strategies return reals off the fixed-point lattice; they are not
/// re-quantized.
std::vector<double> select(const SampleSet& samples, Strategy strategy,
                           const FixedPointFormat& fmt, std::size_t count);

/// select() over the interior points, with zero boundaries reattached.
SolutionProfile select_profile(const SampleSet& samples, Strategy strategy,
                               const FixedPointFormat& fmt, const FlowParams& params,
                               int time_index = 0);

}  // namespace quboflow
