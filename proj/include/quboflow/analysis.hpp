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
#include <iosfwd>
#include <vector>

#include "quboflow/channel_flow.hpp"
#include "quboflow/fixed_point.hpp"
#include "quboflow/sample_set.hpp"
#include "quboflow/selection.hpp"

namespace quboflow {

/// Euclidean norm of the difference.
double l2_error(const std::vector<double>& q_sol, const std::vector<double>& c_sol);

/// |max(q_sol) - max(c_sol)|: the difference of the profile maxima, which for
/// the unimodal profiles here tracks the error at the channel center. This is
/// NOT the Chebyshev norm; see chebyshev_error for max |q_i - c_i|.
double linf_error(const std::vector<double>& q_sol, const std::vector<double>& c_sol);

/// max_i |q_i - c_i|, the conventional infinity norm of the difference.
double chebyshev_error(const std::vector<double>& q_sol, const std::vector<double>& c_sol);

/// Per-step error record for one (strategy, precision, grid) combination.
struct ErrorRow {
  int step = 0;
  Strategy strategy = Strategy::kLowestEnergy;
  int precision = 0;
  int grid_points = 0;
  double l2 = 0.0;
  double linf = 0.0;
  double chebyshev = 0.0;
};

struct ErrorSeries {
  std::vector<ErrorRow> rows;
};

/// Histogram of decoded values at the channel-center grid point.
struct CenterBin {
  double value = 0.0;
  std::uint64_t occurrences = 0;
};

struct CenterDistribution {
  int center_index = 0;           // full-grid index of the sampled point
  bool used_lower_middle = false; // true when grid_points is even
  std::vector<std::vector<CenterBin>> per_step;  // bins sorted by value
};

/// Full-grid index of the domain-center point: the middle point for odd
/// grids, the lower-middle interior point for even grids.
int center_grid_index(int grid_points);

/// Occurrence-weighted histograms of the decoded center value, one per step.
CenterDistribution center_distribution(const std::vector<SampleSet>& samples_per_step,
                                       const FixedPointFormat& fmt, const FlowParams& params);

/// errors.csv: "step,strategy,n,Ngp,l2,linf,chebyshev".
void write_errors_csv(std::ostream& os, const ErrorSeries& series);

/// center_dist.csv: "step,value,occurrences", rows by step then value.
void write_center_csv(std::ostream& os, const CenterDistribution& dist);

}  // namespace quboflow
