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

#include "quboflow/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "quboflow/errors.hpp"
#include "quboflow/text.hpp"

namespace quboflow {

namespace {

void check_equal_lengths(const std::vector<double>& a, const std::vector<double>& b,
                         const char* where) {
  if (a.size() != b.size())
    throw DimensionError(std::string(where) + ": vector lengths differ (" +
                         std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  if (a.empty()) throw DimensionError(std::string(where) + ": empty vectors");
}

}  // namespace

double l2_error(const std::vector<double>& q_sol, const std::vector<double>& c_sol) {
  check_equal_lengths(q_sol, c_sol, "l2_error");
  double acc = 0.0;
  for (std::size_t i = 0; i < q_sol.size(); ++i) {
    const double d = q_sol[i] - c_sol[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

double linf_error(const std::vector<double>& q_sol, const std::vector<double>& c_sol) {
  check_equal_lengths(q_sol, c_sol, "linf_error");
  const double qmax = *std::max_element(q_sol.begin(), q_sol.end());
  const double cmax = *std::max_element(c_sol.begin(), c_sol.end());
  return std::abs(qmax - cmax);
}

double chebyshev_error(const std::vector<double>& q_sol, const std::vector<double>& c_sol) {
  check_equal_lengths(q_sol, c_sol, "chebyshev_error");
  double m = 0.0;
  for (std::size_t i = 0; i < q_sol.size(); ++i)
    m = std::max(m, std::abs(q_sol[i] - c_sol[i]));
  return m;
}

int center_grid_index(int grid_points) {
  if (grid_points < 3) throw ConfigError("center_grid_index: grid_points must be >= 3");
  return (grid_points - 1) / 2;
}

CenterDistribution center_distribution(const std::vector<SampleSet>& samples_per_step,
                                       const FixedPointFormat& fmt, const FlowParams& params) {
  params.validate();
  CenterDistribution dist;
  dist.center_index = center_grid_index(params.grid_points);
  dist.used_lower_middle = (params.grid_points % 2 == 0);
  const std::size_t block = static_cast<std::size_t>(dist.center_index - 1);  // interior block
  const std::size_t n = static_cast<std::size_t>(fmt.precision);

  for (const SampleSet& set : samples_per_step) {
    if (static_cast<std::size_t>(set.num_vars) !=
        static_cast<std::size_t>(params.interior_points()) * n)
      throw DimensionError("center_distribution: sample set does not match grid and precision");
    std::map<double, std::uint64_t> hist;
    for (std::size_t i = 0; i < set.size(); ++i) {
      // Assemble the center block's integer (MSB first) straight from the
      // packed words; exhaustive sets are large enough to make per-entry
      // bit vectors noticeable.
      const auto w = set.state_words(i);
      std::uint64_t k = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t bit = block * n + j;
        k = (k << 1) | ((w[bit >> 6] >> (bit & 63)) & 1ull);
      }
      const double value = std::ldexp(static_cast<double>(k), fmt.radix_position - fmt.precision);
      hist[value] += set.occurrences[i];
    }
    std::vector<CenterBin> bins;
    bins.reserve(hist.size());
    for (const auto& [value, occ] : hist) bins.push_back({value, occ});
    dist.per_step.push_back(std::move(bins));
  }
  return dist;
}

void write_errors_csv(std::ostream& os, const ErrorSeries& series) {
  os << "step,strategy,n,Ngp,l2,linf,chebyshev\n";
  for (const ErrorRow& r : series.rows)
    os << r.step << ',' << strategy_name(r.strategy) << ',' << r.precision << ','
       << r.grid_points << ',' << format_double(r.l2) << ',' << format_double(r.linf) << ','
       << format_double(r.chebyshev) << '\n';
}

void write_center_csv(std::ostream& os, const CenterDistribution& dist) {
  os << "step,value,occurrences\n";
  for (std::size_t step = 0; step < dist.per_step.size(); ++step)
    for (const CenterBin& bin : dist.per_step[step])
      os << (step + 1) << ',' << format_double(bin.value) << ',' << bin.occurrences << '\n';
}

}  // namespace quboflow
