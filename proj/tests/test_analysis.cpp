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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "quboflow/analysis.hpp"
#include "quboflow/errors.hpp"
#include "quboflow/samplers.hpp"

using namespace quboflow;

TEST_CASE("l2 error") {
  CHECK(l2_error({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}) == 0.0);
  CHECK(l2_error({1.0, 0.0}, {0.0, 0.0}) == 1.0);
  CHECK(l2_error({0.5, 0.5, 0.5}, {0.1, 0.2, 0.3}) == doctest::Approx(std::sqrt(0.29)));
  CHECK_THROWS_AS(l2_error({1.0}, {1.0, 2.0}), DimensionError);
}

TEST_CASE("linf error is the difference of maxima, not the Chebyshev norm") {
  CHECK(linf_error({0.0, 2.0, 0.0}, {0.0, 1.0, 0.0}) == 1.0);
  CHECK(linf_error({1.0, 2.0}, {1.0, 2.0}) == 0.0);

  // A bimodal profile against a parabolic one separates the two notions.
  const std::vector<double> bimodal = {0.0, 3.0, 0.0, 3.0, 0.0};
  const std::vector<double> parabolic = {0.0, 1.0, 2.0, 1.0, 0.0};
  CHECK(linf_error(bimodal, parabolic) == 1.0);
  CHECK(chebyshev_error(bimodal, parabolic) == 2.0);
}

TEST_CASE("error metric inequalities hold on random vectors") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> entry(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = entry(rng);
      b[i] = entry(rng);
    }
    const double l2 = l2_error(a, b);
    const double cheb = chebyshev_error(a, b);
    CHECK(l2 >= cheb);
    CHECK(cheb >= 0.0);
    CHECK(linf_error(a, b) >= 0.0);
    // Zero iff conditions.
    CHECK((l2 == 0.0) == (a == b));
    const double amax = *std::max_element(a.begin(), a.end());
    const double bmax = *std::max_element(b.begin(), b.end());
    CHECK((linf_error(a, b) == 0.0) == (amax == bmax));
  }
}

TEST_CASE("center index picks the middle, or lower-middle for even grids") {
  CHECK(center_grid_index(5) == 2);
  CHECK(center_grid_index(9) == 4);
  CHECK(center_grid_index(6) == 2);   // lower middle of interior 1..4
  CHECK(center_grid_index(10) == 4);
  CHECK_THROWS_AS(center_grid_index(2), ConfigError);
}

TEST_CASE("center distribution bins decoded center values") {
  FlowParams p;
  p.grid_points = 5;
  const FixedPointFormat fmt(2, 1);
  const LinearSystem sys = assemble_system(p, initial_profile(p));
  const Matrix ad = expand_matrix(sys.to_dense(), fmt);
  const Qubo qubo = build_qubo(ad, sys.rhs);

  SUBCASE("exhaustive enumeration fills every representable bin evenly") {
    const SampleSet set = sample_exhaustive(qubo);
    const CenterDistribution dist = center_distribution({set}, fmt, p);
    CHECK(dist.center_index == 2);
    CHECK_FALSE(dist.used_lower_middle);
    REQUIRE(dist.per_step.size() == 1);
    const auto& bins = dist.per_step[0];
    REQUIRE(bins.size() == 4);
    const double expected_values[] = {0.0, 0.5, 1.0, 1.5};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(bins[i].value == expected_values[i]);
      CHECK(bins[i].occurrences == 16);  // 64 states / 4 codes
    }
  }

  SUBCASE("occurrences are conserved across steps") {
    SamplerConfig cfg;
    cfg.num_reads = 500;
    cfg.seed = 3;
    cfg.sweeps = 50;
    const SampleSet s1 = sample_annealing(qubo, cfg);
    cfg.seed = 4;
    const SampleSet s2 = sample_annealing(qubo, cfg);
    const CenterDistribution dist = center_distribution({s1, s2}, fmt, p);
    REQUIRE(dist.per_step.size() == 2);
    for (const auto& bins : dist.per_step) {
      std::uint64_t total = 0;
      for (const auto& bin : bins) total += bin.occurrences;
      CHECK(total == 500);
    }
  }

  SUBCASE("all-zero reads collapse to a single zero bin") {
    SampleSet zero = SampleSet::empty(qubo.num_vars);
    zero.words = {0};
    zero.energies = {0.0};
    zero.occurrences = {500};
    zero.num_reads = 500;
    const CenterDistribution dist = center_distribution({zero}, fmt, p);
    REQUIRE(dist.per_step.size() == 1);
    REQUIRE(dist.per_step[0].size() == 1);
    CHECK(dist.per_step[0][0].value == 0.0);
    CHECK(dist.per_step[0][0].occurrences == 500);
  }
}

TEST_CASE("csv writers emit deterministic rows") {
  ErrorSeries series;
  series.rows.push_back({1, Strategy::kLowestEnergy, 4, 5, 0.5, 0.25, 0.375});
  std::ostringstream es;
  write_errors_csv(es, series);
  CHECK(es.str() == "step,strategy,n,Ngp,l2,linf,chebyshev\n1,lowest,4,5,0.5,0.25,0.375\n");

  CenterDistribution dist;
  dist.per_step.push_back({{0.0, 3}, {0.5, 1}});
  std::ostringstream cs;
  write_center_csv(cs, dist);
  CHECK(cs.str() == "step,value,occurrences\n1,0,3\n1,0.5,1\n");
}
