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

#include <cmath>

#include "quboflow/channel_flow.hpp"
#include "quboflow/errors.hpp"
#include "quboflow/samplers.hpp"
#include "quboflow/selection.hpp"
#include "support/oracles.hpp"

using namespace quboflow;

namespace {

// Hand-assembled sample set over explicit states with given counts. Energies
// are synthetic but ordered by list position.
SampleSet make_set(int num_vars, const std::vector<std::pair<BitVector, std::uint64_t>>& entries) {
  SampleSet set = SampleSet::empty(num_vars);
  double energy = 0.0;
  for (const auto& [bits, occ] : entries) {
    const auto words = pack_bits(bits);
    set.words.insert(set.words.end(), words.begin(), words.end());
    set.energies.push_back(energy);
    set.occurrences.push_back(occ);
    set.num_reads += occ;
    energy += 1.0;
  }
  return set;
}

}  // namespace

TEST_CASE("strategy names round-trip") {
  for (Strategy s : {Strategy::kLowestEnergy, Strategy::kUnweightedMean, Strategy::kWeightedMean})
    CHECK(strategy_from_name(strategy_name(s)) == s);
  CHECK_THROWS_AS(strategy_from_name("best"), ConfigError);
}

TEST_CASE("single-entry sample sets make every strategy coincide") {
  const FixedPointFormat fmt(2, 1);
  const SampleSet set = make_set(2, {{{1, 0}, 7}});
  for (Strategy s : {Strategy::kLowestEnergy, Strategy::kUnweightedMean, Strategy::kWeightedMean}) {
    const auto v = select(set, s, fmt, 1);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == 1.0);
  }
}

TEST_CASE("mean strategies follow their definitions on a two-state set") {
  const FixedPointFormat fmt(2, 1);
  // States decode to 1.0 (x3 occurrences) and 0.5 (x1).
  const SampleSet set = make_set(2, {{{1, 0}, 3}, {{0, 1}, 1}});

  CHECK(select(set, Strategy::kLowestEnergy, fmt, 1)[0] == 1.0);
  CHECK(select(set, Strategy::kUnweightedMean, fmt, 1)[0] == doctest::Approx(0.75));
  CHECK(select(set, Strategy::kWeightedMean, fmt, 1)[0] == doctest::Approx(0.875));
}

TEST_CASE("a dominant zero state pulls the weighted mean toward zero") {
  const FixedPointFormat fmt(2, 1);
  const SampleSet set = make_set(2, {{{0, 0}, 9999}, {{1, 1}, 1}});
  const double wmean = select(set, Strategy::kWeightedMean, fmt, 1)[0];
  const double umean = select(set, Strategy::kUnweightedMean, fmt, 1)[0];
  CHECK(wmean == doctest::Approx(0.00015));
  CHECK(umean == doctest::Approx(0.75));
  CHECK(wmean < umean);
}

TEST_CASE("weighted mean is invariant under splitting an entry") {
  const FixedPointFormat fmt(2, 1);
  const SampleSet one = make_set(2, {{{1, 0}, 6}, {{0, 1}, 2}});
  // Same multiset of reads, first entry split in two.
  const SampleSet split = make_set(2, {{{1, 0}, 3}, {{1, 0}, 3}, {{0, 1}, 2}});
  CHECK(select(one, Strategy::kWeightedMean, fmt, 1)[0] ==
        doctest::Approx(select(split, Strategy::kWeightedMean, fmt, 1)[0]).epsilon(1e-15));
}

TEST_CASE("equal occurrences make both means agree") {
  const FixedPointFormat fmt(3, 1);
  const SampleSet set =
      make_set(3, {{{0, 0, 1}, 5}, {{0, 1, 0}, 5}, {{1, 1, 1}, 5}});
  const auto wm = select(set, Strategy::kWeightedMean, fmt, 1);
  const auto um = select(set, Strategy::kUnweightedMean, fmt, 1);
  CHECK(wm[0] == doctest::Approx(um[0]).epsilon(1e-15));
}

TEST_CASE("decode-then-average equals average-then-decode") {
  const FixedPointFormat fmt(4, 1);
  const SampleSet set = make_set(
      8, {{{1, 0, 0, 1, 0, 1, 1, 0}, 2}, {{0, 1, 1, 0, 1, 0, 0, 1}, 3}, {{1, 1, 1, 1, 0, 0, 0, 0}, 1}});

  const auto um = select(set, Strategy::kUnweightedMean, fmt, 2);
  // Other route: average the bit vectors as reals, then apply the weights.
  for (std::size_t c = 0; c < 2; ++c) {
    double v = 0.0;
    for (int j = 0; j < fmt.precision; ++j) {
      double avg_bit = 0.0;
      for (std::size_t i = 0; i < set.size(); ++i)
        avg_bit += set.state(i)[c * 4 + static_cast<std::size_t>(j)];
      avg_bit /= static_cast<double>(set.size());
      v += fmt.weight(j + 1) * avg_bit;
    }
    CHECK(um[c] == doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("lowest-energy choice is invariant under positive coefficient scaling") {
  FlowParams p;
  p.grid_points = 5;
  const LinearSystem sys = assemble_system(p, initial_profile(p));
  const FixedPointFormat fmt(3, 1);
  const Matrix ad = expand_matrix(sys.to_dense(), fmt);
  const Qubo qubo = build_qubo(ad, sys.rhs);

  Qubo scaled = qubo;
  for (double& v : scaled.linear) v *= 4.0;
  for (auto& t : scaled.couplings) t.weight *= 4.0;
  scaled.constant_offset *= 4.0;

  const SampleSet a = sample_exhaustive(qubo);
  const SampleSet b = sample_exhaustive(scaled);
  CHECK(select(a, Strategy::kLowestEnergy, fmt, 3) ==
        select(b, Strategy::kLowestEnergy, fmt, 3));
}

TEST_CASE("select_profile reattaches zero boundaries") {
  FlowParams p;
  p.grid_points = 5;
  const FixedPointFormat fmt(4, 1);
  const LinearSystem sys = assemble_system(p, initial_profile(p));
  const Matrix ad = expand_matrix(sys.to_dense(), fmt);
  const Qubo qubo = build_qubo(ad, sys.rhs);
  const SampleSet set = sample_exhaustive(qubo);

  for (Strategy s : {Strategy::kLowestEnergy, Strategy::kUnweightedMean, Strategy::kWeightedMean}) {
    const SolutionProfile prof = select_profile(set, s, fmt, p, 1);
    REQUIRE(prof.values.size() == 5);
    CHECK(prof.values.front() == 0.0);
    CHECK(prof.values.back() == 0.0);
    CHECK(prof.time_index == 1);
    for (double v : prof.values) {
      CHECK(v >= 0.0);
      CHECK(v <= fmt.max_value());
    }
  }

  // The lowest-energy profile equals the residual-minimizing representable
  // profile from the independent oracle.
  const oracles::BlsResult best = oracles::brute_force_bls(5, p.alpha, sys.rhs, 4, 1);
  const SolutionProfile lowest = select_profile(set, Strategy::kLowestEnergy, fmt, p, 1);
  for (int c = 0; c < 3; ++c)
    CHECK(lowest.values[static_cast<std::size_t>(c + 1)] ==
          doctest::Approx(oracles::decode_block(best.state, c, 4, 1)).epsilon(1e-15));
}

TEST_CASE("empty sample sets are rejected") {
  const SampleSet set = SampleSet::empty(4);
  CHECK_THROWS_AS(select(set, Strategy::kLowestEnergy, FixedPointFormat(2, 1), 2), ConfigError);
  CHECK_THROWS_AS(
      select(make_set(4, {{{1, 0, 0, 0}, 1}}), Strategy::kLowestEnergy, FixedPointFormat(3, 1), 2),
      DimensionError);
}
