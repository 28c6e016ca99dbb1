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

#include "quboflow/channel_flow.hpp"
#include "quboflow/errors.hpp"
#include "quboflow/qubo.hpp"
#include "support/oracles.hpp"

using namespace quboflow;

namespace {

BitVector state_bits(std::uint64_t s, int m) {
  BitVector q(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b) q[static_cast<std::size_t>(b)] = (s >> b) & 1ull;
  return q;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry(rng);
  return a;
}

}  // namespace

TEST_CASE("build_qubo on hand-expanded scalar cases") {
  SUBCASE("(q - 1)^2") {
    Matrix ad(1, 1);
    ad(0, 0) = 1.0;
    const Qubo q = build_qubo(ad, {1.0});
    CHECK(q.linear == std::vector<double>{-1.0});
    CHECK(q.couplings.empty());
    CHECK(q.constant_offset == 1.0);
  }
  SUBCASE("(q1 + 0.5 q2 - 0.75)^2") {
    Matrix ad(1, 2);
    ad(0, 0) = 1.0;
    ad(0, 1) = 0.5;
    const Qubo q = build_qubo(ad, {0.75});
    REQUIRE(q.linear.size() == 2);
    CHECK(q.linear[0] == doctest::Approx(-0.5));
    CHECK(q.linear[1] == doctest::Approx(-0.5));
    REQUIRE(q.couplings.size() == 1);
    CHECK(q.coupling(0, 1).value() == doctest::Approx(1.0));
    CHECK(q.coupling(1, 0).value() == doctest::Approx(1.0));  // unordered lookup
    CHECK_FALSE(q.coupling(0, 0).has_value());
    CHECK(q.constant_offset == doctest::Approx(0.5625));
  }
  SUBCASE("dimension mismatch") {
    Matrix ad(2, 1);
    CHECK_THROWS_AS(build_qubo(ad, {1.0}), DimensionError);
  }
}

TEST_CASE("eval_energy basics") {
  Matrix ad(1, 2);
  ad(0, 0) = 1.0;
  ad(0, 1) = 0.5;
  const Qubo q = build_qubo(ad, {0.75});

  CHECK(eval_energy(q, {0, 0}) == 0.0);
  CHECK(eval_energy(q, {1, 0}) == q.linear[0]);
  CHECK(eval_energy(q, {0, 1}) == q.linear[1]);
  CHECK_THROWS_AS(eval_energy(q, {0, 0, 1}), DimensionError);
}

TEST_CASE("energy plus offset recovers the squared residual exhaustively") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 3;
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(cols) * n;
    if (m > 12) continue;

    const Matrix a = random_matrix(rng, rows, cols);
    const Matrix ad = expand_matrix(a, FixedPointFormat(n, 1));
    std::vector<double> b(rows);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (double& v : b) v = entry(rng);

    const Qubo qubo = build_qubo(ad, b);
    for (std::uint64_t s = 0; s < (1ull << m); ++s) {
      const double f = eval_energy(qubo, state_bits(s, m));
      const double res = oracles::residual_sq(ad, b, s);
      CHECK(f + qubo.constant_offset == doctest::Approx(res).epsilon(1e-9));
    }
  }
}

TEST_CASE("argmin of the energy equals argmin of the residual") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t rows = 2 + rng() % 3;
    const int m = 4 + static_cast<int>(rng() % 7);  // up to 10 bits
    const Matrix ad = random_matrix(rng, rows, static_cast<std::size_t>(m));
    std::vector<double> b(rows);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (double& v : b) v = entry(rng);
    const Qubo qubo = build_qubo(ad, b);

    double best_f = 1e300, best_r = 1e300;
    std::vector<std::uint64_t> argmin_f, argmin_r;
    for (std::uint64_t s = 0; s < (1ull << m); ++s) {
      const double f = eval_energy(qubo, state_bits(s, m));
      const double r = oracles::residual_sq(ad, b, s);
      if (f < best_f - 1e-12) {
        best_f = f;
        argmin_f = {s};
      } else if (std::abs(f - best_f) <= 1e-12) {
        argmin_f.push_back(s);
      }
      if (r < best_r - 1e-12) {
        best_r = r;
        argmin_r = {s};
      } else if (std::abs(r - best_r) <= 1e-12) {
        argmin_r.push_back(s);
      }
    }
    CHECK(argmin_f == argmin_r);
  }
}

TEST_CASE("tridiagonal source keeps couplings within two block neighbors") {
  // Column supports of a tridiagonal matrix overlap out to distance two
  // (columns c and c+2 share row c+1), so the least-squares couplings are
  // block-pentadiagonal: present up to block distance 2, absent beyond.
  FlowParams p;
  p.grid_points = 7;
  const FixedPointFormat fmt(3, 1);
  const LinearSystem sys = assemble_system(p, initial_profile(p));
  const Matrix ad = expand_matrix(sys.to_dense(), fmt);
  const Qubo qubo = build_qubo(ad, sys.rhs);

  CHECK_FALSE(qubo.couplings.empty());
  bool saw_distance_two = false;
  for (const QuboTerm& t : qubo.couplings) {
    const int block_j = t.j / fmt.precision;
    const int block_k = t.k / fmt.precision;
    CHECK(std::abs(block_j - block_k) <= 2);
    if (std::abs(block_j - block_k) == 2) saw_distance_two = true;
  }
  CHECK(saw_distance_two);
}

TEST_CASE("variable permutation leaves energies unchanged") {
  std::mt19937_64 rng(31);
  const std::size_t rows = 3;
  const int m = 6;
  const Matrix ad = random_matrix(rng, rows, static_cast<std::size_t>(m));
  std::vector<double> b = {0.3, -0.7, 1.1};
  const Qubo qubo = build_qubo(ad, b);

  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);

  Matrix ad_perm(rows, static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < rows; ++i)
    for (int j = 0; j < m; ++j)
      ad_perm(i, static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])) =
          ad(i, static_cast<std::size_t>(j));
  const Qubo qubo_perm = build_qubo(ad_perm, b);

  for (std::uint64_t s = 0; s < (1ull << m); ++s) {
    BitVector q = state_bits(s, m);
    BitVector qp(q.size());
    for (int j = 0; j < m; ++j)
      qp[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] =
          q[static_cast<std::size_t>(j)];
    CHECK(eval_energy(qubo, q) == doctest::Approx(eval_energy(qubo_perm, qp)).epsilon(1e-12));
  }
}

TEST_CASE("logical problem size and the embeddability hint") {
  CHECK(logical_problem_size(5, 8) == 24);
  CHECK(logical_problem_size(6, 8) == 32);
  CHECK(logical_problem_size(7, 8) == 40);
  CHECK(logical_problem_size(8, 7) == 42);
  CHECK(logical_problem_size(9, 6) == 42);
  CHECK(logical_problem_size(10, 5) == 40);
  CHECK(logical_problem_size(3, 1) == 1);
  CHECK_THROWS_AS(logical_problem_size(2, 4), ConfigError);

  CHECK(embeddable_hint(42));
  CHECK_FALSE(embeddable_hint(56));
  CHECK(embeddable_hint(1));
  CHECK(embeddable_hint(56, 60));
  CHECK_THROWS_AS(embeddable_hint(10, 0), ConfigError);
}

TEST_CASE("triplet text format round-trips bit-exactly") {
  FlowParams p;
  p.grid_points = 5;
  const LinearSystem sys = assemble_system(p, initial_profile(p));
  const Matrix ad = expand_matrix(sys.to_dense(), FixedPointFormat(4, 1));
  Qubo qubo = build_qubo(ad, sys.rhs);
  // Salt the landscape with awkward values.
  qubo.linear[0] = 0.1 + 0.2;  // not exactly 0.3
  qubo.linear[1] = -1.0 / 3.0;

  std::ostringstream os;
  write_qubo(os, qubo);
  std::istringstream is(os.str());
  const Qubo back = read_qubo(is);

  REQUIRE(back.num_vars == qubo.num_vars);
  CHECK(back.constant_offset == qubo.constant_offset);
  REQUIRE(back.linear.size() == qubo.linear.size());
  for (std::size_t i = 0; i < qubo.linear.size(); ++i) CHECK(back.linear[i] == qubo.linear[i]);
  REQUIRE(back.couplings.size() == qubo.couplings.size());
  for (std::size_t i = 0; i < qubo.couplings.size(); ++i) {
    CHECK(back.couplings[i].j == qubo.couplings[i].j);
    CHECK(back.couplings[i].k == qubo.couplings[i].k);
    CHECK(back.couplings[i].weight == qubo.couplings[i].weight);
  }

  // A second pass through text is byte-stable.
  std::ostringstream os2;
  write_qubo(os2, back);
  CHECK(os.str() == os2.str());
}

TEST_CASE("triplet parser rejects malformed input") {
  {
    std::istringstream is("");
    CHECK_THROWS_AS(read_qubo(is), ParseError);
  }
  {
    std::istringstream is("2 0\n1 1 not_a_number\n");
    CHECK_THROWS_AS(read_qubo(is), ParseError);
  }
  {
    std::istringstream is("2 0\n3 3 1.5\n");
    CHECK_THROWS_AS(read_qubo(is), ParseError);
  }
}
